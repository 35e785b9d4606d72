#include "nutforge/families.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/nutcert.hpp"
#include "nutforge/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace nutforge;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_jumps(const std::string& list) {
  std::vector<int> jumps;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty())
      throw std::invalid_argument("invalid jump '" + token + "' in list");
    jumps.push_back(value);
  }
  if (jumps.empty()) throw std::invalid_argument("empty jump list");
  return jumps;
}

Graph parse_graph(const std::string& text) {
  constexpr std::string_view kNamedPrefix = "named:";
  if (text.rfind(kNamedPrefix, 0) == 0)
    return named_graph(text.substr(kNamedPrefix.size()));
  return graph6_decode(text);
}

void emit(const json& payload, bool as_json, const std::string& human) {
  if (as_json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human;
}

std::string describe_certificate(const NutCertificate& cert) {
  std::ostringstream out;
  out << "nut graph: " << (cert.is_nut ? "yes" : "no") << "\n";
  out << "order: " << cert.order << "\n";
  if (cert.degree)
    out << "degree: " << *cert.degree << "\n";
  else
    out << "degree: irregular\n";
  out << "nullity: " << cert.nullity << "\n";
  out << "route: " << to_string(cert.route) << "\n";
  if (cert.kernel_vector) {
    out << "kernel:";
    for (const auto& e : *cert.kernel_vector) out << " " << e.get_str();
    out << "\n";
  }
  if (cert.failure_reason) {
    out << "failure: " << to_string(cert.failure_reason->kind);
    if (!cert.failure_reason->witness_orders.empty()) {
      out << " (orders";
      for (unsigned long b : cert.failure_reason->witness_orders) out << " " << b;
      out << ")";
    }
    if (cert.failure_reason->witness_factor)
      out << " (shared factor " << cert.failure_reason->witness_factor->to_string()
          << ")";
    out << "\n";
  }
  return out.str();
}

int finish_with_certificate(const NutCertificate& cert, bool as_json) {
  emit(certificate_json(cert), as_json, describe_certificate(cert));
  return cert.is_nut ? kExitOk : kExitPropertyFailure;
}

struct GenOutput {
  Graph graph;
  std::optional<NutCertificate> certificate;
};

int finish_gen(const GenOutput& output, bool as_json) {
  const std::string g6 = graph6_encode(output.graph);
  if (as_json) {
    json payload;
    payload["graph6"] = g6;
    payload["order"] = output.graph.n;
    if (auto d = output.graph.regular_degree())
      payload["degree"] = *d;
    else
      payload["degree"] = "irregular";
    if (output.certificate)
      payload["certificate"] = certificate_json(*output.certificate);
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << g6 << "\n";
    if (output.certificate) std::cout << describe_certificate(*output.certificate);
  }
  if (output.certificate && !output.certificate->is_nut) return kExitPropertyFailure;
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"exact construction and certification of regular nut graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON on stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "certify a graph with the direct kernel route");
  std::string verify_graph, verify_file;
  verify->add_option("graph", verify_graph, "graph6 string or named:NAME");
  verify->add_option("--file", verify_file, "read the graph6 string from a file");

  // gen
  auto* gen = app.add_subcommand("gen", "construct graphs and emit graph6");
  gen->require_subcommand(1);
  bool certify = false;
  gen->add_flag("--certify", certify, "attach a nut certificate");

  auto* gen_circ = gen->add_subcommand("circulant", "Circ(n, S)");
  int circ_n = 0;
  std::string circ_jumps;
  gen_circ->add_option("--n", circ_n, "order")->required();
  gen_circ->add_option("--jumps", circ_jumps, "comma-separated jumps")->required();

  auto* gen_named = gen->add_subcommand("named", "a fixture graph by name");
  std::string named_name;
  gen_named->add_option("name", named_name, "frucht_f3 | f5 | g10_example | k2")
      ->required();

  auto* gen_product = gen->add_subcommand("product", "cartesian product of two graphs");
  std::string prod_a, prod_b;
  gen_product->add_option("a", prod_a, "graph6 or named:NAME")->required();
  gen_product->add_option("b", prod_b, "graph6 or named:NAME")->required();

  auto* gen_dfam = gen->add_subcommand("dfam", "the 4t-regular circulant family member");
  int dfam_n = 0, dfam_t = 0;
  gen_dfam->add_option("--n", dfam_n, "order, 2 (mod 4), >= 4t+6")->required();
  gen_dfam->add_option("--t", dfam_t, "family parameter")->required();

  auto* gen_cayfam = gen->add_subcommand("cayfam", "the (4t+2)-regular Cayley family member");
  int cay_m = 0, cay_t = 0;
  gen_cayfam->add_option("--m", cay_m, "ring order, 2 (mod 4), >= 4t+6")->required();
  gen_cayfam->add_option("--t", cay_t, "family parameter")->required();

  // ell
  auto* ell = app.add_subcommand("ell", "admissible-prime threshold for the product construction");
  std::string ell_graph, ell_jumps;
  bool build_first_prime = false;
  ell->add_option("--graph", ell_graph, "graph6 or named:NAME")->required();
  ell->add_option("--jumps", ell_jumps, "comma-separated jumps, equally many odd and even")
      ->required();
  ell->add_flag("--build-first-prime", build_first_prime,
                "construct and certify the product at the smallest admissible prime");

  // caux
  auto* caux = app.add_subcommand("caux", "cyclotomic scan of the auxiliary polynomial pair");
  int caux_t_max = 0;
  caux->add_option("--t-max", caux_t_max, "scan t = 1..t_max")->required();

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "certify conjecture cells");
  std::string variant_name;
  int t_min = 1, t_max = 1;
  conjecture->add_option("--variant", variant_name, "i | ii | iii")->required();
  conjecture->add_option("--t-min", t_min, "first t")->required();
  conjecture->add_option("--t-max", t_max, "last t")->required();

  // feasible
  auto* feas = app.add_subcommand("feasible", "closed-form order-degree feasibility");
  std::string family_name;
  int feas_d = 0, feas_n = 0;
  feas->add_option("--family", family_name, "reg3..reg12 | circ | vt | cay")->required();
  feas->add_option("--d", feas_d, "degree")->required();
  feas->add_option("--n", feas_n, "order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (verify->parsed()) {
    std::string text = verify_graph;
    if (!verify_file.empty()) {
      std::ifstream in(verify_file);
      if (!in) throw std::invalid_argument("cannot open file '" + verify_file + "'");
      std::getline(in, text);
    }
    if (text.empty())
      throw std::invalid_argument("verify: pass a graph6 string or --file PATH");
    return finish_with_certificate(is_nut(parse_graph(text)), as_json);
  }

  if (gen->parsed()) {
    GenOutput output;
    if (gen_circ->parsed()) {
      const CirculantSpec spec(circ_n, parse_jumps(circ_jumps));
      output.graph = circulant(spec);
      if (certify) output.certificate = circulant_is_nut(spec);
    } else if (gen_named->parsed()) {
      output.graph = named_graph(named_name);
      if (certify) output.certificate = is_nut(output.graph);
    } else if (gen_product->parsed()) {
      output.graph = cartesian_product(parse_graph(prod_a), parse_graph(prod_b));
      if (certify) output.certificate = is_nut(output.graph);
    } else if (gen_dfam->parsed()) {
      const CirculantSpec spec = d_family(dfam_n, dfam_t);
      output.graph = circulant(spec);
      if (certify) output.certificate = circulant_is_nut(spec);
    } else {
      auto result = cayley_family(cay_m, cay_t);
      output.graph = std::move(result.graph);
      if (certify) output.certificate = std::move(result.certificate);
    }
    return finish_gen(output, as_json);
  }

  if (ell->parsed()) {
    const Graph g = parse_graph(ell_graph);
    const JumpSet s(parse_jumps(ell_jumps));
    const EllReport report = compute_ell(g, s);
    json payload = ell_report_json(report);
    std::ostringstream human;
    human << "alpha=" << report.alpha << " beta=" << report.beta
          << " ell=" << report.ell << "\n";
    human << "factor orders:";
    for (unsigned long b : report.factor_orders.orders) human << " " << b;
    human << "\nscanned degree: " << report.r_degree << "\n";
    int exit_code = kExitOk;
    if (build_first_prime) {
      int p = static_cast<int>(report.ell);
      while (!is_prime(p)) ++p;
      const auto [graph, cert] = build_main_lemma(g, s, p);
      payload["prime"] = p;
      payload["graph6"] = graph6_encode(graph);
      payload["certificate"] = certificate_json(cert);
      human << "prime: " << p << "\n" << graph6_encode(graph) << "\n"
            << describe_certificate(cert);
      if (!cert.is_nut) exit_code = kExitPropertyFailure;
    }
    emit(payload, as_json, human.str());
    return exit_code;
  }

  if (caux->parsed()) {
    const auto reports = caux_scan(caux_t_max);
    json payload = json::array();
    std::ostringstream human;
    bool violated = false;
    for (const auto& report : reports) {
      payload.push_back(caux_report_json(report));
      human << "t=" << report.t << ": p1 orders";
      for (unsigned long b : report.p1.orders.orders) human << " " << b;
      human << ", p2 orders";
      for (unsigned long b : report.p2.orders.orders) human << " " << b;
      if (report.violations.empty()) {
        human << ", no violations\n";
      } else {
        human << ", VIOLATIONS:";
        for (unsigned long b : report.violations) human << " " << b;
        human << "\n";
        violated = true;
      }
    }
    emit(payload, as_json, human.str());
    return violated ? kExitPropertyFailure : kExitOk;
  }

  if (conjecture->parsed()) {
    ConjectureVariant variant;
    if (variant_name == "i") variant = ConjectureVariant::i;
    else if (variant_name == "ii") variant = ConjectureVariant::ii;
    else if (variant_name == "iii") variant = ConjectureVariant::iii;
    else throw std::invalid_argument("conjecture: unknown variant '" + variant_name + "'");
    if (t_min < 1 || t_max < t_min)
      throw std::invalid_argument("conjecture: need 1 <= t-min <= t-max");
    json payload = json::array();
    std::ostringstream human;
    bool all_nut = true;
    for (int t = t_min; t <= t_max; ++t) {
      const bool admissible =
          (variant == ConjectureVariant::i) ||
          (variant == ConjectureVariant::ii && t % 3 != 0) ||
          (variant == ConjectureVariant::iii && t % 3 == 0);
      if (!admissible) {
        human << "t=" << t << ": skipped (t belongs to variant "
              << (variant == ConjectureVariant::ii ? "iii" : "ii") << ")\n";
        continue;
      }
      const NutCertificate cert = conjecture_check(ConjectureCase(variant, t));
      json cell;
      cell["t"] = t;
      cell["certificate"] = certificate_json(cert);
      payload.push_back(std::move(cell));
      human << "t=" << t << ": order " << cert.order << ", degree "
            << (cert.degree ? std::to_string(*cert.degree) : "irregular") << ", "
            << (cert.is_nut ? "nut" : "NOT a nut") << " ("
            << to_string(cert.route) << ")\n";
      if (!cert.is_nut) all_nut = false;
    }
    emit(payload, as_json, human.str());
    return all_nut ? kExitOk : kExitPropertyFailure;
  }

  // feasible
  const auto family = parse_feasibility_family(family_name);
  if (!family)
    throw std::invalid_argument("feasible: unknown family '" + family_name + "'");
  const Feasibility verdict = feasible({*family, feas_d, feas_n});
  json payload;
  payload["family"] = family_name;
  payload["d"] = feas_d;
  payload["n"] = feas_n;
  payload["verdict"] = to_string(verdict);
  emit(payload, as_json, to_string(verdict) + "\n");
  return verdict == Feasibility::non_member ? kExitPropertyFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
