#include "nutforge/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nutforge {

ExactMatrix::ExactMatrix(int order)
    : n(order), entries(static_cast<std::size_t>(order) * order, mpz_class(0)) {
  if (order < 0) throw std::invalid_argument("ExactMatrix: negative order");
}

std::vector<mpz_class> canonical_primitive(std::vector<mpz_class> v) {
  mpz_class g = 0;
  for (const auto& e : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return v;
  for (const auto& e : v) {
    if (e == 0) continue;
    if (e < 0) g = -g;
    break;
  }
  for (auto& e : v)
    mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  return v;
}

KernelResult nullity_kernel(const ExactMatrix& a) {
  const int n = a.n;
  std::vector<mpz_class> m = a.entries;
  auto at = [&](int i, int j) -> mpz_class& {
    return m[static_cast<std::size_t>(i) * n + j];
  };

  // Fraction-free row echelon form. Columns without a pivot are free;
  // the exact-division property of the Bareiss step is preserved when
  // pivotless columns are skipped.
  std::vector<int> pivot_col;
  pivot_col.reserve(static_cast<std::size_t>(n));
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i) {
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(rank, j));
    }
    for (int i = rank + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        mpz_class t = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    pivot_col.push_back(col);
    ++rank;
  }

  KernelResult result;
  result.nullity = n - rank;
  if (result.nullity != 1) return result;

  int free_col = -1;
  {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < n; ++c) {
      if (!is_pivot[static_cast<std::size_t>(c)]) {
        free_col = c;
        break;
      }
    }
  }

  // Back-substitute over the rationals with the free variable set to 1,
  // then clear denominators.
  std::vector<mpq_class> v(static_cast<std::size_t>(n), mpq_class(0));
  v[static_cast<std::size_t>(free_col)] = 1;
  for (int i = rank - 1; i >= 0; --i) {
    const int p = pivot_col[static_cast<std::size_t>(i)];
    mpq_class s = 0;
    for (int j = p + 1; j < n; ++j) {
      if (at(i, j) != 0 && v[static_cast<std::size_t>(j)] != 0)
        s += mpq_class(at(i, j)) * v[static_cast<std::size_t>(j)];
    }
    v[static_cast<std::size_t>(p)] = -s / mpq_class(at(i, p));
  }
  mpz_class denom_lcm = 1;
  for (const auto& q : v)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            q.get_den().get_mpz_t());
  std::vector<mpz_class> kernel(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    mpq_class scaled = v[static_cast<std::size_t>(i)] * mpq_class(denom_lcm);
    kernel[static_cast<std::size_t>(i)] = scaled.get_num();
  }
  kernel = canonical_primitive(std::move(kernel));

  // A * v = 0 must hold exactly; anything else is an elimination bug.
  for (int i = 0; i < n; ++i) {
    mpz_class dot = 0;
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) != 0) dot += a.at(i, j) * kernel[static_cast<std::size_t>(j)];
    }
    if (dot != 0) throw std::logic_error("nullity_kernel: kernel verification failed");
  }

  result.full = std::all_of(kernel.begin(), kernel.end(),
                            [](const mpz_class& e) { return e != 0; });
  result.kernel_vector = std::move(kernel);
  return result;
}

IntPoly charpoly(const ExactMatrix& a) {
  const int n = a.n;
  // Coefficients in descending order; c has length r+1 after round r.
  std::vector<mpz_class> c{mpz_class(1)};
  std::vector<mpz_class> s, w, wn, nc;
  for (int r = 1; r <= n; ++r) {
    s.assign(static_cast<std::size_t>(r) + 1, mpz_class(0));
    s[0] = 1;
    s[1] = -a.at(r - 1, r - 1);
    // s[k] = -(row . M^(k-2) . col) for the leading principal block M.
    w.assign(static_cast<std::size_t>(r) - 1, mpz_class(0));
    for (int i = 0; i < r - 1; ++i) w[static_cast<std::size_t>(i)] = a.at(i, r - 1);
    for (int k = 2; k <= r; ++k) {
      mpz_class dot = 0;
      for (int i = 0; i < r - 1; ++i) {
        if (a.at(r - 1, i) != 0) dot += a.at(r - 1, i) * w[static_cast<std::size_t>(i)];
      }
      s[static_cast<std::size_t>(k)] = -dot;
      if (k == r) break;
      wn.assign(static_cast<std::size_t>(r) - 1, mpz_class(0));
      for (int i = 0; i < r - 1; ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < r - 1; ++j) {
          if (a.at(i, j) != 0) acc += a.at(i, j) * w[static_cast<std::size_t>(j)];
        }
        wn[static_cast<std::size_t>(i)] = std::move(acc);
      }
      w.swap(wn);
    }
    nc.assign(static_cast<std::size_t>(r) + 1, mpz_class(0));
    for (int i = 0; i <= r; ++i) {
      mpz_class acc = 0;
      for (int k = 0; k <= i && k <= r; ++k) {
        const int idx = i - k;
        if (idx < static_cast<int>(c.size()) && s[static_cast<std::size_t>(k)] != 0)
          acc += s[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(idx)];
      }
      nc[static_cast<std::size_t>(i)] = std::move(acc);
    }
    c.swap(nc);
  }
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

}  // namespace nutforge
