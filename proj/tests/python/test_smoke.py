import pytest

import nutforge


def test_worked_example_ell():
    g = nutforge.named_graph("g10_example")
    report = nutforge.compute_ell(g, [1, 2, 3, 6, 7, 10])
    assert report["alpha"] == 10
    assert report["beta"] == 18
    assert report["ell"] == 19
    assert report["factor_orders"] == [2, 3, 6, 8, 12, 18]


def test_direct_certification():
    cert = nutforge.is_nut(nutforge.named_graph("frucht_f3"))
    assert cert["is_nut"]
    assert cert["degree"] == 3
    assert cert["nullity"] == 1
    assert all(e != 0 for e in cert["kernel_vector"])

    c4 = nutforge.circulant(4, [1])
    cert = nutforge.is_nut(c4)
    assert not cert["is_nut"]
    assert cert["nullity"] == 2
    assert cert["failure_reason"]["kind"] == "nullity_not_one"


def test_circulant_route():
    cert = nutforge.circulant_is_nut(10, [3, 4])
    assert cert["is_nut"]
    assert cert["route"] == "circulant-cyclotomic"
    assert cert["kernel_vector"] == [1, -1] * 5


def test_product_routes_agree():
    d10 = nutforge.circulant(*nutforge.d_family(10, 1))
    f5 = nutforge.named_graph("f5")
    direct = nutforge.product_is_nut(d10, f5, "direct")
    poly = nutforge.product_is_nut(d10, f5, "polynomial")
    assert direct["is_nut"] and poly["is_nut"]
    assert direct["kernel_vector"] == poly["kernel_vector"]
    assert direct["order"] == 100


def test_charpoly_display():
    coeffs = nutforge.charpoly(nutforge.named_graph("frucht_f3"))
    assert coeffs == [0, -48, -68, 244, 309, -226, -309, 66, 115, -6, -18, 0, 1]
    assert nutforge.circulant_charpoly(10, [3, 4]) == nutforge.charpoly(
        nutforge.circulant(10, [3, 4])
    )


def test_graph6_round_trip():
    k2 = nutforge.named_graph("k2")
    assert nutforge.graph6_encode(k2) == "A_"
    g10 = nutforge.named_graph("g10_example")
    back = nutforge.graph6_decode(nutforge.graph6_encode(g10))
    assert back.edges == g10.edges
    with pytest.raises(ValueError):
        nutforge.graph6_decode("A!")


def test_cyclotomic():
    assert nutforge.cyclotomic(6) == [1, -1, 1]
    assert nutforge.cyclotomic_factors([-1, 0, 1]) == [1, 2]
    assert nutforge.euler_phi(18) == 6


def test_feasible():
    assert nutforge.feasible("circ", 8, 14) == "member"
    assert nutforge.feasible("circ", 8, 16) == "non-member"
    assert nutforge.feasible("vt", 6, 12) == "unknown-beyond-theorems"
    with pytest.raises(ValueError):
        nutforge.feasible("reg3", 4, 12)


def test_families():
    assert nutforge.d_family(14, 2) == (14, [1, 4, 5, 6])
    graph, cert = nutforge.cayley_family(10, 1)
    assert graph.n == 20
    assert cert["is_nut"]
    assert cert["degree"] == 6

    reports = nutforge.caux_scan(3)
    assert all(r["violations"] == [] for r in reports)

    cell = nutforge.conjecture_check("ii", 1)
    assert cell["is_nut"]
    assert cell["order"] == 120


def test_build_main_lemma():
    g = nutforge.named_graph("g10_example")
    product, cert = nutforge.build_main_lemma(g, [1, 2, 3, 6, 7, 10], 19)
    assert product.n == 380
    assert cert["is_nut"]
    assert cert["degree"] == 17
    with pytest.raises(ValueError):
        nutforge.build_main_lemma(g, [1, 2, 3, 6, 7, 10], 18)
