import json
from fractions import Fraction

import pytest

from alpha_spectra.alpha import adjacency_charpoly, alpha_charpoly, coronal
from alpha_spectra.cospectral import (
    are_cospectral,
    certify_nonisomorphic,
    cor33_pair,
    cor34_pair,
    cor42_pair,
    cor43_pair,
    find_cospectral_pairs,
    find_equal_coronal_pairs,
    find_isomorphism,
    regular_alpha_from_adjacency,
)
from alpha_spectra.errors import HypothesisError
from alpha_spectra.graph6 import parse_graph6
from alpha_spectra.graphs import Graph, complete, cycle, from_shorthand, regular_degree
from alpha_spectra.poly import Poly, RatFunc

from conftest import DATA, oracle_poly, regular_corpus, small_corpus

STAR, SALTIRE = from_shorthand("K1,4"), from_shorthand("C4uK1")
HALF = Fraction(1, 2)
SEARCH = json.loads((DATA / "search_results.json").read_text())


def regular_pair(index=0):
    return [parse_graph6(s) for s in SEARCH["regular_adjacency_cospectral"][index]["graph6"][:2]]


def test_are_cospectral_examples():
    assert are_cospectral(STAR, SALTIRE, 0)
    assert alpha_charpoly(STAR, 0) == Poly([0, 0, 0, -4, 0, 1])
    assert not are_cospectral(STAR, SALTIRE, HALF)
    assert are_cospectral(cycle(5), cycle(5), Fraction(3, 7))


def test_certify_examples():
    w = certify_nonisomorphic(STAR, SALTIRE)
    assert w.kind == "degree_sequence" and w.nonisomorphic
    assert "(4, 1, 1, 1, 1)" in w.detail and "(2, 2, 2, 2, 0)" in w.detail
    w = certify_nonisomorphic(complete(3), cycle(3))
    assert w.kind == "isomorphic" and complete(3).relabel(w.mapping) == cycle(3)
    assert certify_nonisomorphic(complete(3), complete(4)).kind == "different_order"


def test_permutation_witness():
    # two cubic graphs on 6 vertices: prism and K3,3
    two_triangles = from_shorthand("C3uC3")
    prism = Graph.from_edges(6, list(two_triangles.edges) + [(0, 3), (1, 4), (2, 5)])
    w = certify_nonisomorphic(prism, from_shorthand("K3,3"))
    assert w.kind == "permutation_exhausted"
    big = cycle(11)
    assert certify_nonisomorphic(big, big).kind == "unverified"


def test_isomorphism_search_on_relabelings(rng):
    for g in small_corpus()[200:260]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        phi = find_isomorphism(g, h)
        assert phi is not None and g.relabel(phi) == h


@pytest.mark.parametrize("h,order", [("K1", 10), ("K2", 15)])
def test_cor33_certificates(h, order):
    cert = cor33_pair(STAR, SALTIRE, [from_shorthand(h)] * 5, 0)
    assert cert.g1.n == order and cert.established
    assert cert.witness.kind == "degree_sequence"
    assert cert.charpoly == oracle_poly("products", f"cor33 K1,4 o {h} @0")
    assert cert.charpoly == oracle_poly("products", f"cor33 C4uK1 o {h} @0")
    assert cert.charpoly.to_json() == alpha_charpoly(cert.g2, 0).to_json()
    assert regular_degree(cert.g1) is None and regular_degree(cert.g2) is None
    d = cert.to_json()
    assert d["g1"]["graph6"] and d["nonisomorphism"]["kind"] == "degree_sequence"


def test_cor33_refusals():
    with pytest.raises(HypothesisError, match="not A_α-cospectral"):
        cor33_pair(STAR, SALTIRE, [complete(1)] * 5, HALF)
    with pytest.raises(HypothesisError, match="order"):
        cor33_pair(STAR, SALTIRE, [complete(1)] * 4 + [complete(2)], 0)
    with pytest.raises(HypothesisError, match="coronal"):
        cor33_pair(STAR, SALTIRE, [complete(2)] * 4 + [from_shorthand("E2")], 0)


def test_cor33_products_nonregular_for_regular_base():
    g1, g2 = regular_pair()
    cert = cor33_pair(g1, g2, [complete(2)] * g1.n, Fraction(1, 3))
    r = regular_degree(g1)
    for g in (cert.g1, cert.g2):
        assert regular_degree(g) is None
        assert set(g.degrees) == {r + 2, 2}


def test_cor34_degenerate_isomorphic():
    cert = cor34_pair(cycle(3), [complete(2)] * 6, Fraction(1, 5))
    assert cert.witness.kind == "isomorphic" and not cert.established


def test_cor34_refuses_unequal_coronals():
    assert coronal(STAR, 0) == RatFunc(Poly([8, 5]), Poly([-4, 0, 1]))
    assert coronal(SALTIRE, 0) == RatFunc(Poly([-2, 5]), Poly([0, -2, 1]))
    with pytest.raises(HypothesisError, match="coronal"):
        cor34_pair(cycle(5), [STAR] * 5 + [SALTIRE] * 5, 0)


@pytest.mark.parametrize("entry", range(3))
def test_cor34_with_searched_equal_coronal_pair(entry):
    block = SEARCH["small_equal_coronal"][entry]
    a = Fraction(block["alpha"])
    h1, h2 = (parse_graph6(s) for s in block["equal_coronal"][0])
    assert are_cospectral(h1, h2, a) and coronal(h1, a) == coronal(h2, a)
    cert = cor34_pair(complete(1), [h1, h2], a)
    assert cert.established
    cert = cor34_pair(complete(2), [h1, h1, h2, h2], a)
    assert cert.charpoly == alpha_charpoly(cert.g2, a)


def test_regular_pair_is_smallest():
    g1, g2 = regular_pair()
    assert g1.n == 10 and regular_degree(g1) == regular_degree(g2) == 4
    assert adjacency_charpoly(g1) == adjacency_charpoly(g2)
    assert find_isomorphism(g1, g2) is None
    smaller = [g for g in regular_corpus() if g.n < 10]
    keys = [(g.n, regular_degree(g), adjacency_charpoly(g)) for g in smaller]
    assert len(keys) == len(set(keys))


@pytest.mark.parametrize("a", [Fraction(0), Fraction(1, 4), HALF, Fraction(5, 6), Fraction(1)])
def test_regular_from_adjacency(a):
    for entry in range(len(SEARCH["regular_adjacency_cospectral"])):
        g1, g2 = regular_pair(entry)
        r = regular_degree(g1)
        f = adjacency_charpoly(g1)
        assert regular_alpha_from_adjacency(f, g1.n, r, a) == alpha_charpoly(g1, a)
        assert alpha_charpoly(g1, a) == alpha_charpoly(g2, a)


def test_regular_from_adjacency_corpus():
    a = Fraction(2, 7)
    for g in regular_corpus()[:60]:
        r = regular_degree(g)
        assert regular_alpha_from_adjacency(adjacency_charpoly(g), g.n, r, a) == alpha_charpoly(g, a)


def test_cor42_certificate():
    g1, g2 = regular_pair()
    cert = cor42_pair(g1, g2, [complete(1)] * g1.m, Fraction(1, 3))
    assert cert.g1.n == 30
    assert cert.charpoly == alpha_charpoly(cert.g2, Fraction(1, 3))
    assert cert.witness.kind == "unverified"
    with pytest.raises(HypothesisError):
        cor42_pair(STAR, SALTIRE, [complete(1)] * 4, 0)


def test_cor43_certificates():
    g1, g2 = regular_pair()
    cert = cor43_pair(complete(2), [g1], [g1], HALF)
    assert cert.witness.kind == "unverified" or cert.witness.kind == "isomorphic"
    assert cert.g1 == cert.g2
    cert = cor43_pair(complete(2), [g1], [g2], HALF)
    assert cert.charpoly == alpha_charpoly(cert.g2, HALF)
    assert cert.g1 != cert.g2
    cert = cor43_pair(cycle(3), [complete(2)] * 3, [complete(2)] * 3, 0)
    assert cert.witness.kind == "isomorphic"
    with pytest.raises(HypothesisError):
        cor43_pair(complete(2), [STAR], [SALTIRE], 0)


def test_search_helpers():
    corpus = [g for g in small_corpus() if g.n <= 5]
    pairs = find_cospectral_pairs(corpus, 0)
    seqs = {frozenset([a.degree_sequence(), b.degree_sequence()]) for a, b in pairs}
    assert frozenset([STAR.degree_sequence(), SALTIRE.degree_sequence()]) in seqs
    assert all(certify_nonisomorphic(a, b).kind != "isomorphic" for a, b in pairs)
    eq = find_equal_coronal_pairs(corpus, HALF)
    assert eq and all(coronal(a, HALF) == coronal(b, HALF) for a, b in eq)
