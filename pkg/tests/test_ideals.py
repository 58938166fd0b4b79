import random
from itertools import combinations

import pytest

from distideal.graph import (all_pairs_distances, build_graph, diameter,
                             enumerate_connected, family, is_connected)
from distideal.groebner import Ideal, ideals_equal
from distideal.ideals import (char_poly_distance, det_bareiss, det_laplace,
                              det_symbolic, distance_ideal, evaluate_ideal,
                              generalized_distance_matrix, ideal_report,
                              minors, trivial_count_phi)
from distideal.poly import QQ, ZZ, Polynomial, make_vars
from distideal.snf import smith_normal_form

CLAW = build_graph(4, [(0, 1), (0, 2), (0, 3)])  # center 0, as in the example


def _poly(variables, ring, spec):
    """spec: list of (coeff, {var: exp})"""
    total = Polynomial.zero(ring, variables)
    for coeff, monos in spec:
        term = Polynomial.const(ring, variables, coeff)
        for name, e in monos.items():
            term = term * Polynomial.variable(ring, variables, name) ** e
        total = total + term
    return total


def test_generalized_distance_matrix_claw():
    m = generalized_distance_matrix(CLAW)
    rendered = [[e.render() for e in row] for row in m.entries]
    assert rendered == [
        ["x0", "1", "1", "1"],
        ["1", "x1", "2", "2"],
        ["1", "2", "x2", "2"],
        ["1", "2", "2", "x3"],
    ]


def test_generalized_distance_matrix_k2():
    m = generalized_distance_matrix(family("complete", 2))
    assert [[e.render() for e in row] for row in m.entries] == \
        [["x0", "1"], ["1", "x1"]]


def test_generalized_distance_matrix_c4():
    m = generalized_distance_matrix(family("cycle", 4))
    assert [e.render() for e in m.entries[0]] == ["x0", "1", "2", "1"]


def test_det_k2():
    m = generalized_distance_matrix(family("complete", 2))
    v = m.vars
    expected = _poly(v, ZZ, [(1, {"x0": 1, "x1": 1}), (-1, {})])
    assert det_symbolic(m) == expected


def test_det_k3():
    m = generalized_distance_matrix(family("complete", 3))
    v = m.vars
    expected = _poly(v, ZZ, [(1, {"x0": 1, "x1": 1, "x2": 1}),
                             (-1, {"x0": 1}), (-1, {"x1": 1}),
                             (-1, {"x2": 1}), (2, {})])
    assert det_symbolic(m) == expected


def test_det_c4_singular_at_zero():
    m = generalized_distance_matrix(family("cycle", 4))
    d = det_symbolic(m)
    assert d.substitute({v: 0 for v in m.vars}).is_zero()


def test_det_engines_agree():
    for g in enumerate_connected(5):
        m = generalized_distance_matrix(g)
        assert det_bareiss(m) == det_laplace(m)


def test_minors_k2():
    m = generalized_distance_matrix(family("complete", 2))
    out = minors(m, 2)
    assert out == [det_symbolic(m)]


def test_minors_claw_contains_unit():
    m = generalized_distance_matrix(CLAW)
    assert Polynomial.const(ZZ, m.vars, 1) in minors(m, 1)


def test_minor_p4_with_dominating_vertex():
    # P4 v1..v4 plus a vertex adjacent to v1 and v4: the mixed 2x2 minor
    # on rows {v2,v4}, cols {v1,v3} is -1
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4)])
    m = generalized_distance_matrix(g)
    sub = [[m.entries[1][0], m.entries[1][2]],
           [m.entries[3][0], m.entries[3][2]]]
    from distideal.ideals import matrix_from_rows
    d = det_symbolic(matrix_from_rows(ZZ, m.vars, sub))
    assert d == Polynomial.const(ZZ, m.vars, -1)


def test_minors_range_guard():
    m = generalized_distance_matrix(family("cycle", 6))
    with pytest.raises(ValueError):
        minors(m, 0)
    with pytest.raises(ValueError):
        minors(m, 5)          # i > 4 without override
    assert minors(m, 5, allow_large=True)


def test_claw_i2_golden():
    res = distance_ideal(CLAW, 2)
    v = res.ideal.vars
    expected = [
        _poly(v, ZZ, [(2, {"x0": 1}), (-1, {})]),
        _poly(v, ZZ, [(1, {"x1": 1}), (-2, {})]),
        _poly(v, ZZ, [(1, {"x2": 1}), (-2, {})]),
        _poly(v, ZZ, [(1, {"x3": 1}), (-2, {})]),
    ]
    assert ideals_equal(res.ideal, Ideal(ZZ, v, expected))
    assert not res.trivial


def test_c4_i2_golden():
    res = distance_ideal(family("cycle", 4), 2)
    v = res.ideal.vars
    expected = [_poly(v, ZZ, [(1, {name: 1}), (1, {})]) for name in v]
    expected.append(Polynomial.const(ZZ, v, 3))
    assert ideals_equal(res.ideal, Ideal(ZZ, v, expected))


def test_k3_i2_rational_golden():
    res = distance_ideal(family("complete", 3), 2, QQ)
    v = res.ideal.vars
    expected = [_poly(v, QQ, [(1, {name: 1}), (-1, {})]) for name in v]
    assert ideals_equal(res.ideal, Ideal(QQ, v, expected))


def test_phi_values():
    assert trivial_count_phi(family("path", 4), ZZ) == 2
    for m, n in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]:
        assert trivial_count_phi(family("complete_bipartite", m, n), ZZ) == 1
    assert trivial_count_phi(family("cycle", 4), QQ) == 2


def test_phi_k1():
    g = build_graph(1, [])
    assert trivial_count_phi(g, ZZ) == 0


def test_phi_max_i_cap():
    g = family("path", 4)
    assert trivial_count_phi(g, ZZ, max_i=1) == 1
    assert trivial_count_phi(g, ZZ, max_i=2) == 2


def test_evaluate_ideal_values():
    assert evaluate_ideal(family("complete", 3), 3, [0, 0, 0]) == 2
    assert evaluate_ideal(family("star", 3), 2, [0, 0, 0, 0]) == 1
    assert evaluate_ideal(family("cycle", 4), 4, [0, 0, 0, 0]) == 0


def test_evaluate_ideal_bad_point():
    with pytest.raises(ValueError):
        evaluate_ideal(family("complete", 3), 1, [0, 0])


def test_evaluation_coherence_random_points():
    rng = random.Random(17)
    for g in enumerate_connected(4):
        if g.n < 2:
            continue
        for _ in range(5):
            point = [rng.randint(-5, 5) for _ in range(g.n)]
            dm = all_pairs_distances(g)
            M = [[point[u] if u == v else dm[u][v] for v in range(g.n)]
                 for u in range(g.n)]
            factors = smith_normal_form(M).factors
            prod = 1
            for i, f in enumerate(factors, start=1):
                if f == 0:
                    break
                prod *= f
                assert evaluate_ideal(g, i, point) == prod


def test_char_poly_k3():
    p, roots = char_poly_distance(family("complete", 3))
    v = p.vars
    assert p == _poly(v, ZZ, [(1, {"lam": 3}), (-3, {"lam": 1}), (-2, {})])
    assert roots == [-1, 2]


def test_char_poly_k2():
    p, roots = char_poly_distance(family("complete", 2))
    assert p.render() == "lam^2 - 1"
    assert roots == [-1, 1]


def test_char_poly_c4():
    p, roots = char_poly_distance(family("cycle", 4))
    assert p.render() == "lam^4 - 12*lam^2 - 16*lam"
    assert roots == [-2, 0, 4]


# ---------------------------------------------------------------------------
# monotonicity and chain invariants (small corpus; the full n<=5 sweep
# lives in the acceptance suite)

def _embed(p, sub_vars, big_vars, mapping):
    return p.compose(big_vars, {sv: Polynomial.variable(p.ring, big_vars, bv)
                                for sv, bv in mapping.items()})


def test_chain_containment_small():
    for g in enumerate_connected(4):
        results = {i: distance_ideal(g, i, ZZ, allow_large=True)
                   for i in range(1, g.n + 1)}
        for i in range(1, g.n):
            for gen in results[i + 1].ideal.gens:
                assert results[i].ideal.contains(gen)


def test_diameter2_induced_monotone():
    for g in enumerate_connected(4):
        if g.n < 3:
            continue
        big = distance_ideal(g, 2, ZZ)
        big_vars = big.ideal.vars
        for size in range(2, g.n):
            for subset in combinations(range(g.n), size):
                h = g.induced(subset)
                if not is_connected(h) or diameter(h) > 2:
                    continue
                small = distance_ideal(h, 2, ZZ)
                mapping = {"x%d" % j: "x%d" % v
                           for j, v in enumerate(sorted(subset))}
                for gen in small.ideal.gens:
                    assert big.ideal.contains(_embed(gen, small.ideal.vars,
                                                     big_vars, mapping))


def test_distance_hereditary_monotone():
    for g in enumerate_connected(4):
        if g.n < 3:
            continue
        dm = all_pairs_distances(g)
        hereditary = True
        subs = []
        for size in range(2, g.n):
            for subset in combinations(range(g.n), size):
                h = g.induced(subset)
                if not is_connected(h):
                    continue
                hm = all_pairs_distances(h)
                order = sorted(subset)
                if any(hm[a][b] != dm[order[a]][order[b]]
                       for a in range(size) for b in range(size)):
                    hereditary = False
                subs.append((h, order))
        if not hereditary:
            continue
        big = distance_ideal(g, 2, ZZ)
        for h, order in subs:
            small = distance_ideal(h, 2, ZZ)
            mapping = {"x%d" % j: "x%d" % v for j, v in enumerate(order)}
            for gen in small.ideal.gens:
                assert big.ideal.contains(_embed(gen, small.ideal.vars,
                                                 big.ideal.vars, mapping))


def test_p4_propagation_small():
    from distideal.graph import contains_induced
    for g in enumerate_connected(5):
        if g.n >= 4 and contains_induced(g, "P4"):
            assert distance_ideal(g, 2, ZZ).trivial


def test_phi_le_unit_count_small():
    from distideal.snf import phi_unit_count
    for g in enumerate_connected(5):
        if g.n < 2:
            continue
        assert trivial_count_phi(g, ZZ) <= phi_unit_count(g)
        assert phi_unit_count(g) != 1


def test_ideal_report_shape():
    rep = ideal_report(family("cycle", 4))
    assert rep["phi"] == 1
    assert [r["trivial"] for r in rep["ideals"]] == [True, False, False, False]
    assert rep["graph6"]
