import pytest

from distideal.groebner import (GroebnerBasis, Ideal, buchberger,
                                gcd_polynomial, ideals_equal, reduce_poly,
                                s_polynomial)
from distideal.poly import QQ, ZZ, Polynomial, make_vars

V = make_vars(2)


def x(ring=ZZ):
    return Polynomial.variable(ring, V, "x0")


def y(ring=ZZ):
    return Polynomial.variable(ring, V, "x1")


def test_reduce_field_power():
    assert reduce_poly((x(QQ)) ** 2, [x(QQ)]).is_zero()


def test_reduce_zz_euclidean():
    # 3x against 2x: subtract one copy, the unit remainder stops
    r = reduce_poly(3 * x(), [2 * x()])
    assert r == x()


def test_reduce_qq_field_division():
    assert reduce_poly(3 * x(QQ), [2 * x(QQ)]).is_zero()


def test_reduce_idempotent():
    basis = [2 * x(), 3 * y() - 1]
    f = 7 * x() * y() + 5 * y() + 4
    r = reduce_poly(f, basis)
    assert reduce_poly(r, basis) == r


def test_s_polynomial_monomials():
    assert s_polynomial(2 * x(), 3 * y()).is_zero()


def test_s_polynomial_example():
    f = x() * y() - 1
    g = x() ** 2
    assert s_polynomial(f, g) == -x()


def test_gcd_polynomial_bezout():
    g = gcd_polynomial(2 * x(), 3 * x())
    assert g == x()


def test_gcd_polynomial_requires_zz():
    with pytest.raises(ValueError):
        gcd_polynomial(x(QQ), y(QQ))


def test_groebner_difference_gives_unit():
    basis = buchberger([x() - 1, x()], ZZ, V)
    assert [p.render() for p in basis] == ["1"]


def test_groebner_gcd_collapse():
    basis = buchberger([2 * x(), 3 * x()], ZZ, V)
    assert basis == [x()]
    ideal = Ideal(ZZ, V, [2 * x(), 3 * x()])
    assert ideal.contains(x())


def test_groebner_two_and_x():
    ideal = Ideal(ZZ, V, [Polynomial.const(ZZ, V, 2), x()])
    basis = ideal.groebner_basis()
    assert sorted(basis.render()) == ["2", "x0"]
    # 1 is not reachable: the quotient is Z/2
    assert not ideal.contains(Polynomial.const(ZZ, V, 1))
    assert not ideal.is_trivial()


def test_trivial_c4_style_ideal():
    vars4 = make_vars(4)
    gens = [Polynomial.variable(ZZ, vars4, v) + 1 for v in vars4]
    gens.append(Polynomial.const(ZZ, vars4, 3))
    assert not Ideal(ZZ, vars4, gens).is_trivial()
    gens_q = [g.to_ring(QQ) for g in gens]
    assert Ideal(QQ, vars4, gens_q).is_trivial()


def test_nontrivial_despite_coprime_constants():
    # 2y - 1 and x - 2 generate a proper ideal over ZZ
    ideal = Ideal(ZZ, V, [2 * y() - 1, x() - 2])
    assert not ideal.is_trivial()
    # proper over the rationals too: the variety {x=2, y=1/2} is nonempty
    assert not Ideal(QQ, V, [2 * y(QQ) - 1, x(QQ) - 2]).is_trivial()


def test_contains_product_combination():
    ideal = Ideal(ZZ, V, [x() - 1, y() - 1])
    assert ideal.contains(x() * y() - 1)


def test_ideals_equal_orientation():
    a = Ideal(ZZ, V, [2 * x(), 3 * x()])
    b = Ideal(ZZ, V, [x()])
    assert ideals_equal(a, b)
    c = Ideal(ZZ, V, [2 * x()])
    assert not ideals_equal(b, c)


def test_basis_self_verify():
    gens = [x() * y() - 1, x() ** 2 - y(), 2 * y() ** 2 - 3]
    ideal = Ideal(ZZ, V, gens)
    basis = ideal.groebner_basis()
    assert basis.verify(gens)


def test_basis_self_verify_qq():
    gens = [x(QQ) * y(QQ) - 1, x(QQ) ** 2 - y(QQ)]
    ideal = Ideal(QQ, V, gens)
    assert ideal.groebner_basis().verify(gens)


def test_determinism():
    gens = [2 * x() * y() - 4, 3 * x() - y(), y() ** 2 - 2]
    r1 = GroebnerBasis(tuple(buchberger(gens, ZZ, V)), ZZ, V).render()
    r2 = GroebnerBasis(tuple(buchberger(list(gens), ZZ, V)), ZZ, V).render()
    assert r1 == r2


def test_zz_triviality_implies_qq():
    # corpus-wide coherence is covered in the acceptance suite; spot here
    from distideal.graph import enumerate_connected
    from distideal.ideals import distance_ideal
    for g in enumerate_connected(4):
        if g.n < 2:
            continue
        for i in (1, 2):
            if distance_ideal(g, i, ZZ).trivial:
                assert distance_ideal(g, i, QQ).trivial


def test_zz_basis_positive_leading_coefficients():
    gens = [-2 * x() + 4, -3 * y()]
    basis = buchberger(gens, ZZ, V)
    assert all(p.leading()[1] > 0 for p in basis)
