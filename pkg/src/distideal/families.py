"""Closed-form generator sets and determinant formulas for complete
graphs, the shifted all-ones matrices diag(X) - m*I + m*J, and stars,
verified against brute-force minors ideals.

Star variables are x1..xm for the leaves and y for the center, matching
the leaves-first matrix layout; the graph module's star labeling maps
x_{i+1} -> x_i and y -> x_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .groebner import Ideal, ideals_equal
from .ideals import det_symbolic, matrix_from_rows, minors
from .poly import ZZ, Polynomial

MAX_VERIFY_N = 5
MAX_VERIFY_M = 4


def _vars_x(n):
    return tuple("x%d" % (i + 1) for i in range(n))


def _gens_ring(variables):
    one = Polynomial.const(ZZ, variables, 1)
    xs = [Polynomial.variable(ZZ, variables, v) for v in variables]
    return one, xs


def _subset_products(factors, size, one):
    """Products over all `size`-subsets, in lexicographic subset order."""
    out = []
    for subset in combinations(range(len(factors)), size):
        p = one
        for i in subset:
            p = p * factors[i]
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# complete graphs

def complete_ideal_gens(n, i):
    if not (1 <= i <= n):
        raise ValueError("index out of range")
    variables = _vars_x(n)
    one, xs = _gens_ring(variables)
    shifted = [x - 1 for x in xs]
    if i < n:
        return _subset_products(shifted, i - 1, one)
    full = one
    for f in shifted:
        full = full * f
    total = full
    for k in range(n):
        term = one
        for j, f in enumerate(shifted):
            if j != k:
                term = term * f
        total = total + term
    return [total]


# ---------------------------------------------------------------------------
# diag(X) - m*I + m*J

def mdiag_matrix(n, m):
    variables = _vars_x(n)
    one, xs = _gens_ring(variables)
    rows = [[xs[u] if u == v else m * one for v in range(n)]
            for u in range(n)]
    return matrix_from_rows(ZZ, variables, rows)


def mdiag_det(n, m):
    if n < 1 or m < 0:
        raise ValueError("bad parameters")
    variables = _vars_x(n)
    one, xs = _gens_ring(variables)
    shifted = [x - m for x in xs]
    full = one
    for f in shifted:
        full = full * f
    total = full
    for i in range(n):
        term = one
        for j, f in enumerate(shifted):
            if j != i:
                term = term * f
        total = total + m * term
    return total


def mdiag_ideal_gens(n, m, k):
    if not (1 <= k <= n - 1) or m < 0:
        raise ValueError("bad parameters")
    variables = _vars_x(n)
    one, xs = _gens_ring(variables)
    shifted = [x - m for x in xs]
    a_k = [m * p for p in _subset_products(shifted, k - 1, one)]
    b_k = []
    for subset in combinations(range(n), k):
        prod = one
        for i in subset:
            prod = prod * shifted[i]
        sigma = Polynomial.zero(ZZ, variables)
        for i in subset:
            term = one
            for j in subset:
                if j != i:
                    term = term * shifted[j]
            sigma = sigma + term
        b_k.append(prod + m * sigma)
    return [p for p in a_k if not p.is_zero()] + b_k


# ---------------------------------------------------------------------------
# stars

def star_vars(m):
    return _vars_x(m) + ("y",)


def star_matrix(m):
    """Generalized distance matrix of the star with m leaves,
    leaves first and center last."""
    variables = star_vars(m)
    one, xs = _gens_ring(variables)
    y = xs[-1]
    leaves = xs[:-1]
    rows = []
    for u in range(m):
        rows.append([leaves[u] if v == u else (one if v == m else 2 * one)
                     for v in range(m + 1)])
    rows.append([one] * m + [y])
    return matrix_from_rows(ZZ, variables, rows)


def star_det(m):
    if m < 1:
        raise ValueError("need at least one leaf")
    variables = star_vars(m)
    one, xs = _gens_ring(variables)
    y = xs[-1]
    shifted = [x - 2 for x in xs[:-1]]
    full = one
    for f in shifted:
        full = full * f
    sigma = Polynomial.zero(ZZ, variables)
    for i in range(m):
        term = one
        for j, f in enumerate(shifted):
            if j != i:
                term = term * f
        sigma = sigma + term
    return y * full + (2 * y - 1) * sigma


def star_minor_det(m, i):
    """det of the star matrix with the center row and leaf column i
    (1-based) removed."""
    if not (1 <= i <= m):
        raise ValueError("index out of range")
    variables = star_vars(m)
    one, xs = _gens_ring(variables)
    shifted = [x - 2 for x in xs[:-1]]
    term = one
    for j, f in enumerate(shifted):
        if j != i - 1:
            term = term * f
    return term if (m - i) % 2 == 0 else -term


def star_ideal_gens(m, k):
    if not (1 <= k <= m):
        raise ValueError("index out of range")
    variables = star_vars(m)
    one, xs = _gens_ring(variables)
    y = xs[-1]
    shifted = [x - 2 for x in xs[:-1]]
    c_k = _subset_products(shifted, k - 1, one)
    d_k = []
    if k >= 2:
        d_k = [(2 * y - 1) * p for p in _subset_products(shifted, k - 2, one)]
    return c_k + d_k


# ---------------------------------------------------------------------------
# mechanized verification

@dataclass(frozen=True)
class FamilySpec:
    kind: str           # complete | mdiag | star
    n: int = 0
    m: int = 0


def _ideals_match(variables, brute, closed):
    return ideals_equal(Ideal(ZZ, variables, brute),
                        Ideal(ZZ, variables, closed))


def verify_family(spec, allow_large=False):
    """True iff the closed-form generators match the brute-force minors
    ideals for every index of the family instance."""
    if spec.kind == "complete":
        n = spec.n
        if n > MAX_VERIFY_N and not allow_large:
            raise ValueError("bounds exceeded without override")
        mat = mdiag_matrix(n, 1)
        for i in range(1, n + 1):
            brute = minors(mat, i, allow_large=True)
            if not _ideals_match(mat.vars, brute, complete_ideal_gens(n, i)):
                return False
        return True
    if spec.kind == "mdiag":
        n, m = spec.n, spec.m
        if (n > MAX_VERIFY_N or m > MAX_VERIFY_M) and not allow_large:
            raise ValueError("bounds exceeded without override")
        mat = mdiag_matrix(n, m)
        if det_symbolic(mat) != mdiag_det(n, m):
            return False
        for k in range(1, n):
            brute = minors(mat, k, allow_large=True)
            if not _ideals_match(mat.vars, brute, mdiag_ideal_gens(n, m, k)):
                return False
        return True
    if spec.kind == "star":
        m = spec.m
        if m > MAX_VERIFY_M and not allow_large:
            raise ValueError("bounds exceeded without override")
        mat = star_matrix(m)
        if det_symbolic(mat) != star_det(m):
            return False
        for k in range(1, m + 1):
            brute = minors(mat, k, allow_large=True)
            if not _ideals_match(mat.vars, brute, star_ideal_gens(m, k)):
                return False
        return True
    raise ValueError("unknown family kind %r" % (spec.kind,))


def verification_table(specs=None):
    """Pass/fail rows for the default desk-scale verification sweep."""
    if specs is None:
        specs = ([FamilySpec("complete", n=n) for n in range(1, 6)]
                 + [FamilySpec("mdiag", n=n, m=m)
                    for n in range(2, 5) for m in range(0, 4)]
                 + [FamilySpec("star", m=m) for m in range(1, 5)])
    rows = []
    for spec in specs:
        ok = verify_family(spec)
        rows.append({"kind": spec.kind, "n": spec.n, "m": spec.m, "ok": ok})
    return rows
