"""Generalized distance matrices, exact symbolic determinants and
minors, distance ideals with their triviality counts, integer-point
evaluation, and the distance characteristic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import snf
from .graph import all_pairs_distances
from .groebner import GroebnerBasis, Ideal
from .poly import GREVLEX, QQ, ZZ, Polynomial, exact_div, make_vars

# guard for the C(n,i)^2 blow-up of full minor enumeration
MAX_MINOR_N = 8
MAX_MINOR_I = 4


@dataclass(frozen=True)
class SymbolicMatrix:
    ring: str
    vars: tuple
    entries: tuple  # tuple of tuples of Polynomial

    @property
    def n(self):
        return len(self.entries)


def matrix_from_rows(ring, variables, rows):
    return SymbolicMatrix(ring, tuple(variables),
                          tuple(tuple(row) for row in rows))


def generalized_distance_matrix(g, ring=ZZ):
    """diag(x_0..x_{n-1}) + D(G)."""
    dm = all_pairs_distances(g)
    variables = make_vars(g.n)
    rows = []
    for u in range(g.n):
        row = []
        for v in range(g.n):
            if u == v:
                row.append(Polynomial.variable(ring, variables, variables[u]))
            else:
                row.append(Polynomial.const(ring, variables, dm[u][v]))
        rows.append(row)
    return matrix_from_rows(ring, variables, rows)


# ---------------------------------------------------------------------------
# determinants

def det_bareiss(matrix, order=GREVLEX):
    """Fraction-free Bareiss elimination; divisions are exact."""
    n = matrix.n
    if n == 0:
        return Polynomial.const(matrix.ring, matrix.vars, 1)
    M = [list(row) for row in matrix.entries]
    one = Polynomial.const(matrix.ring, matrix.vars, 1)
    zero = Polynomial.zero(matrix.ring, matrix.vars)
    sign = 1
    prev = one
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = exact_div(num, prev, order)
            M[i][k] = zero
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


class _LaplaceMemo:
    """Shared memo for determinants of all square submatrices."""

    def __init__(self, matrix):
        self.matrix = matrix
        self.memo = {}
        self.zero = Polynomial.zero(matrix.ring, matrix.vars)

    def det(self, rsub, csub):
        if len(rsub) != len(csub):
            raise ValueError("submatrix not square")
        if not rsub:
            return Polynomial.const(self.matrix.ring, self.matrix.vars, 1)
        if len(rsub) == 1:
            return self.matrix.entries[rsub[0]][csub[0]]
        key = (rsub, csub)
        got = self.memo.get(key)
        if got is not None:
            return got
        r0 = rsub[0]
        rest = rsub[1:]
        total = self.zero
        sign = 1
        for idx, c in enumerate(csub):
            a = self.matrix.entries[r0][c]
            if not a.is_zero():
                total = total + sign * a * self.det(rest, csub[:idx] + csub[idx + 1:])
            sign = -sign
        self.memo[key] = total
        return total


def det_laplace(matrix, memo=None):
    memo = memo or _LaplaceMemo(matrix)
    idx = tuple(range(matrix.n))
    return memo.det(idx, idx)


def det_symbolic(matrix, order=GREVLEX, engine="both"):
    """Exact determinant; engine 'both' cross-checks Bareiss vs Laplace."""
    if engine == "bareiss":
        return det_bareiss(matrix, order)
    if engine == "laplace":
        return det_laplace(matrix)
    if engine == "both":
        b = det_bareiss(matrix, order)
        l = det_laplace(matrix)
        if b != l:
            raise AssertionError("determinant engines disagree")
        return b
    raise ValueError("unknown engine %r" % (engine,))


def minors(matrix, i, order=GREVLEX, allow_large=False, dedup=True):
    """All i x i minors; deduplicated up to sign by default."""
    n = matrix.n
    if not (1 <= i <= n):
        raise ValueError("minor size out of range")
    if not allow_large and (n > MAX_MINOR_N or i > MAX_MINOR_I):
        raise ValueError("minor enumeration needs allow_large for n=%d, i=%d"
                         % (n, i))
    memo = _LaplaceMemo(matrix)
    out = []
    seen = set()
    for rsub in combinations(range(n), i):
        for csub in combinations(range(n), i):
            d = memo.det(rsub, csub)
            if d.is_zero():
                continue
            if dedup:
                _, lc = d.leading(order)
                canon = d if lc > 0 else -d
                if canon in seen:
                    continue
                seen.add(canon)
                out.append(canon)
            else:
                out.append(d)
    out.sort(key=lambda p: p.sort_key(order))
    return out


# ---------------------------------------------------------------------------
# distance ideals

@dataclass
class DistanceIdealResult:
    graph: object
    index: int
    ring: str
    ideal: Ideal
    trivial: bool

    @property
    def basis(self):
        return self.ideal.groebner_basis()


def distance_ideal(g, i, ring=ZZ, order=GREVLEX, allow_large=False):
    if not (1 <= i <= g.n):
        raise ValueError("ideal index out of range")
    m = generalized_distance_matrix(g, ring)
    gens = minors(m, i, order, allow_large=allow_large)
    ideal = Ideal(ring, m.vars, gens, order)
    return DistanceIdealResult(g, i, ring, ideal, ideal.is_trivial())


def trivial_count_phi(g, ring=ZZ, max_i=None):
    """Largest i with trivial i-th distance ideal (0 if none).

    Triviality is downward-closed along the ideal chain, so the scan
    stops at the first nontrivial ideal; max_i caps the scan for callers
    that only need a threshold comparison.
    """
    top = g.n if max_i is None else min(max_i, g.n)
    count = 0
    for i in range(1, top + 1):
        if distance_ideal(g, i, ring, allow_large=True).trivial:
            count = i
        else:
            break
    return count


def evaluate_ideal(g, i, point):
    """gcd of all i-minors of D(G, point) as a nonnegative integer."""
    if len(point) != g.n:
        raise ValueError("evaluation point has wrong length")
    dm = all_pairs_distances(g)
    M = [[point[u] if u == v else dm[u][v] for v in range(g.n)]
         for u in range(g.n)]
    return snf.minors_gcd(M, i)


# ---------------------------------------------------------------------------
# distance characteristic polynomial

CHAR_VAR = "lam"


def char_poly_distance(g):
    """(monic char poly of D(G) in lam, sorted integer roots)."""
    dm = all_pairs_distances(g)
    variables = (CHAR_VAR,)
    lam = Polynomial.variable(ZZ, variables, CHAR_VAR)
    rows = []
    for u in range(g.n):
        rows.append([-lam if u == v
                     else Polynomial.const(ZZ, variables, dm[u][v])
                     for v in range(g.n)])
    m = matrix_from_rows(ZZ, variables, rows)
    p = det_bareiss(m)
    if g.n % 2:
        p = -p  # det(D - lam*I) = (-1)^n * charpoly(lam)
    return p, _integer_roots(p)


def _integer_roots(p):
    coeffs = {m[0]: c for m, c in p.terms.items()}
    if not coeffs:
        return []
    low = min(coeffs)
    roots = set()
    if low > 0:
        roots.add(0)
    const = coeffs[low]
    divisors = set()
    d = 1
    while d * d <= abs(const):
        if const % d == 0:
            divisors.update((d, -d, abs(const) // d, -abs(const) // d))
        d += 1
    for r in sorted(divisors):
        if sum(c * r ** (e - low) for e, c in coeffs.items()) == 0:
            roots.add(r)
    return sorted(roots)


# ---------------------------------------------------------------------------
# reporting

def ideal_report(g, ring=ZZ, indices=None, allow_large=False):
    """JSON-ready report of the distance ideals of a graph."""
    from .graph import emit_graph6
    indices = list(indices) if indices is not None else list(range(1, g.n + 1))
    records = []
    for i in indices:
        res = distance_ideal(g, i, ring, allow_large=allow_large)
        records.append({
            "i": i,
            "generators": [p.render() for p in res.ideal.gens],
            "groebner_basis": res.basis.render(),
            "trivial": res.trivial,
        })
    return {
        "schema": "v1",
        "kind": "ideals",
        "graph6": emit_graph6(g),
        "ring": "Z" if ring == ZZ else "Q",
        "ideals": records,
        "phi": trivial_count_phi(g, ring),
    }
