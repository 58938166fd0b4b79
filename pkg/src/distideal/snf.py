"""Smith normal form of integer matrices by elementary row/column
operations, plus the distance and distance-Laplacian SNF of a graph.

Pivots are chosen by minimal absolute value; when the pivot fails to
divide the remaining block, a row addition re-exposes the obstruction
and the pivot shrinks, so termination is immediate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .graph import all_pairs_distances, transmissions


@dataclass(frozen=True)
class SNFResult:
    factors: tuple          # f_1..f_r padded with zeros to min(r, c)
    U: tuple = None         # row transform, U * A * V = diag(factors)
    V: tuple = None

    @property
    def rank(self):
        return sum(1 for f in self.factors if f)

    def delta(self, i):
        """gcd of i-minors as the product of the first i factors."""
        p = 1
        for f in self.factors[:i]:
            p *= f
        return p


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix, with_transforms=False):
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    M = [[int(x) for x in row] for row in matrix]
    if any(len(row) != cols for row in M):
        raise ValueError("matrix is not rectangular")
    U = _identity(rows) if with_transforms else None
    V = _identity(cols) if with_transforms else None

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        if U:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        if V:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]
        if U:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in M:
            row[dst] += q * row[src]
        if V:
            for row in V:
                row[dst] += q * row[src]

    def negate_row(i):
        M[i] = [-a for a in M[i]]
        if U:
            U[i] = [-a for a in U[i]]

    r = min(rows, cols)
    for k in range(r):
        while True:
            # minimal-absolute-value pivot in the trailing block
            pivot = None
            for i in range(k, rows):
                for j in range(k, cols):
                    if M[i][j] and (pivot is None
                                    or abs(M[i][j]) < abs(M[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (k, k):
                if pivot[0] != k:
                    swap_rows(k, pivot[0])
                if pivot[1] != k:
                    swap_cols(k, pivot[1])
            p = M[k][k]
            dirty = False
            for i in range(k + 1, rows):
                if M[i][k]:
                    q = M[i][k] // p
                    add_row(i, k, -q)
                    if M[i][k]:
                        dirty = True
            for j in range(k + 1, cols):
                if M[k][j]:
                    q = M[k][j] // p
                    add_col(j, k, -q)
                    if M[k][j]:
                        dirty = True
            if dirty:
                continue
            # pivot row/column clear; enforce divisibility of the block
            bad = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(k, bad, 1)
        if M[k][k] < 0:
            negate_row(k)
        if M[k][k] == 0:
            break

    factors = tuple(M[i][i] for i in range(r))
    return SNFResult(
        factors=factors,
        U=tuple(tuple(row) for row in U) if U else None,
        V=tuple(tuple(row) for row in V) if V else None,
    )


def minors_gcd(matrix, i):
    """gcd of all i x i minors (nonnegative, 0 if all vanish).

    Independent of the elimination above: straight memoized Laplace
    expansion over row/column subsets.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if not (1 <= i <= min(rows, cols)):
        raise ValueError("minor size out of range")
    memo = {}

    def det(rsub, csub):
        if len(rsub) == 1:
            return matrix[rsub[0]][csub[0]]
        key = (rsub, csub)
        if key in memo:
            return memo[key]
        r0 = rsub[0]
        rest = rsub[1:]
        total = 0
        sign = 1
        for idx, c in enumerate(csub):
            a = matrix[r0][c]
            if a:
                sub = csub[:idx] + csub[idx + 1:]
                total += sign * a * det(rest, sub)
            sign = -sign
        memo[key] = total
        return total

    g = 0
    for rsub in combinations(range(rows), i):
        for csub in combinations(range(cols), i):
            g = gcd(g, abs(det(rsub, csub)))
    return g


# ---------------------------------------------------------------------------
# graph matrices

def distance_matrix(g):
    return [list(row) for row in all_pairs_distances(g)]


def distance_laplacian_matrix(g):
    """diag(transmissions) - D(G); every row sums to zero."""
    dm = all_pairs_distances(g)
    tr = transmissions(g)
    n = g.n
    return [[tr[u] if u == v else -dm[u][v] for v in range(n)]
            for u in range(n)]


def distance_snf(g, with_transforms=False):
    return smith_normal_form(distance_matrix(g), with_transforms)


def distance_laplacian_snf(g, with_transforms=False):
    return smith_normal_form(distance_laplacian_matrix(g), with_transforms)


def phi_unit_count(g):
    """Number of invariant factors of D(G) equal to 1."""
    return sum(1 for f in distance_snf(g).factors if f == 1)
