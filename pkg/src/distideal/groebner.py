"""Groebner bases over QQ (Buchberger) and strong Groebner bases over ZZ
(S-polynomials plus gcd-polynomials), with reduction, membership,
triviality and ideal-equality tests.

Over ZZ, reduction is Euclidean on coefficients: a term c*m is reduced
by a basis element g whenever lm(g) | m and c has a nonzero quotient by
lc(g); the coefficient remainder stays in [0, lc(g)) for positive
leading coefficients.  Completed bases are interreduced and rendered
deterministically.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd

from .poly import (GREVLEX, QQ, ZZ, Polynomial, mono_div, mono_divides,
                   mono_lcm, mono_mul, monomial_key)

# When enabled, every completed basis is verified on the spot (all
# S- and gcd-polynomials reduce to zero, generators reduce to zero).
SELF_CHECK = False


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _sign_normalize(p, order):
    _, lc = p.leading(order)
    if (p.ring == ZZ and lc < 0):
        return -p
    if p.ring == QQ:
        return p * (1 / lc)
    return p


def reduce_poly(f, basis, order=GREVLEX):
    """Normal form of f against a list of nonzero polynomials."""
    if f.is_zero():
        return f
    ring = f.ring
    lts = [(g.leading(order)[0], g.leading(order)[1], g) for g in basis
           if not g.is_zero()]
    remainder = {}
    h = f
    while not h.is_zero():
        m, c = h.leading(order)
        reduced = False
        for gm, gc, g in lts:
            if not mono_divides(gm, m):
                continue
            if ring == QQ:
                q = c / gc
            else:
                q = c // gc
                if q == 0:
                    continue
            h = h - g.term_mul(mono_div(m, gm), q)
            reduced = True
            break
        if not reduced:
            remainder[m] = c
            h = h - Polynomial(ring, f.vars, {m: c})
    return Polynomial(ring, f.vars, remainder)


def s_polynomial(f, g, order=GREVLEX):
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of zero polynomial")
    fm, fc = f.leading(order)
    gm, gc = g.leading(order)
    L = mono_lcm(fm, gm)
    if f.ring == QQ:
        return (f.term_mul(mono_div(L, fm), 1 / fc)
                - g.term_mul(mono_div(L, gm), 1 / gc))
    l = abs(fc * gc) // gcd(abs(fc), abs(gc))
    return (f.term_mul(mono_div(L, fm), l // fc)
            - g.term_mul(mono_div(L, gm), l // gc))


def gcd_polynomial(f, g, order=GREVLEX):
    """Bezout combination with leading term gcd(lc f, lc g) * lcm(lm f, lm g)."""
    if f.ring != ZZ:
        raise ValueError("gcd-polynomials only apply over ZZ")
    if f.is_zero() or g.is_zero():
        raise ValueError("gcd-polynomial of zero polynomial")
    fm, fc = f.leading(order)
    gm, gc = g.leading(order)
    L = mono_lcm(fm, gm)
    _, s, t = _ext_gcd(fc, gc)
    return (f.term_mul(mono_div(L, fm), s)
            + g.term_mul(mono_div(L, gm), t))


def _unit_basis(ring, variables):
    return [Polynomial.const(ring, variables, 1)]


def _minimize_and_interreduce(polys, ring, order):
    if not polys:
        return []
    polys = sorted({_sign_normalize(p, order) for p in polys},
                   key=lambda p: (monomial_key(p.leading(order)[0], order),
                                  abs(p.leading(order)[1]),
                                  p.sort_key(order)))
    kept = []
    for p in polys:
        pm, pc = p.leading(order)
        redundant = False
        for q in kept:
            qm, qc = q.leading(order)
            if mono_divides(qm, pm) and (ring == QQ or pc % qc == 0):
                redundant = True
                break
        if not redundant:
            kept.append(p)
    # tail reduction to a fixpoint; leading terms are stable here
    changed = True
    while changed:
        changed = False
        for i, p in enumerate(kept):
            pm, pc = p.leading(order)
            lt = Polynomial(ring, p.vars, {pm: pc})
            others = kept[:i] + kept[i + 1:]
            tail = reduce_poly(p - lt, others, order)
            new = _sign_normalize(lt + tail, order)
            if new != p:
                kept[i] = new
                changed = True
    kept.sort(key=lambda p: (monomial_key(p.leading(order)[0], order),
                             p.sort_key(order)))
    return kept


def buchberger(gens, ring, variables, order=GREVLEX):
    """Complete a generator list to a (strong, over ZZ) Groebner basis."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    for g in gens:
        if g.is_unit_constant():
            return _unit_basis(ring, variables)
    start = sorted({_sign_normalize(g, order) for g in gens},
                   key=lambda p: p.sort_key(order))

    G = []
    lts = []
    queue = []  # (deg lcm, key lcm, i, j, kind)
    counter = 0

    def push_pairs(idx):
        nonlocal counter
        gm, gc = lts[idx]
        for j in range(idx):
            hm, hc = lts[j]
            L = mono_lcm(gm, hm)
            key = (sum(L), monomial_key(L, order))
            if ring == QQ:
                if L == mono_mul(gm, hm):
                    continue  # coprime leading monomials
                heapq.heappush(queue, (key, counter, j, idx, "s"))
                counter += 1
            else:
                heapq.heappush(queue, (key, counter, j, idx, "s"))
                counter += 1
                if abs(gc) % abs(hc) and abs(hc) % abs(gc):
                    heapq.heappush(queue, (key, counter, j, idx, "g"))
                    counter += 1

    def add(p):
        G.append(p)
        lts.append(p.leading(order))
        push_pairs(len(G) - 1)

    for g in start:
        h = reduce_poly(g, G, order)
        if h.is_zero():
            continue
        if h.is_unit_constant():
            return _unit_basis(ring, variables)
        add(_sign_normalize(h, order))

    while queue:
        _, _, i, j, kind = heapq.heappop(queue)
        if kind == "s":
            p = s_polynomial(G[i], G[j], order)
        else:
            p = gcd_polynomial(G[i], G[j], order)
        h = reduce_poly(p, G, order)
        if h.is_zero():
            continue
        if h.is_unit_constant():
            return _unit_basis(ring, variables)
        add(_sign_normalize(h, order))

    return _minimize_and_interreduce(G, ring, order)


@dataclass
class GroebnerBasis:
    polys: tuple
    ring: str
    vars: tuple
    order: str = GREVLEX

    def reduce(self, f):
        return reduce_poly(f.to_ring(self.ring), list(self.polys), self.order)

    def contains(self, f):
        return self.reduce(f).is_zero()

    def is_trivial(self):
        one = Polynomial.const(self.ring, self.vars, 1)
        return self.reduce(one).is_zero()

    def verify(self, gens=None):
        """Check the basis invariants; raises AssertionError on failure."""
        polys = list(self.polys)
        for g in gens or []:
            r = self.reduce(g)
            assert r.is_zero(), "generator does not reduce to zero: %s" % g.render()
        for i in range(len(polys)):
            for j in range(i):
                s = s_polynomial(polys[i], polys[j], self.order)
                assert reduce_poly(s, polys, self.order).is_zero(), \
                    "S-polynomial does not reduce to zero"
                if self.ring == ZZ:
                    gp = gcd_polynomial(polys[i], polys[j], self.order)
                    assert reduce_poly(gp, polys, self.order).is_zero(), \
                        "gcd-polynomial does not reduce to zero"
        if self.ring == ZZ:
            assert all(p.leading(self.order)[1] > 0 for p in polys)
        return True

    def render(self):
        return [p.render(self.order) for p in self.polys]


@dataclass
class Ideal:
    ring: str
    vars: tuple
    gens: list
    order: str = GREVLEX
    _basis: GroebnerBasis = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.vars = tuple(self.vars)
        gens = []
        for g in self.gens:
            if g.vars != self.vars:
                raise ValueError("generator over wrong registry")
            g = g.to_ring(self.ring)
            if not g.is_zero():
                gens.append(g)
        self.gens = gens

    def groebner_basis(self):
        if self._basis is None:
            polys = buchberger(self.gens, self.ring, self.vars, self.order)
            self._basis = GroebnerBasis(tuple(polys), self.ring, self.vars,
                                        self.order)
            if SELF_CHECK:
                self._basis.verify(self.gens)
        return self._basis

    def contains(self, f):
        return self.groebner_basis().contains(f)

    def is_trivial(self):
        for g in self.gens:
            if g.is_unit_constant():
                return True
        if not self.gens:
            return False
        return self.groebner_basis().is_trivial()


def is_trivial(ideal):
    return ideal.is_trivial()


def contains(ideal, f):
    return ideal.contains(f)


def ideals_equal(a, b):
    if a.ring != b.ring or a.vars != b.vars:
        raise ValueError("ideals over different rings or registries")
    return (all(a.contains(g) for g in b.gens)
            and all(b.contains(g) for g in a.gens))
