"""Exact multivariate polynomials over ZZ and QQ with explicit term orders.

Monomials are dense exponent tuples indexed by a fixed variable registry
(a tuple of names).  Coefficients are Python ints over ZZ and Fractions
over QQ, so arithmetic never overflows or rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

ZZ = "ZZ"
QQ = "QQ"

GREVLEX = "grevlex"
LEX = "lex"


def make_vars(n, prefix="x"):
    return tuple("%s%d" % (prefix, i) for i in range(n))


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError("monomial %r does not divide %r" % (b, a))
    return q


def mono_divides(a, b):
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def monomial_key(mono, order=GREVLEX):
    """Sort key: larger key = larger monomial in the given order."""
    if order == GREVLEX:
        return (sum(mono), tuple(-e for e in reversed(mono)))
    if order == LEX:
        return mono
    raise ValueError("unknown term order %r" % (order,))


def compare(m1, m2, order=GREVLEX):
    """Return -1, 0 or 1 comparing two exponent vectors."""
    if len(m1) != len(m2):
        raise ValueError("monomials over different registries")
    k1 = monomial_key(m1, order)
    k2 = monomial_key(m2, order)
    return (k1 > k2) - (k1 < k2)


def _coerce(ring, c):
    if ring == ZZ:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("non-integer coefficient %s over ZZ" % c)
            return int(c)
        if isinstance(c, int):
            return c
        raise TypeError("bad ZZ coefficient %r" % (c,))
    if ring == QQ:
        return Fraction(c)
    raise ValueError("unknown ring %r" % (ring,))


class Polynomial:
    """Immutable exact polynomial: ring tag, variable registry, term dict."""

    __slots__ = ("ring", "vars", "terms", "_hash")

    def __init__(self, ring, variables, terms):
        self.ring = ring
        self.vars = tuple(variables)
        clean = {}
        nv = len(self.vars)
        for mono, coeff in terms.items():
            if len(mono) != nv:
                raise ValueError("exponent vector length mismatch")
            c = _coerce(ring, coeff)
            if c:
                clean[tuple(mono)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring, variables):
        return cls(ring, variables, {})

    @classmethod
    def const(cls, ring, variables, c):
        z = (0,) * len(variables)
        return cls(ring, variables, {z: c})

    @classmethod
    def variable(cls, ring, variables, name):
        variables = tuple(variables)
        try:
            i = variables.index(name)
        except ValueError:
            raise ValueError("unknown variable %r" % (name,))
        mono = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(ring, variables, {mono: 1})

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_value(self):
        z = (0,) * len(self.vars)
        return self.terms.get(z, _coerce(self.ring, 0))

    def is_unit_constant(self):
        if not self.is_constant() or self.is_zero():
            return False
        c = self.constant_value()
        if self.ring == QQ:
            return True
        return c in (1, -1)

    def degree(self):
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    # -- term access --------------------------------------------------------

    def leading(self, order=GREVLEX):
        """(monomial, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=lambda mono: monomial_key(mono, order))
        return m, self.terms[m]

    def sorted_terms(self, order=GREVLEX):
        return sorted(self.terms.items(),
                      key=lambda t: monomial_key(t[0], order), reverse=True)

    def sort_key(self, order=GREVLEX):
        """Deterministic total-order key on polynomials (for stable output)."""
        return tuple((monomial_key(m, order), Fraction(c))
                     for m, c in self.sorted_terms(order))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch %s vs %s" % (self.ring, other.ring))
        if self.vars != other.vars:
            raise ValueError("variable registry mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.ring, self.vars, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.ring, self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, self.vars,
                          {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.ring, self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce(self.ring, other)
            return Polynomial(self.ring, self.vars,
                              {m: v * c for m, v in self.terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(self.ring, self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.const(self.ring, self.vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def term_mul(self, mono, coeff):
        """Multiply by a single term coeff * x^mono."""
        c = _coerce(self.ring, coeff)
        return Polynomial(self.ring, self.vars,
                          {mono_mul(m, mono): v * c
                           for m, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.const(self.ring, self.vars, other)
            else:
                return NotImplemented
        return (self.ring == other.ring and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.vars,
                               frozenset(self.terms.items())))
        return self._hash

    # -- evaluation ---------------------------------------------------------

    def substitute(self, assignment):
        """Partial evaluation; values are ring scalars, other vars stay."""
        idx = {}
        for name, value in assignment.items():
            if name not in self.vars:
                raise ValueError("unknown variable %r" % (name,))
            idx[self.vars.index(name)] = _coerce(self.ring, value)
        terms = {}
        for mono, coeff in self.terms.items():
            c = coeff
            new = list(mono)
            for i, val in idx.items():
                c *= val ** mono[i]
                new[i] = 0
            m = tuple(new)
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.ring, self.vars, terms)

    def compose(self, target_vars, mapping):
        """Full substitution into a (possibly different) registry.

        mapping sends variable names to Polynomials over target_vars;
        unmapped names must themselves be present in target_vars.
        """
        target_vars = tuple(target_vars)
        images = []
        for name in self.vars:
            if name in mapping:
                img = mapping[name]
                if img.vars != target_vars or img.ring != self.ring:
                    raise ValueError("image polynomial over wrong ring/registry")
            else:
                img = Polynomial.variable(self.ring, target_vars, name)
            images.append(img)
        result = Polynomial.zero(self.ring, target_vars)
        for mono, coeff in self.terms.items():
            term = Polynomial.const(self.ring, target_vars, coeff)
            for i, e in enumerate(mono):
                if e:
                    term = term * images[i] ** e
            result = result + term
        return result

    def to_ring(self, ring):
        if ring == self.ring:
            return self
        return Polynomial(ring, self.vars, dict(self.terms))

    # -- normalization ------------------------------------------------------

    def content_and_normalize(self, order=GREVLEX):
        """(content, primitive/monic part).

        Over ZZ the content is +-gcd of the coefficients, signed so the
        returned polynomial has positive leading coefficient.  Over QQ the
        content is the leading coefficient and the result is monic.
        """
        if self.is_zero():
            raise ValueError("zero polynomial has no content")
        _, lc = self.leading(order)
        if self.ring == QQ:
            content = lc
        else:
            g = 0
            for c in self.terms.values():
                g = gcd(g, abs(c))
            content = g if lc > 0 else -g
        inv = Fraction(1, 1) / Fraction(content)
        terms = {m: c * inv for m, c in self.terms.items()}
        return content, Polynomial(self.ring, self.vars, terms)

    # -- rendering ----------------------------------------------------------

    def render(self, order=GREVLEX):
        if not self.terms:
            return "0"
        parts = []
        for i, (mono, coeff) in enumerate(self.sorted_terms(order)):
            factors = []
            for name, e in zip(self.vars, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if i == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial(%s, %s)" % (self.ring, self.render())


def exact_div(f, g, order=GREVLEX):
    """Exact quotient f / g in the polynomial domain; raises if inexact."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    f._check(g)
    gm, gc = g.leading(order)
    q = Polynomial.zero(f.ring, f.vars)
    r = f
    while not r.is_zero():
        rm, rc = r.leading(order)
        m = mono_div(rm, gm)
        if f.ring == ZZ:
            if rc % gc:
                raise ValueError("inexact division")
            c = rc // gc
        else:
            c = rc / gc
        q = q + Polynomial(f.ring, f.vars, {m: c})
        r = r - g.term_mul(m, c)
    return q
