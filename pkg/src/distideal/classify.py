"""Three independent deciders for "at most one trivial distance ideal"
over ZZ and over the rationals (which settles the real case, since
triviality of an ideal with rational generators is stable under field
extension), plus corpus-wide equivalence checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool

from .graph import (PATTERNS, contains_induced, emit_graph6,
                    enumerate_connected, is_connected, parse_graph6)
from .ideals import trivial_count_phi
from .poly import QQ, ZZ

FORBIDDEN_Z = ("P4", "paw", "diamond")
FORBIDDEN_R = ("P4", "paw", "diamond", "C4")


# ---------------------------------------------------------------------------
# structural recognizers (independent of the pattern matcher)

def is_complete(g):
    return len(g.edges) == g.n * (g.n - 1) // 2


def is_complete_bipartite(g):
    """Connected induced subgraphs of K_{m,n} are exactly these."""
    if g.n == 1:
        return True
    if not is_connected(g):
        return False
    adj = g.adjacency()
    color = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in color:
                color[v] = 1 - color[u]
                stack.append(v)
            elif color[v] == color[u]:
                return False
    left = [v for v in range(g.n) if color[v] == 0]
    right = [v for v in range(g.n) if color[v] == 1]
    return all(g.has_edge(u, v) for u in left for v in right)


def is_star(g):
    """K_{1,k} for some k >= 0 (a single vertex counts)."""
    if g.n == 1:
        return True
    adj = g.adjacency()
    centers = [v for v in range(g.n) if len(adj[v]) == g.n - 1]
    if not centers:
        return False
    c = centers[0]
    others = [v for v in range(g.n) if v != c]
    return all(not g.has_edge(u, v) for u, v in combinations(others, 2))


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class ClassificationReport:
    graph: object
    ring: str
    ideal_based: bool
    forbidden_based: bool
    structural: bool

    @property
    def agreement(self):
        return self.ideal_based == self.forbidden_based == self.structural

    @property
    def verdict(self):
        return self.ideal_based


def classify_Z(g):
    if not is_connected(g):
        raise ValueError("classification defined for connected graphs")
    ideal_based = trivial_count_phi(g, ZZ, max_i=2) <= 1
    forbidden = not any(contains_induced(g, p) for p in FORBIDDEN_Z)
    structural = is_complete(g) or is_complete_bipartite(g)
    return ClassificationReport(g, "Z", ideal_based, forbidden, structural)


def classify_R(g):
    if not is_connected(g):
        raise ValueError("classification defined for connected graphs")
    ideal_based = trivial_count_phi(g, QQ, max_i=2) <= 1
    forbidden = not any(contains_induced(g, p) for p in FORBIDDEN_R)
    structural = is_complete(g) or is_star(g)
    return ClassificationReport(g, "R", ideal_based, forbidden, structural)


def classify(g, ring):
    return classify_Z(g) if ring == "Z" else classify_R(g)


def _worker(args):
    g6, ring = args
    rep = classify(parse_graph6(g6), ring)
    return (g6, rep.ideal_based, rep.forbidden_based, rep.structural)


# ---------------------------------------------------------------------------
# forbidden-graph minimality (bounded to the patterns themselves)

def minimal_forbidden_ok(ring):
    """Each forbidden pattern has exactly two trivial ideals while all of
    its proper connected induced subgraphs have at most one."""
    names = FORBIDDEN_Z if ring == "Z" else FORBIDDEN_R
    coeff_ring = ZZ if ring == "Z" else QQ
    for name in names:
        g = PATTERNS[name]
        if trivial_count_phi(g, coeff_ring, max_i=3) != 2:
            return False
        for size in range(1, g.n):
            for subset in combinations(range(g.n), size):
                h = g.induced(subset)
                if not is_connected(h):
                    continue
                if trivial_count_phi(h, coeff_ring, max_i=2) > 1:
                    return False
    return True


@dataclass
class CorpusReport:
    ring: str
    n_max: int
    total: int
    passing: int
    per_size: dict
    disagreements: list = field(default_factory=list)
    minimal_forbidden: bool = True

    @property
    def ok(self):
        return not self.disagreements and self.minimal_forbidden

    def to_json(self):
        return {
            "schema": "v1",
            "kind": "classify_summary",
            "ring": self.ring,
            "n_max": self.n_max,
            "total": self.total,
            "passing": self.passing,
            "per_size": {str(k): v for k, v in sorted(self.per_size.items())},
            "disagreements": list(self.disagreements),
            "minimal_forbidden": self.minimal_forbidden,
        }


def corpus_report(n_max, ring, jobs=1):
    """Run all three deciders over the connected corpus and compare."""
    if not (1 <= n_max <= 7):
        raise ValueError("n_max out of range")
    graphs = list(enumerate_connected(n_max))
    items = [(emit_graph6(g), ring) for g in graphs]
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_worker, items)
    else:
        results = [_worker(item) for item in items]
    per_size = {}
    passing = 0
    disagreements = []
    for g6, ideal_based, forbidden, structural in results:
        n = parse_graph6(g6).n
        stats = per_size.setdefault(n, {"total": 0, "passing": 0})
        stats["total"] += 1
        if ideal_based:
            passing += 1
            stats["passing"] += 1
        if not (ideal_based == forbidden == structural):
            disagreements.append(g6)
    return CorpusReport(
        ring=ring,
        n_max=n_max,
        total=len(graphs),
        passing=passing,
        per_size=per_size,
        disagreements=disagreements,
        minimal_forbidden=minimal_forbidden_ok(ring),
    )
