"""Z_k-labelled Brauer diagram arithmetic over the classical-limit ring R_c.

A diagram on n strands is a perfect matching of the 2n vertices 1..n (top
row) and 1'..n' (bottom row); every strand carries a residue label in Z_k.
Reversing a strand's stored orientation negates its label, so the canonical
form orients each strand from its smaller vertex under the fixed total order
1 < 2 < ... < n < n' < (n-1)' < ... < 1'.  Coefficients live in
R_c = Z[A0^+-, A1, .., A_{floor(k/2)}]; a removed loop of accumulated label
c contributes the generator A_d with d = min(c mod k, -c mod k).
"""

from __future__ import annotations

import itertools
import json

from .envs import rc_ring
from .laurent import PolyMatrix


class NotAMatching(ValueError):
    pass


class Mismatch(ValueError):
    pass


class TooLarge(ValueError):
    pass


def double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def _order_key(n, v):
    # vertices: +i = top i, -i = bottom i'
    return v if v > 0 else 2 * n + 1 - (-v)


class CycloDiagram:
    """Canonical Z_k-Brauer n-diagram."""

    __slots__ = ("n", "k", "pairs", "_hash")

    def __init__(self, n, k, pairs):
        """pairs: iterable of (u, v, label) with +i = top i, -i = bottom i'."""
        seen = set()
        canon = []
        for u, v, lab in pairs:
            if _order_key(n, u) > _order_key(n, v):
                u, v, lab = v, u, -lab
            canon.append((u, v, lab % k))
            seen.update((u, v))
        expected = set(range(1, n + 1)) | set(range(-n, 0))
        if seen != expected or len(canon) != n:
            raise NotAMatching("pairs do not form a perfect matching on 2n vertices")
        canon.sort(key=lambda t: _order_key(n, t[0]))
        self.n = n
        self.k = k
        self.pairs = tuple(canon)
        self._hash = hash((n, k, self.pairs))

    def __eq__(self, other):
        return (isinstance(other, CycloDiagram)
                and (self.n, self.k, self.pairs) == (other.n, other.k, other.pairs))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        def name(v):
            return str(v) if v > 0 else "%d'" % (-v)
        return "Diagram[%s]" % ", ".join(
            "%s-%s:%d" % (name(u), name(v), lab) for u, v, lab in self.pairs)

    @classmethod
    def identity(cls, n, k):
        return cls(n, k, [(i, -i, 0) for i in range(1, n + 1)])

    def to_json(self):
        def name(v):
            return str(v) if v > 0 else "%d'" % (-v)
        return {
            "n": self.n,
            "k": self.k,
            "strands": [{"from": name(u), "to": name(v), "label": lab}
                        for u, v, lab in self.pairs],
        }

    @classmethod
    def from_json(cls, doc):
        def vertex(s):
            return -int(s[:-1]) if s.endswith("'") else int(s)
        pairs = [(vertex(s["from"]), vertex(s["to"]), int(s["label"]))
                 for s in doc["strands"]]
        return cls(int(doc["n"]), int(doc["k"]), pairs)


def canonicalize(n, k, pairs):
    return CycloDiagram(n, k, pairs)


def _loop_factor(ring, k, label):
    d = min(label % k, (-label) % k)
    return ring.gen("A%d" % d)


def multiply(d1, d2):
    """Product d1 * d2: stack d1 on top of d2, remove loops into A_d factors.

    Returns (coefficient in R_c, canonical diagram).
    """
    if d1.n != d2.n or d1.k != d2.k:
        raise Mismatch("diagram shapes differ")
    n, k = d1.n, d1.k
    ring = rc_ring(k)

    # nodes: ('T', i) top, ('M', i) shared middle, ('B', i) bottom
    edges = []
    incidence = {}

    def add_edge(a, b, lab):
        eid = len(edges)
        edges.append((a, b, lab))
        incidence.setdefault(a, []).append(eid)
        incidence.setdefault(b, []).append(eid)

    for u, v, lab in d1.pairs:
        a = ("T", u) if u > 0 else ("M", -u)
        b = ("T", v) if v > 0 else ("M", -v)
        add_edge(a, b, lab)
    for u, v, lab in d2.pairs:
        a = ("M", u) if u > 0 else ("B", -u)
        b = ("M", v) if v > 0 else ("B", -v)
        add_edge(a, b, lab)

    visited = set()

    def step(node, eid):
        a, b, lab = edges[eid]
        return (b, lab) if node == a else (a, -lab)

    def walk(start):
        """Follow the strand from an endpoint; returns (endpoint, label)."""
        total = 0
        cur = start
        eid = incidence[start][0]
        while True:
            visited.add(eid)
            cur, lab = step(cur, eid)
            total += lab
            if cur[0] != "M":
                return cur, total
            eid = next(e for e in incidence[cur] if e != eid)

    coeff = ring.one
    pairs = []
    done = set()
    for e in [("T", i) for i in range(1, n + 1)] + [("B", i) for i in range(1, n + 1)]:
        if e in done:
            continue
        other, lab = walk(e)
        done.add(e)
        done.add(other)
        u = e[1] if e[0] == "T" else -e[1]
        v = other[1] if other[0] == "T" else -other[1]
        pairs.append((u, v, lab))

    # unvisited edges lie on closed loops through middle nodes
    for start_eid in range(len(edges)):
        if start_eid in visited:
            continue
        total = 0
        eid = start_eid
        cur = edges[eid][0]
        first = cur
        while True:
            visited.add(eid)
            cur, lab = step(cur, eid)
            total += lab
            if cur == first:
                break
            eid = next(e for e in incidence[cur] if e != eid)
        coeff = coeff * _loop_factor(ring, k, total)

    return coeff, CycloDiagram(n, k, pairs)


def closure(d):
    """Close the rightmost strand (join n to n') and normalize by A_0^-1.

    Returns (coefficient in R_c, diagram on n-1 strands).
    """
    n, k = d.n, d.k
    ring = rc_ring(k)
    coeff = ring.gen("A0", -1)
    attach = {}   # endpoint -> (other endpoint, label oriented endpoint->other)
    rest = []
    for u, v, lab in d.pairs:
        if u in (n, -n) or v in (n, -n):
            attach[u] = (v, lab)
            attach[v] = (u, -lab)
        else:
            rest.append((u, v, lab))
    if attach[n][0] == -n:
        # n joined to n' directly: closing it makes a loop with that label
        coeff = coeff * _loop_factor(ring, k, attach[n][1])
    else:
        a, lab1 = attach[n]     # strand from n, oriented n -> a
        b, lab2 = attach[-n]    # strand from n', oriented n' -> b
        # new strand a -> b through the closure arc (a -> n = -lab1, n' -> b = lab2)
        rest.append((a, b, -lab1 + lab2))
    return coeff, CycloDiagram(n - 1, k, rest)


def trace_eps_c(x, n=None, k=None):
    """The Markov trace eps_c = eps_1 o ... o eps_n on R_c combinations.

    Accepts a CycloDiagram, a (coeff, diagram) pair, or a {diagram: coeff}
    dict; returns an element of R_c.
    """
    if isinstance(x, CycloDiagram):
        x = {x: rc_ring(x.k).one}
    elif isinstance(x, tuple):
        x = {x[1]: x[0]}
    total = None
    for diagram, coeff in x.items():
        n, k = diagram.n, diagram.k
        c = coeff
        d = diagram
        for _ in range(n):
            c2, d = closure(d)
            c = c * c2
        total = c if total is None else total + c
    if total is None:
        assert k is not None
        return rc_ring(k).zero
    return total


def enumerate_diagrams(n, k, max_count=10_000):
    """All canonical Z_k-Brauer n-diagrams; count is k^n (2n-1)!!."""
    count = k ** n * double_factorial(2 * n - 1)
    if count > max_count:
        raise TooLarge("would enumerate %d diagrams (cap %d)" % (count, max_count))
    verts = list(range(1, n + 1)) + list(range(-n, 0))
    order = {v: _order_key(n, v) for v in verts}

    def matchings(avail):
        if not avail:
            yield []
            return
        first = min(avail, key=lambda v: order[v])
        rest = [v for v in avail if v != first]
        for other in rest:
            remaining = [v for v in rest if v != other]
            for m in matchings(remaining):
                yield [(first, other)] + m

    out = []
    for m in matchings(verts):
        for labels in itertools.product(range(k), repeat=n):
            out.append(CycloDiagram(n, k, [(u, v, lab) for (u, v), lab in zip(m, labels)]))
    assert len(out) == count
    return out


def gram_matrix(basis):
    """Matrix of pairwise trace values eps_c(D_i D_j)."""
    assert basis, "empty basis"
    entries = [[trace_eps_c(multiply(a, b)) for b in basis] for a in basis]
    return PolyMatrix(len(basis), len(basis), entries)


def diagram_dumps(d):
    return json.dumps(d.to_json(), sort_keys=True)
