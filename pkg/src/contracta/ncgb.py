"""Degree-truncated noncommutative Buchberger completion, normal forms and standard monomials.

Polynomials are handled internally as plain ``dict[Word, Fraction]`` for speed and
wrapped back into :class:`~contracta.freealg.NcPoly` at the API boundary.  Path
algebras are supported by passing the arrow endpoints: overlaps of composable
leading words are automatically composable, so only the enumeration of standard
monomials needs to know about vertices.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .freealg import AlphabetError, MonomialOrder, NcPoly, Word
from .quiverpres import Presentation

log = logging.getLogger(__name__)

HARD_CEILING = 64
ENUMERATION_BUDGET = 200_000

Terms = dict[Word, Fraction]


class NotFiniteError(ArithmeticError):
    """No finite-dimensionality certificate was found up to the degree ceiling."""

    def __init__(self, cap: int, message: str | None = None):
        self.cap = cap
        super().__init__(message or f"infinite_or_unknown (degree cap {cap})")


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[NcPoly, ...]
    degree_cap: int
    complete_below_cap: bool = True
    # obstructions of degree > cap left unresolved; zero means a genuine Groebner basis
    pending: int = 0
    endpoints: tuple[tuple[int, int], ...] | None = None
    vertex_count: int = 1

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.order.alphabet

    @property
    def is_complete(self) -> bool:
        return self.complete_below_cap and self.pending == 0

    def leading_words(self) -> list[Word]:
        return [g.leading_word(self.order) for g in self.elements]

    def reducer(self) -> "_Reducer":
        r = _Reducer(self.order)
        for g in self.elements:
            r.add(dict(g.items()))
        return r


@dataclass(frozen=True)
class FinitenessCertificate:
    finite: bool
    dimension: int | None
    empty_degree: int | None
    cap: int

    @property
    def verdict(self) -> str:
        return "finite" if self.finite else "infinite_or_unknown"


# -- reduction ---------------------------------------------------------------------------


def _neg_key(order: MonomialOrder, w: Word):
    n, ranks = order.key(w)
    return (-n, tuple(-r for r in ranks))


class _Reducer:
    """Leading-word indexed rewriting system over monic polynomials."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.rules: dict[Word, Terms] = {}
        self.lengths: set[int] = set()

    def add(self, terms: Terms) -> Word:
        lw = max(terms, key=self.order.key)
        self.rules[lw] = terms
        self.lengths.add(len(lw))
        return lw

    def remove(self, lw: Word) -> None:
        del self.rules[lw]
        self.lengths = {len(w) for w in self.rules}

    def find(self, w: Word) -> tuple[Word, int] | None:
        """The order-largest leading word occurring in ``w`` and its leftmost position."""
        rules = self.rules
        key = self.order.key
        n = len(w)
        # deglex: a longer leading word always beats a shorter one
        for L in sorted(self.lengths, reverse=True):
            best = None
            for i in range(n - L + 1):
                sub = w[i:i + L]
                if sub in rules and (best is None or key(sub) > key(best[0])):
                    best = (sub, i)
            if best is not None:
                return best
        return None

    def normal_form(self, terms: Terms) -> Terms:
        order = self.order
        work: Terms = dict(terms)
        heap = [(_neg_key(order, w), w) for w in work]
        heapq.heapify(heap)
        result: Terms = {}
        rules = self.rules
        while heap:
            _, w = heapq.heappop(heap)
            c = work.pop(w, 0)
            if not c:
                continue
            hit = self.find(w)
            if hit is None:
                result[w] = c
                continue
            lw, i = hit
            u, v = w[:i], w[i + len(lw):]
            for t, d in rules[lw].items():
                if t == lw:
                    continue
                nw = u + t + v
                old = work.get(nw)
                if old is None:
                    work[nw] = -c * d
                    heapq.heappush(heap, (_neg_key(order, nw), nw))
                else:
                    work[nw] = old - c * d
        return result


def _monic(terms: Terms, order: MonomialOrder) -> Terms:
    lw = max(terms, key=order.key)
    lc = terms[lw]
    if lc == 1:
        return terms
    inv = 1 / lc
    return {w: c * inv for w, c in terms.items()}


def _contains(big: Word, small: Word) -> bool:
    L = len(small)
    return any(big[i:i + L] == small for i in range(len(big) - L + 1))


# -- completion --------------------------------------------------------------------------


def complete(
    generators: Iterable[NcPoly],
    order: MonomialOrder,
    cap: int,
    endpoints: Sequence[tuple[int, int]] | None = None,
    vertex_count: int = 1,
) -> GroebnerBasis:
    """Resolve every overlap ambiguity of degree <= ``cap``; return an interreduced monic basis."""
    gens = list(generators)
    for g in gens:
        if g.alphabet != order.alphabet:
            raise AlphabetError("generator alphabet differs from the order's alphabet")
    gens = [g for g in gens if not g.is_zero()]
    red = _Reducer(order)
    alive: dict[int, Word] = {}  # element id -> leading word
    by_lead: dict[Word, int] = {}
    counter = itertools.count()
    queue: list[tuple[int, int, int, int, int]] = []  # (degree, seq, id_f, id_g, overlap)
    todo: list[Terms] = [dict(g.items()) for g in gens]

    def overlaps(fid: int, gid: int):
        u, v = alive[fid], alive[gid]
        if len(red.rules[u]) == 1 and len(red.rules[v]) == 1:
            return  # two monomials: the S-element is identically zero
        for k in range(1, min(len(u), len(v))):
            if u[-k:] == v[:k]:
                heapq.heappush(queue, (len(u) + len(v) - k, next(counter), fid, gid, k))

    def adjoin(terms: Terms) -> None:
        h = red.normal_form(terms)
        if not h:
            return
        h = _monic(h, order)
        lw = max(h, key=order.key)
        for old_lw, oid in list(by_lead.items()):
            if _contains(old_lw, lw):
                # old element becomes reducible: retire it and feed it back in
                todo.append(red.rules[old_lw])
                red.remove(old_lw)
                del by_lead[old_lw]
                del alive[oid]
        hid = next(counter)
        red.add(h)
        alive[hid] = lw
        by_lead[lw] = hid
        for oid in list(alive):
            overlaps(hid, oid)
            if oid != hid:
                overlaps(oid, hid)

    def drain():
        while todo:
            adjoin(todo.pop())

    # smallest generators first keeps early interreduction cheap
    todo.sort(key=lambda t: max(order.key(w) for w in t), reverse=True)
    drain()
    skipped: list[tuple[int, int, int, int, int]] = []
    while queue:
        item = heapq.heappop(queue)
        deg, _, fid, gid, k = item
        if fid not in alive or gid not in alive:
            continue
        if deg > cap:
            skipped.append(item)
            continue
        u, v = alive[fid], alive[gid]
        f, g = red.rules[u], red.rules[v]
        left, right = u[:len(u) - k], v[k:]
        s: Terms = {}
        for w, c in f.items():
            nw = w + right
            s[nw] = s.get(nw, 0) + c
        for w, c in g.items():
            nw = left + w
            s[nw] = s.get(nw, 0) - c
        s = {w: c for w, c in s.items() if c}
        if s:
            todo.append(s)
            drain()
    pending = sum(1 for _, _, f, g, _ in skipped if f in alive and g in alive)

    # tail-reduce; leading words already form an antichain
    final: list[Terms] = []
    for lw in list(red.rules):
        terms = red.rules[lw]
        tail = {w: c for w, c in terms.items() if w != lw}
        tail = red.normal_form(tail)
        tail[lw] = Fraction(1)
        final.append(tail)
    final.sort(key=lambda t: order.key(max(t, key=order.key)))
    elements = tuple(NcPoly._raw(order.alphabet, t) for t in final)
    log.debug("completion at cap %d: %d elements, %d pending", cap, len(elements), pending)
    return GroebnerBasis(
        order,
        elements,
        cap,
        True,
        pending,
        tuple(endpoints) if endpoints is not None else None,
        vertex_count,
    )


def normal_form(p: NcPoly, g: GroebnerBasis) -> NcPoly:
    if p.alphabet != g.alphabet:
        raise AlphabetError("polynomial alphabet differs from the basis alphabet")
    return NcPoly._raw(p.alphabet, g.reducer().normal_form(dict(p.items())))


# -- standard monomials ------------------------------------------------------------------


def _successors(g: GroebnerBasis):
    n = len(g.alphabet)
    if g.endpoints is None:
        every = tuple(range(n))
        return lambda w: every
    ends = g.endpoints
    after = {v: tuple(i for i in range(n) if ends[i][0] == v) for v in range(g.vertex_count)}
    every = tuple(range(n))
    return lambda w: after[ends[w[-1]][1]] if w else every


def ufnarovski_has_cycle(g: GroebnerBasis) -> bool:
    """Whether the set of standard monomials is infinite (cycle in the Ufnarovski graph)."""
    leads = set(g.leading_words())
    if () in leads:
        return False
    m = max([len(w) for w in leads] + [2]) - 1
    succ = _successors(g)
    lengths = {len(w) for w in leads}

    def standard_ext(w: Word) -> bool:
        # w is standard up to its last letter; only suffixes can be new lead words
        return not any(len(w) >= L and w[-L:] in leads for L in lengths)

    # nodes: standard composable words of length m (m >= 1 covers the all-linear case)
    layer: list[Word] = [()]
    for _ in range(m):
        layer = [w + (a,) for w in layer for a in succ(w) if standard_ext(w + (a,))]
    nodes = set(layer)
    edges = {w: [w[1:] + (a,) for a in succ(w) if standard_ext(w + (a,))] for w in nodes}
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(nodes, WHITE)
    for root in nodes:
        if color[root] != WHITE:
            continue
        stack = [(root, iter(edges[root]))]
        color[root] = GREY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = BLACK
                stack.pop()
            elif color[nxt] == GREY:
                return True
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                stack.append((nxt, iter(edges[nxt])))
    return False


def standard_monomials(
    g: GroebnerBasis, max_degree: int | None = None
) -> tuple[list[list[Word]], FinitenessCertificate]:
    """Standard words grouped by degree, with a finiteness certificate.

    Degree 0 holds the single empty word; with several vertices it stands for the
    ``vertex_count`` trivial paths, which the certificate's dimension counts.
    """
    leads = set(g.leading_words())
    lengths = sorted({len(w) for w in leads})
    succ = _successors(g)
    limit = g.degree_cap if max_degree is None else max_degree
    infinite = ufnarovski_has_cycle(g)
    by_degree: list[list[Word]] = [[()]]
    budget = ENUMERATION_BUDGET
    d = 0
    while True:
        if () in leads:
            by_degree = [[]]
            break
        if infinite and d >= limit:
            break
        nxt = []
        for w in by_degree[-1]:
            for a in succ(w):
                c = w + (a,)
                if not any(len(c) >= L and c[-L:] in leads for L in lengths):
                    nxt.append(c)
        budget -= len(nxt)
        if budget < 0:
            log.warning("standard monomial enumeration stopped at degree %d (budget)", d + 1)
            break
        d += 1
        by_degree.append(nxt)
        if not nxt:
            break
    empty = next((k for k, ws in enumerate(by_degree) if not ws), None)
    finite = (not infinite) and g.is_complete and empty is not None
    if finite:
        dim = g.vertex_count * len(by_degree[0]) + sum(len(ws) for ws in by_degree[1:])
        cert = FinitenessCertificate(True, dim, empty, g.degree_cap)
    else:
        cert = FinitenessCertificate(False, None, None, g.degree_cap)
    if finite:
        by_degree = by_degree[:empty]
    return by_degree, cert


# -- pipeline ----------------------------------------------------------------------------


def presentation_order(p: Presentation, precedence: Sequence[str] | None = None) -> MonomialOrder:
    return MonomialOrder.deglex(p.alphabet, precedence)


def initial_cap(relations: Sequence[NcPoly]) -> int:
    return 2 * max((r.degree() for r in relations), default=1) + 2


def groebner(
    p: Presentation,
    order: MonomialOrder | None = None,
    cap: int | None = None,
) -> GroebnerBasis:
    order = order or presentation_order(p)
    cap = cap if cap is not None else initial_cap(p.relations)
    return complete(p.relations, order, cap, p.arrow_endpoints(), len(p.vertices))


@dataclass
class DimensionResult:
    dimension: int
    basis: GroebnerBasis
    monomials: list[list[Word]] = field(default_factory=list)
    certificate: FinitenessCertificate | None = None


def compute(
    p: Presentation,
    order: MonomialOrder | None = None,
    ceiling: int = HARD_CEILING,
) -> DimensionResult:
    """Complete, enumerate and count, doubling the degree cap until a certificate or ``ceiling``."""
    order = order or presentation_order(p)
    cap = min(initial_cap(p.relations), ceiling)
    while True:
        gb = groebner(p, order, cap)
        monomials, cert = standard_monomials(gb)
        if cert.finite:
            return DimensionResult(cert.dimension, gb, monomials, cert)
        if gb.is_complete and ufnarovski_has_cycle(gb):
            raise NotFiniteError(cap, f"infinite-dimensional (Groebner basis complete at cap {cap})")
        if cap >= ceiling:
            raise NotFiniteError(cap)
        cap = min(2 * cap, ceiling)


def dimension(p: Presentation, order: MonomialOrder | None = None, ceiling: int = HARD_CEILING) -> int:
    return compute(p, order, ceiling).dimension
