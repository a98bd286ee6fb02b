"""Quivers with relations, vertex-killing quotients, abelianization and the built-in families.

Paths are read left to right: the word ``a*b`` means "first ``a``, then ``b``",
so it is composable when ``target(a) == source(b)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .freealg import NcPoly, Word, commutator, word_str

LEFT_TO_RIGHT = "left-to-right"


class PresentationError(ValueError):
    """A quiver or presentation violates one of its structural invariants."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow names")
        clash = set(names) & set(self.vertices)
        if clash:
            raise PresentationError(f"names used for both vertices and arrows: {sorted(clash)}")
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in self.vertices:
                    raise PresentationError(f"arrow {a.name} uses undeclared vertex {end}")

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def endpoints(self, word: Word) -> tuple[str, str] | None:
        """Source and target of a nonempty composable word, or ``None``."""
        if not word:
            raise ValueError("the empty word has no single endpoint pair")
        arrows = self.arrows
        for g, h in zip(word, word[1:]):
            if arrows[g].target != arrows[h].source:
                return None
        return arrows[word[0]].source, arrows[word[-1]].target

    def loops(self) -> list[Arrow]:
        return [a for a in self.arrows if a.is_loop]


@dataclass(frozen=True)
class Presentation:
    name: str
    quiver: Quiver
    relations: tuple[NcPoly, ...] = ()
    convention: str = LEFT_TO_RIGHT

    def __post_init__(self):
        alpha = self.quiver.alphabet
        for r in self.relations:
            if r.alphabet != alpha:
                raise PresentationError("relation alphabet differs from the quiver's arrows")

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.quiver.alphabet

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def is_local(self) -> bool:
        return len(self.quiver.vertices) == 1

    def arrow_endpoints(self) -> tuple[tuple[int, int], ...]:
        vidx = {v: i for i, v in enumerate(self.quiver.vertices)}
        return tuple((vidx[a.source], vidx[a.target]) for a in self.quiver.arrows)

    def structurally_equal(self, other: "Presentation") -> bool:
        return (
            self.quiver == other.quiver
            and set(self.relations) == set(other.relations)
            and len(self.relations) == len(other.relations)
        )


def diagnostics(p: Presentation) -> list[str]:
    """All invariant violations of ``p``, as human-readable strings."""
    problems = []
    if p.convention != LEFT_TO_RIGHT:
        problems.append(f"unsupported composition convention {p.convention!r}")
        return problems
    q = p.quiver
    for k, rel in enumerate(p.relations, 1):
        if rel.is_zero():
            problems.append(f"relation {k} is zero")
            continue
        ends = set()
        for w, _ in rel.items():
            if len(w) < 2:
                problems.append(
                    f"relation {k}: term {word_str(w, p.alphabet)} has path length {len(w)} < 2"
                )
                continue
            e = q.endpoints(w)
            if e is None:
                problems.append(f"relation {k}: word {word_str(w, p.alphabet)} is not composable")
            else:
                ends.add(e)
        if len(ends) > 1:
            problems.append(f"relation {k}: words have mixed endpoints {sorted(ends)}")
    return problems


def validate(p: Presentation) -> Presentation:
    problems = diagnostics(p)
    if problems:
        raise PresentationError("; ".join(problems))
    return p


def check_kill_set(p: Presentation, kill: Iterable[str]) -> frozenset[str]:
    kill = frozenset(kill)
    unknown = kill - set(p.vertices)
    if unknown:
        raise PresentationError(f"kill set names unknown vertices {sorted(unknown)}")
    if not kill:
        raise PresentationError("kill set is empty")
    if kill >= set(p.vertices):
        raise PresentationError("cannot kill every vertex")
    return kill


def contract(p: Presentation, kill: Iterable[str]) -> Presentation:
    """Present ``A/AeA`` where ``e`` is the sum of the idempotents at the killed vertices."""
    kill = check_kill_set(p, kill)
    q = p.quiver
    keep = [i for i, a in enumerate(q.arrows) if a.source not in kill and a.target not in kill]
    new_index = {old: new for new, old in enumerate(keep)}
    quiver = Quiver(
        tuple(v for v in q.vertices if v not in kill),
        tuple(q.arrows[i] for i in keep),
    )
    relations = []
    for rel in p.relations:
        terms = {}
        for w, c in rel.items():
            if all(g in new_index for g in w):
                terms[tuple(new_index[g] for g in w)] = c
        if terms:
            relations.append(NcPoly(quiver.alphabet, terms))
    return Presentation(f"{p.name}/[{','.join(sorted(kill))}]", quiver, tuple(relations), p.convention)


def abelianize(p: Presentation) -> Presentation:
    if not p.is_local():
        raise PresentationError("abelianization is only defined here for single-vertex presentations")
    alpha = p.alphabet
    gens = [NcPoly.word(alpha, (i,)) for i in range(len(alpha))]
    extra = [commutator(gens[i], gens[j]) for i, j in combinations(range(len(alpha)), 2)]
    return Presentation(f"{p.name}^ab", p.quiver, p.relations + tuple(extra), p.convention)


# -- built-in families -----------------------------------------------------------------


class _Builder:
    """Tiny helper for transcribing relations as sums of (coefficient, "a*b*c") pairs."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.index = {name: i for i, name in enumerate(quiver.alphabet)}

    def w(self, spec: str) -> Word:
        out: list[int] = []
        for tok in spec.split("*"):
            name, _, exp = tok.partition("^")
            out.extend([self.index[name]] * (int(exp) if exp else 1))
        return tuple(out)

    def poly(self, *terms: tuple[Fraction | int, str]) -> NcPoly:
        acc: dict[Word, Fraction] = {}
        for c, spec in terms:
            word = self.w(spec)
            acc[word] = acc.get(word, 0) + Fraction(c)
        return NcPoly(self.quiver.alphabet, acc)


def _quiver(vertices: Sequence[str], arrows: Sequence[tuple[str, str, str]]) -> Quiver:
    return Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))


def _eliminate(p: Presentation, images: Mapping[str, Sequence[tuple[Fraction | int, str]]], name: str) -> Presentation:
    """Remove arrows by substituting the given path combinations, then drop the trivial relations."""
    q = p.quiver
    quiver = Quiver(q.vertices, tuple(a for a in q.arrows if a.name not in images))
    b = _Builder(quiver)
    src = {q.alphabet.index(k): b.poly(*v) for k, v in images.items()}
    relations = []
    for rel in p.relations:
        new = rel.substitute(src, quiver.alphabet)
        if new.is_zero():
            continue
        relations.append(new * math.lcm(*(c.denominator for _, c in new.items())))
    return Presentation(name, quiver, tuple(relations), p.convention)


def pagoda(n: int) -> Presentation:
    q = _quiver(
        ["R", "N"],
        [("a1", "R", "N"), ("a2", "R", "N"), ("b1", "N", "R"), ("b2", "N", "R"),
         ("y1", "R", "R"), ("y2", "N", "N")],
    )
    b = _Builder(q)
    rels = (
        b.poly((1, "y1*a1"), (-1, "a1*y2")),
        b.poly((1, "y1*a2"), (-1, "a2*y2")),
        b.poly((1, "y2*b1"), (-1, "b1*y1")),
        b.poly((1, "y2*b2"), (-1, "b2*y1")),
        b.poly((2, f"y1^{n}"), (-1, "a1*b1"), (1, "a2*b2")),
        b.poly((2, f"y2^{n}"), (-1, "b1*a1"), (1, "b2*a2")),
    )
    p = Presentation(f"pagoda:{n}", q, rels)
    if n == 1:
        # 2*y_i = (path through the other vertex) makes the loops redundant
        half = Fraction(1, 2)
        p = _eliminate(
            Presentation(p.name, q, rels[:4]),
            {
                "y1": [(half, "a1*b1"), (-half, "a2*b2")],
                "y2": [(half, "b1*a1"), (-half, "b2*a2")],
            },
            p.name,
        )
    return p


def laufer(n: int) -> Presentation:
    # the loop at R is also called x in the source diagram; renamed u here
    q = _quiver(
        ["R", "N"],
        [("a", "R", "N"), ("b", "N", "R"), ("u", "R", "R"), ("x", "N", "N"), ("y", "N", "N")],
    )
    b = _Builder(q)
    sign = 1 if (n + 1) % 2 == 0 else -1
    rels = (
        b.poly((1, "a*y^2"), (1, "u*a")),
        b.poly((1, "y^2*b"), (1, "b*u")),
        b.poly((1, "a*b"), (1, f"u^{n}")),
        b.poly((1, "x*y"), (1, "y*x")),
        b.poly((1, "x^2"), (1, "y*b*a"), (1, "b*a*y"), (-sign, f"y^{2 * n + 1}")),
    )
    p = Presentation(f"laufer:{n}", q, rels)
    if n == 1:
        # a*b = -u has a linear term: eliminate u
        p = _eliminate(Presentation(p.name, q, rels[:2] + rels[3:]), {"u": [(-1, "a*b")]}, p.name)
    return p


def quantum_cusp(n: int) -> Presentation:
    q = _quiver(["N"], [("x", "N", "N"), ("y", "N", "N")])
    b = _Builder(q)
    rels = (
        b.poly((1, "x*y"), (1, "y*x")),
        b.poly((1, "x^2"), (-1, f"y^{2 * n + 1}")),
    )
    return Presentation(f"quantum_cusp:{n}", q, rels)


def atiyah(n: int = 1) -> Presentation:
    """The conifold quiver: two vertices, two arrows each way, cubic commutation relations."""
    p = pagoda(1)
    return Presentation("atiyah", p.quiver, p.relations)


def francia(n: int = 1) -> Presentation:
    # vertex S carries the loops c1, d; the loops at R are renamed c1r, dr.
    # ac, bc, inc : S -> R are a/c2 = c1^2/d^2, b/c2 = c1/d and the inclusion;
    # c2, dd : R -> S are multiplication by c2 and d^2.
    q = _quiver(
        ["R", "S"],
        [("inc", "S", "R"), ("bc", "S", "R"), ("ac", "S", "R"),
         ("c2", "R", "S"), ("dd", "R", "S"),
         ("c1r", "R", "R"), ("dr", "R", "R"),
         ("c1", "S", "S"), ("d", "S", "S")],
    )
    b = _Builder(q)
    rels = (
        b.poly((1, "c1*d"), (-1, "d*c1")),
        b.poly((1, "c1r*dr"), (-1, "dr*c1r")),
        b.poly((1, "c1^2"), (-1, "ac*dd")),
        b.poly((1, "c1*d"), (-1, "bc*dd")),
        b.poly((1, "d^2"), (-1, "inc*dd")),
    )
    return Presentation("francia", q, rels)


def francia_nef(n: int = 1) -> Presentation:
    # f = b/c1 = c2/d and g = a/c1 = b/d : S -> R; c1, d : R -> S
    q = _quiver(
        ["R", "S"],
        [("inc", "S", "R"), ("f", "S", "R"), ("g", "S", "R"), ("c1", "R", "S"), ("d", "R", "S")],
    )
    b = _Builder(q)
    rels = (
        b.poly((1, "f*c1"), (-1, "g*d")),
        b.poly((1, "c1*f"), (-1, "d*g")),
    )
    return Presentation("francia_nef", q, rels)


def free2(n: int = 1) -> Presentation:
    q = _quiver(["N"], [("x", "N", "N"), ("y", "N", "N")])
    return Presentation("free2", q, ())


BUILTINS = {
    "pagoda": pagoda,
    "laufer": laufer,
    "francia": francia,
    "francia_nef": francia_nef,
    "quantum_cusp": quantum_cusp,
    "atiyah": atiyah,
    "free2": free2,
}

# vertex contracted away in each two-vertex family
DEFAULT_KILL = {"pagoda": "R", "laufer": "R", "francia": "R", "francia_nef": "R", "atiyah": "R"}


def builtin(name: str, n: int = 1) -> Presentation:
    if name not in BUILTINS:
        raise PresentationError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}")
    if n < 1:
        raise PresentationError("builtin parameter n must be >= 1")
    return validate(BUILTINS[name](n))


def parse_builtin_spec(spec: str) -> tuple[str, int]:
    name, _, arg = spec.partition(":")
    try:
        n = int(arg) if arg else 1
    except ValueError:
        raise PresentationError(f"bad builtin parameter in {spec!r}") from None
    return name, n
