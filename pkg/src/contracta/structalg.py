"""Finite-dimensional local algebras given by standard-monomial bases and multiplication tables."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .freealg import MonomialOrder, NcPoly, Word, word_str
from .linalg import Echelon, Row, nullspace, rank
from .ncgb import GroebnerBasis, HARD_CEILING, compute, standard_monomials
from .quiverpres import Presentation, PresentationError, abelianize, contract

EXACT_ASSOCIATIVITY_LIMIT = 40
SAMPLED_TRIPLES = 10_000
SEED = 20140501

Vector = dict[int, Fraction]


class AssociativityError(ArithmeticError):
    """The multiplication table is not associative (the Groebner basis was incomplete)."""


@dataclass(frozen=True)
class FiniteAlgebra:
    """Basis ``labels`` with ``basis[0]`` the unit and ``table[i][j]`` the sparse product vector."""

    labels: tuple[str, ...]
    table: tuple[tuple[Vector, ...], ...]
    words: tuple[Word, ...] | None = None
    alphabet: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def radical_flag(self) -> bool:
        return self.words is None or all(len(w) >= 1 for w in self.words[1:])

    @classmethod
    def from_table(cls, labels: Sequence[str], table) -> "FiniteAlgebra":
        """Build from explicit data; rows of ``table`` may be dense lists or sparse dicts."""
        n = len(labels)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                entry = table[i][j]
                if isinstance(entry, dict):
                    vec = {k: Fraction(v) for k, v in entry.items() if v}
                else:
                    vec = {k: Fraction(v) for k, v in enumerate(entry) if v}
                row.append(vec)
            rows.append(tuple(row))
        alg = cls(tuple(labels), tuple(rows))
        alg.check_unit()
        check_associative(alg)
        return alg

    def mul(self, u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        table = self.table
        for i, a in u.items():
            row = table[i]
            for j, b in v.items():
                for k, c in row[j].items():
                    nv = out.get(k, 0) + a * b * c
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def basis_vector(self, i: int) -> Vector:
        return {i: Fraction(1)}

    def unit(self) -> Vector:
        return {0: Fraction(1)}

    def check_unit(self) -> None:
        for i in range(self.dim):
            e = {i: Fraction(1)}
            if self.table[0][i] != e or self.table[i][0] != e:
                raise ValueError("basis[0] is not a two-sided identity")

    def format_vector(self, v: Vector) -> str:
        if not v:
            return "0"
        parts = []
        for k in sorted(v):
            c = v[k]
            lab = self.labels[k]
            if lab == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(lab)
            elif c == -1:
                parts.append(f"-{lab}")
            else:
                parts.append(f"{c}*{lab}")
        return " + ".join(parts).replace("+ -", "- ")


def build(g: GroebnerBasis) -> FiniteAlgebra:
    monomials, cert = standard_monomials(g)
    if not cert.finite:
        raise ValueError("Groebner basis has no finiteness certificate")
    if g.vertex_count != 1:
        raise PresentationError("multiplication tables are built for single-vertex algebras only")
    words = [w for ws in monomials for w in ws]
    index = {w: i for i, w in enumerate(words)}
    red = g.reducer()
    table = []
    for u in words:
        row = []
        for v in words:
            w = u + v
            if w in index:
                row.append({index[w]: Fraction(1)})
            else:
                nf = red.normal_form({w: Fraction(1)})
                row.append({index[x]: c for x, c in nf.items()})
        table.append(tuple(row))
    alg = FiniteAlgebra(
        tuple(word_str(w, g.alphabet) for w in words), tuple(table), tuple(words), g.alphabet
    )
    check_associative(alg)
    return alg


def algebra(p: Presentation, order: MonomialOrder | None = None, ceiling: int = HARD_CEILING) -> FiniteAlgebra:
    return build(compute(p, order, ceiling).basis)


def _triples(n: int):
    if n <= EXACT_ASSOCIATIVITY_LIMIT:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    yield i, j, k
    else:
        rng = random.Random(SEED)
        for _ in range(SAMPLED_TRIPLES):
            yield rng.randrange(n), rng.randrange(n), rng.randrange(n)


def check_associative(a: FiniteAlgebra) -> None:
    t = a.table
    for i, j, k in _triples(a.dim):
        left = a.mul(t[i][j], {k: Fraction(1)})
        right = a.mul({i: Fraction(1)}, t[j][k])
        if left != right:
            raise AssociativityError(f"({a.labels[i]}*{a.labels[j]})*{a.labels[k]} != "
                                     f"{a.labels[i]}*({a.labels[j]}*{a.labels[k]})")


def is_commutative(a: FiniteAlgebra) -> bool:
    t = a.table
    return all(t[i][j] == t[j][i] for i in range(a.dim) for j in range(i + 1, a.dim))


def radical_powers(a: FiniteAlgebra) -> list[int]:
    """Dimensions of n, n^2, n^3, ... down to 0 for the augmentation ideal n."""
    current = [{i: Fraction(1)} for i in range(1, a.dim)]
    dims = []
    while True:
        e = Echelon()
        for v in current:
            e.add(v)
        dims.append(e.rank)
        if e.rank == 0:
            return dims
        if len(dims) > a.dim + 1:
            raise ValueError("augmentation ideal is not nilpotent")
        current = [
            a.mul(row, {j: Fraction(1)}) for row in e.pivots.values() for j in range(1, a.dim)
        ]


def is_nilpotent_augmentation(a: FiniteAlgebra) -> bool:
    if any(a.table[i][j].get(0) for i in range(1, a.dim) for j in range(1, a.dim)):
        return False
    try:
        radical_powers(a)
    except ValueError:
        return False
    return True


def tangent_dimension(a: FiniteAlgebra) -> int:
    """dim n/n^2 for the augmentation ideal n."""
    products = (a.table[i][j] for i in range(1, a.dim) for j in range(1, a.dim))
    return (a.dim - 1) - rank(products)


def socle(a: FiniteAlgebra, side: str = "both") -> list[Vector]:
    """Basis of the annihilator of n: ``left`` means v*n = 0, ``right`` n*v = 0."""
    rows: list[Row] = []
    n = a.dim
    for j in range(1, n):
        if side in ("left", "both"):
            # coefficient k of v*b_j is sum_i v_i table[i][j][k]
            for k in range(n):
                rows.append({i: a.table[i][j][k] for i in range(n) if a.table[i][j].get(k)})
        if side in ("right", "both"):
            for k in range(n):
                rows.append({i: a.table[j][i][k] for i in range(n) if a.table[j][i].get(k)})
    return nullspace([r for r in rows if r], n)


def is_self_injective(a: FiniteAlgebra) -> bool:
    """Local Frobenius test: both one-sided socles are one-dimensional."""
    if a.dim == 1:
        return True
    return len(socle(a, "left")) == 1 and len(socle(a, "right")) == 1


def width(p: Presentation, kill: Sequence[str] | None = None, order: MonomialOrder | None = None,
          ceiling: int = HARD_CEILING) -> int:
    q = contract(p, kill) if kill else p
    return compute(q, order, ceiling).dimension


def cwidth(p: Presentation, kill: Sequence[str] | None = None, order: MonomialOrder | None = None,
           ceiling: int = HARD_CEILING) -> int:
    q = contract(p, kill) if kill else p
    return compute(abelianize(q), order, ceiling).dimension


def contraction_algebra(p: Presentation, kill: Sequence[str] | None = None,
                        order: MonomialOrder | None = None, ceiling: int = HARD_CEILING) -> FiniteAlgebra:
    q = contract(p, kill) if kill else p
    return algebra(q, order, ceiling)


def element(a: FiniteAlgebra, p: NcPoly, g: GroebnerBasis) -> Vector:
    """Coordinates of a polynomial over ``a``'s generators, via reduction by ``g``."""
    if a.words is None:
        raise ValueError("algebra was not built from a Groebner basis")
    index = {w: i for i, w in enumerate(a.words)}
    nf = g.reducer().normal_form(dict(p.items()))
    return {index[w]: c for w, c in nf.items()}
