"""Checking 1-pointed algebra maps out of a contraction algebra into an artinian test algebra.

Deformations over a test algebra Γ correspond to augmented algebra maps from the
contraction algebra to Γ, so a candidate family is a deformation exactly when
every defining relation evaluates to zero in Γ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .freealg import MonomialOrder, NcPoly
from .ncgb import HARD_CEILING, GroebnerBasis, compute
from .quiverpres import Arrow, Presentation, PresentationError, Quiver
from .structalg import FiniteAlgebra, Vector, build, element, is_nilpotent_augmentation, tangent_dimension


class NotPointedError(ValueError):
    """An assignment has a nonzero unit component, so it is not a 1-pointed map."""


@dataclass(frozen=True)
class TestAlgebra:
    algebra: FiniteAlgebra
    presentation: Presentation | None = None
    groebner: GroebnerBasis | None = None

    __test__ = False  # not a pytest class

    def __post_init__(self):
        if not is_nilpotent_augmentation(self.algebra):
            raise ValueError("test algebra must have a nilpotent augmentation ideal")

    @classmethod
    def from_presentation(cls, p: Presentation, order: MonomialOrder | None = None) -> "TestAlgebra":
        gb = compute(p, order).basis
        return cls(build(gb), p, gb)

    @classmethod
    def from_table(cls, labels: Sequence[str], table) -> "TestAlgebra":
        return cls(FiniteAlgebra.from_table(labels, table))

    def vector(self, spec) -> Vector:
        """Coerce a polynomial, dense list, sparse dict or {label: coeff} mapping to coordinates."""
        if isinstance(spec, NcPoly):
            if self.groebner is None:
                raise ValueError("polynomial images need a test algebra given by a presentation")
            return element(self.algebra, spec, self.groebner)
        if isinstance(spec, Mapping):
            labels = self.algebra.labels
            out = {}
            for k, v in spec.items():
                idx = labels.index(k) if isinstance(k, str) else k
                if Fraction(v):
                    out[idx] = Fraction(v)
            return out
        return {i: Fraction(v) for i, v in enumerate(spec) if v}


def truncated_polynomial_ring(k: int, name: str = "e") -> TestAlgebra:
    """C[e]/e^k as a test algebra; k = 2 gives the dual numbers."""
    if k < 1:
        raise ValueError("k must be >= 1")
    q = Quiver(("pt",), (Arrow(name, "pt", "pt"),))
    rels = (NcPoly(q.alphabet, {(0,) * k: 1}),) if k >= 2 else ()
    if k == 1:
        return TestAlgebra(FiniteAlgebra(("1",), (({0: Fraction(1)},),)))
    return TestAlgebra.from_presentation(Presentation(f"C[{name}]/{name}^{k}", q, rels))


def dual_numbers() -> TestAlgebra:
    return truncated_polynomial_ring(2)


def evaluate(p: NcPoly, gamma: TestAlgebra, images: Sequence[Vector]) -> Vector:
    a = gamma.algebra
    total: Vector = {}
    for word, c in p.items():
        v: Vector = {0: c}
        for g in word:
            v = a.mul(v, images[g])
            if not v:
                break
        for k, x in v.items():
            nv = total.get(k, 0) + x
            if nv:
                total[k] = nv
            else:
                total.pop(k, None)
    return total


def _images(p: Presentation, gamma: TestAlgebra, h: Mapping[str, object]) -> list[Vector]:
    unknown = set(h) - set(p.alphabet)
    if unknown:
        raise PresentationError(f"assignment names unknown generators {sorted(unknown)}")
    images = []
    for name in p.alphabet:
        v = gamma.vector(h.get(name, {}))
        if v.get(0):
            raise NotPointedError(f"{name} is sent outside the augmentation ideal")
        images.append(v)
    return images


def verify_hom(p: Presentation, gamma: TestAlgebra, h: Mapping[str, object]) -> bool:
    """True iff every relation of ``p`` vanishes in ``gamma`` under the assignment ``h``."""
    if not p.is_local():
        raise PresentationError("homomorphism checks need a single-vertex presentation")
    images = _images(p, gamma, h)
    return all(not evaluate(r, gamma, images) for r in p.relations)


def def_tangent_dimension(p: Presentation, order: MonomialOrder | None = None,
                          ceiling: int = HARD_CEILING) -> int:
    """Dimension of the deformation functor on the dual numbers, i.e. dim n/n^2."""
    return tangent_dimension(build(compute(p, order, ceiling).basis))
