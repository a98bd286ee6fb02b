"""Contraction algebras of quivers with relations.

Compute noncommutative Groebner bases, dimensions of vertex-killing quotients and
their abelianizations, structural tests on the resulting finite-dimensional
algebras, and knitting bounds on marked Dynkin diagrams.
"""

__version__ = "0.1.0"

from .freealg import AlphabetError, MonomialOrder, NcPoly, commutator, compare, multiply
from .quiverpres import (
    Arrow,
    Presentation,
    PresentationError,
    Quiver,
    abelianize,
    builtin,
    contract,
    validate,
)
from .ncgb import (
    FinitenessCertificate,
    GroebnerBasis,
    NotFiniteError,
    complete,
    compute,
    dimension,
    normal_form,
    standard_monomials,
)
from .structalg import (
    FiniteAlgebra,
    build,
    cwidth,
    is_commutative,
    is_self_injective,
    tangent_dimension,
    width,
)
from .knit import KnitRun, MarkedDynkin, knit, lower_bound_table
from .defcheck import TestAlgebra, def_tangent_dimension, verify_hom
from .presfile import format_presentation, parse_presentation
