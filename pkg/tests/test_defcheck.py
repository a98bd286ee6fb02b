from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from contracta.defcheck import (
    NotPointedError,
    TestAlgebra,
    def_tangent_dimension,
    dual_numbers,
    truncated_polynomial_ring,
    verify_hom,
)
from contracta.freealg import NcPoly
from contracta.ncgb import normal_form
from contracta.quiverpres import Arrow, BUILTINS, Presentation, Quiver, builtin, contract
from contracta.structalg import algebra, tangent_dimension

CUSP = builtin("quantum_cusp", 1)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=7)


def one_loop(relation_power: int) -> Presentation:
    q = Quiver(("v",), (Arrow("y", "v", "v"),))
    return Presentation("yk", q, (NcPoly(q.alphabet, {(0,) * relation_power: 1}),))


@given(rationals, rationals)
@settings(max_examples=40, deadline=None)
def test_dual_numbers_accept_every_radical_assignment(a, b):
    gamma = dual_numbers()
    assert verify_hom(CUSP, gamma, {"x": {"e": a}, "y": {"e": b}})


def test_square_relation_rejected_in_cube_truncation():
    gamma = truncated_polynomial_ring(3)
    assert not verify_hom(one_loop(2), gamma, {"y": {"e": 1}})
    assert verify_hom(one_loop(3), gamma, {"y": {"e": 1}})


@pytest.mark.parametrize("k", [1, 2, 4])
def test_zero_assignment_always_accepted(k):
    gamma = truncated_polynomial_ring(k)
    for name, n in [("quantum_cusp", 2), ("pagoda", 3)]:
        p = builtin(name, n)
        p = p if p.is_local() else contract(p, ["R"])
        assert verify_hom(p, gamma, {})


def test_unit_component_rejected():
    with pytest.raises(NotPointedError):
        verify_hom(CUSP, dual_numbers(), {"x": {"1": 1}})


def test_test_algebra_must_be_nilpotent():
    # C x C (two orthogonal idempotents) is not 1-pointed artinian
    table = [[[1, 0], [0, 1]], [[0, 1], [0, 1]]]
    with pytest.raises(ValueError):
        TestAlgebra.from_table(["1", "f"], table)


def test_def_tangent_examples():
    assert def_tangent_dimension(CUSP) == 2
    assert def_tangent_dimension(contract(builtin("pagoda", 3), ["R"])) == 1
    assert def_tangent_dimension(Presentation("pt", Quiver(("v",), ()))) == 0


@pytest.mark.parametrize("name", sorted(set(BUILTINS) - {"free2"}))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_def_tangent_matches_structural(name, n):
    p = builtin(name, n)
    p = p if p.is_local() else contract(p, ["R"])
    assert def_tangent_dimension(p) == tangent_dimension(algebra(p))


def _free_truncation() -> TestAlgebra:
    # C<s,t>/(all words of length 3): s <-> t permutes the basis and is an automorphism
    q = Quiver(("v",), (Arrow("s", "v", "v"), Arrow("t", "v", "v")))
    rels = tuple(NcPoly(q.alphabet, {w: 1}) for w in product((0, 1), repeat=3))
    return TestAlgebra.from_presentation(Presentation("T", q, rels))


GAMMA = _free_truncation()


def _swap(vec: dict[int, Fraction]) -> dict[int, Fraction]:
    labels = GAMMA.algebra.labels
    swapped = [lab.translate(str.maketrans("st", "ts")) for lab in labels]
    return {labels.index(swapped[k]): c for k, c in vec.items()}


coords = st.lists(st.integers(-2, 2), min_size=6, max_size=6)


@given(coords, coords)
@settings(max_examples=40, deadline=None)
def test_verify_hom_stable_under_automorphism(cx, cy):
    # radical basis elements are labels[1:]; keep the unit coordinate at zero
    hx = {k + 1: Fraction(c) for k, c in enumerate(cx) if c}
    hy = {k + 1: Fraction(c) for k, c in enumerate(cy) if c}
    before = verify_hom(CUSP, GAMMA, {"x": hx, "y": hy})
    after = verify_hom(CUSP, GAMMA, {"x": _swap(hx), "y": _swap(hy)})
    assert before == after


@given(coords, coords)
@settings(max_examples=40, deadline=None)
def test_verify_hom_matches_substitution(cx, cy):
    # two routes: table evaluation vs substituting polynomials and reducing in Gamma's basis
    gb = GAMMA.groebner
    labels = GAMMA.algebra.labels
    words = GAMMA.algebra.words

    def poly(cs):
        return sum((NcPoly.word(gb.alphabet, words[k + 1], c) for k, c in enumerate(cs) if c),
                   NcPoly.zero(gb.alphabet))

    px, py = poly(cx), poly(cy)
    direct = all(
        normal_form(r.substitute({0: px, 1: py}, gb.alphabet), gb).is_zero() for r in CUSP.relations
    )
    assert verify_hom(CUSP, GAMMA, {"x": px, "y": py}) == direct
    assert len(labels) == 7


def test_polynomial_images():
    gamma = truncated_polynomial_ring(4)
    e = NcPoly.gen(gamma.groebner.alphabet, "e")
    assert verify_hom(one_loop(2), gamma, {"y": e * e})
    assert not verify_hom(one_loop(2), gamma, {"y": e})
