from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mouldkit.kernel import MultiPoly, NoSolution
from mouldkit.mould import (
    ConstantMould,
    Mould,
    is_pus_neutral,
    mantar,
    push,
    swap,
    teru,
)
from mouldkit.symmetry import (
    AlternilityCertificate,
    alternality_defect,
    alternil_up_to_constant,
    alternility_defect,
    ari_alil_space,
    ari_sena_pusnu_space,
    in_ari_al_star_il,
    in_ari_sena_pusnu,
    is_alternal,
    senary_eq41_holds,
    senary_holds,
    weight_mould_basis,
)


def v(m, i):
    return MultiPoly.var(m, i - 1)


def Mo(depth, comps):
    return Mould.from_components(depth, comps)


def dmr3_mould(a=1):
    """The weight-3 mould (0, a*u1^2, -a*(u1 - u2), 0): the ma image of the
    one-dimensional double-shuffle component at weight 3."""
    return Mo(3, {1: {(2,): a}, 2: {(1, 0): -a, (0, 1): a}})


def witness3_mould():
    """Same depth-1 part with the opposite depth-2 sign; fails senary at
    r = 2 and keeps the sign conventions honest."""
    return Mo(3, {1: {(2,): 1}, 2: {(1, 0): 1, (0, 1): -1}})


fractions_st = st.fractions(min_value=-6, max_value=6, max_denominator=8)


@st.composite
def moulds(draw, max_depth=4, max_deg=4):
    depth = draw(st.integers(min_value=1, max_value=max_depth))
    comps = {}
    for m in range(1, depth + 1):
        exps = st.tuples(*([st.integers(min_value=0, max_value=max_deg)] * m))
        comps[m] = MultiPoly(
            m, draw(st.dictionaries(exps, fractions_st, max_size=3))
        )
    return Mo(depth, comps)


# -- alternality -------------------------------------------------------------


def test_alternal_pins():
    assert is_alternal(Mo(2, {2: {(1, 0): 1, (0, 1): -1}}))
    assert not is_alternal(Mo(2, {2: {(1, 0): 1}}))
    assert is_alternal(dmr3_mould())
    assert is_alternal(Mould.zero(3))


def test_alternal_rejects_nonzero_constant_component():
    m = Mould.unit(2)
    assert not is_alternal(m)


def test_alternality_defect_11():
    m = Mo(2, {2: {(1, 0): 1}})
    assert alternality_defect(m, 1, 1) == v(2, 1) + v(2, 2)


# -- alternility -------------------------------------------------------------


def test_alternil_zero_mould():
    cert = alternil_up_to_constant(Mould.zero(3))
    assert isinstance(cert, AlternilityCertificate)
    assert cert.valid
    assert cert.constant == ConstantMould([0])


def test_alternil_constant_component_pin():
    # N^2 = 1: the (1,1) sum is 2, absorbed by C_2 = -1
    n = Mo(2, {2: {(0, 0): 1}})
    assert alternility_defect(n, 1, 1) == MultiPoly.const(2, 2)
    cert = alternil_up_to_constant(n)
    assert isinstance(cert, AlternilityCertificate), cert
    assert cert.constant.value(2) == Fraction(-1)


def test_alternil_swap_of_dmr3_certificate():
    n = swap(dmr3_mould())
    assert n.component(2) == v(2, 1) - 2 * v(2, 2)
    cert = alternil_up_to_constant(n)
    assert isinstance(cert, AlternilityCertificate), cert
    assert cert.constant.value(2) == 0
    assert cert.constant.value(3) == Fraction(1, 3)


def test_alternil_scaling_is_linear():
    n = swap(dmr3_mould(a=4))
    cert = alternil_up_to_constant(n)
    assert cert.constant.value(3) == Fraction(4, 3)


def test_alternil_no_solution_carries_defects():
    n = Mo(2, {2: {(1, 0): 1}})
    res = alternil_up_to_constant(n)
    assert isinstance(res, NoSolution), res
    assert len(res.defects) == 1
    p, q, defect = res.defects[0]
    assert (p, q) == (1, 1)
    assert defect == v(2, 1) + v(2, 2)


def test_alternil_requires_vanishing_depth_zero():
    with pytest.raises(AssertionError):
        alternil_up_to_constant(Mould.unit(2))


# -- senary ------------------------------------------------------------------


def test_senary_r1_is_evenness():
    assert senary_holds(Mo(1, {1: {(2,): 1}}), 1)
    assert not senary_holds(Mo(1, {1: {(1,): 1}}), 1)
    assert senary_holds(Mo(2, {2: {(1, 1): 1}}), 1)  # Fil^2: M^1 = 0


def test_senary_depth2_counterexample():
    assert not senary_holds(Mo(2, {2: {(1, 0): 1}}), 2)


def test_senary_on_dmr3_mould():
    m = dmr3_mould()
    for r in (1, 2, 3):
        assert senary_holds(m, r), r


def test_senary_flipped_sign_witness_fails_at_r2():
    m = witness3_mould()
    assert senary_holds(m, 1)
    assert not senary_holds(m, 2)


def test_senary_beyond_weight_is_vacuous_on_dmr3():
    m = dmr3_mould()
    for r in (4, 5):
        assert senary_holds(m, r), r


def test_senary_depth_plus_one_has_content():
    # M^1 = u1^2 is even (r = 1 holds) but the r = 2 = depth+1 instance
    # compares 2y1 + y2 with y2 - y1 and fails.
    m = Mo(1, {1: {(2,): 1}})
    assert senary_holds(m, 1)
    assert not senary_holds(m, 2)


def test_senary_matches_operator_composite_on_dmr3():
    m = dmr3_mould()
    lhs = teru(m)
    rhs = push(mantar(teru(mantar(m))))
    for r in (1, 2, 3, 4):
        assert (lhs.component(r) == rhs.component(r)) == senary_holds(m, r)


# -- the collision-map formulation -------------------------------------------


def test_eq41_trivial_pins():
    assert senary_eq41_holds(Mould.zero(3), 1)
    assert senary_eq41_holds(Mould.zero(3), 2)
    assert senary_eq41_holds(Mo(2, {2: {(1, 1): 1}}), 1)  # Fil^2 at r = 1


def test_eq41_depth2_counterexample():
    assert not senary_eq41_holds(Mo(2, {2: {(1, 0): 1}}), 2)


def test_eq41_r1_detects_odd_depth1():
    assert senary_eq41_holds(Mo(1, {1: {(2,): 1}}), 1)
    assert not senary_eq41_holds(Mo(1, {1: {(1,): 1}}), 1)


@settings(max_examples=50, deadline=None)
@given(moulds(max_depth=4, max_deg=4), st.integers(1, 3))
def test_eq41_agrees_with_senary(m, r):
    assert senary_holds(m, r) == senary_eq41_holds(m, r)


# -- membership predicates ---------------------------------------------------


def test_in_ari_sena_pusnu_pins():
    assert in_ari_sena_pusnu(Mould.zero(3))
    assert not in_ari_sena_pusnu(Mo(2, {2: {(1, 0): 1}}))
    assert not in_ari_sena_pusnu(Mould.unit(2))


def test_in_ari_sena_pusnu_checks_depth_plus_one():
    # M^2 = u1 u2 (u1 + u2) is push-invariant with pus-neutral swap, so it
    # clears every condition up to r = depth; the r = 3 senary instance is
    # the only obstruction.
    m = Mo(2, {2: {(2, 1): 1, (1, 2): 1}})
    assert is_pus_neutral(swap(m))
    assert senary_holds(m, 1) and senary_holds(m, 2)
    assert not senary_holds(m, 3)
    assert not in_ari_sena_pusnu(m)


def test_in_ari_al_star_il_pins():
    assert in_ari_al_star_il(Mould.zero(3))
    assert not in_ari_al_star_il(Mo(2, {2: {(1, 0): 1}}))
    assert in_ari_al_star_il(dmr3_mould())
    assert not in_ari_al_star_il(witness3_mould())


# -- graded spaces -----------------------------------------------------------


def test_weight_basis_dimensions():
    for w, expected in [(1, 1), (2, 2), (3, 4), (4, 8), (5, 16), (6, 32)]:
        assert len(weight_mould_basis(w)) == expected, w


def test_weight_basis_is_weight_homogeneous():
    for b in weight_mould_basis(4):
        for m in range(1, b.depth + 1):
            comp = b.component(m)
            if not comp.is_zero():
                assert comp.degree() == 4 - m


def test_ari_alil_space_weight3():
    sols = ari_alil_space(3)
    assert len(sols) == 1
    sol = sols[0]
    # proportional to the dmr image (u1^2, -(u1 - u2), 0)
    c = sol.component(1).coefficient((2,))
    assert c != 0
    assert sol == c * dmr3_mould() or sol == (-c) * dmr3_mould()
    assert in_ari_al_star_il(sol)


def test_ari_alil_space_weight3_fil2_empty():
    assert ari_alil_space(3, fil2=True) == []


def test_ari_sena_pusnu_space_weight3_empty():
    assert ari_sena_pusnu_space(3) == []


def test_ari_spaces_members_pass_predicates():
    for w in (2, 4):
        for sol in ari_alil_space(w):
            assert in_ari_al_star_il(sol), w
        for sol in ari_sena_pusnu_space(w):
            assert in_ari_sena_pusnu(sol), w
            assert is_alternal(sol), w
