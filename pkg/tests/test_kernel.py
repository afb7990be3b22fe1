from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mouldkit.kernel import (
    MultiPoly,
    NoSolution,
    NotDivisible,
    MalformedSubstitution,
    PoleError,
    RatFun,
    RatMatrix,
    embed_vars,
    exact_div,
    nullspace,
    permute_vars,
    rank,
    rat,
    solve_linear,
    substitute,
)


def P(nvars, terms):
    return MultiPoly(nvars, terms)


def x(nvars, i):
    return MultiPoly.var(nvars, i)


# -- strategies ------------------------------------------------------------

fractions_st = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


@st.composite
def polys(draw, nvars=None, max_deg=3, max_terms=5):
    if nvars is None:
        nvars = draw(st.integers(min_value=1, max_value=3))
    exps = st.tuples(*([st.integers(min_value=0, max_value=max_deg)] * nvars))
    terms = draw(
        st.dictionaries(exps, fractions_st, max_size=max_terms)
    )
    return MultiPoly(nvars, terms)


# -- MultiPoly basics ------------------------------------------------------


def test_zero_and_const():
    z = MultiPoly.zero(2)
    assert z.is_zero()
    assert z.degree() == -1
    c = MultiPoly.const(2, Fraction(3, 4))
    assert c.is_constant()
    assert c.constant_value() == Fraction(3, 4)
    assert (c - c).is_zero()


def test_var_and_arith():
    x1, x2 = x(2, 0), x(2, 1)
    p = (x1 + x2) * (x1 - x2)
    assert p == x1 * x1 - x2 * x2
    assert p.degree() == 2
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((0, 2)) == -1
    assert p.coefficient((1, 1)) == 0


def test_pow():
    x1 = x(1, 0)
    p = (x1 + MultiPoly.const(1, 1)) ** 3
    assert p.coefficient((0,)) == 1
    assert p.coefficient((1,)) == 3
    assert p.coefficient((2,)) == 3
    assert p.coefficient((3,)) == 1


def test_homogeneous():
    x1, x2 = x(2, 0), x(2, 1)
    assert (x1 * x1 + x1 * x2).is_homogeneous()
    assert not (x1 + x1 * x2).is_homogeneous()
    assert MultiPoly.zero(2).is_homogeneous()


def test_scalar_mul():
    x1 = x(1, 0)
    assert 0 * x1 == MultiPoly.zero(1)
    assert Fraction(1, 2) * (2 * x1) == x1


@given(polys(nvars=2), polys(nvars=2), polys(nvars=2))
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + MultiPoly.zero(2) == a
    assert a * MultiPoly.const(2, 1) == a
    assert (a - a).is_zero()


# -- substitution ----------------------------------------------------------


def test_substitute_swap_vars():
    # p(x1, x2) -> p(x2, x1)
    x1, x2 = x(2, 0), x(2, 1)
    p = x1 * x1 + 2 * x2
    q = substitute(p, [(0, 1), (1, 0)], 2)
    assert q == x2 * x2 + 2 * x1


def test_substitute_difference():
    # x1 -> x1 - x2 in one variable to two
    p = x(1, 0) ** 2
    q = substitute(p, [(1, -1)], 2)
    x1, x2 = x(2, 0), x(2, 1)
    assert q == x1 * x1 - 2 * x1 * x2 + x2 * x2


def test_substitute_collapse_to_zero():
    # x1 -> 0 kills everything but the constant term
    p = x(1, 0) + MultiPoly.const(1, 5)
    q = substitute(p, [(0, 0)], 2)
    assert q == MultiPoly.const(2, 5)


def test_substitute_bad_shape():
    p = x(2, 0)
    with pytest.raises(MalformedSubstitution):
        substitute(p, [(1, 0)], 2)
    with pytest.raises(MalformedSubstitution):
        substitute(p, [(1, 0), (0,)], 2)


@given(polys(nvars=2, max_deg=2), polys(nvars=2, max_deg=2))
@settings(max_examples=50)
def test_substitute_is_ring_hom(a, b):
    forms = [(1, 1, 0), (0, 2, -1)]
    sa = substitute(a, forms, 3)
    sb = substitute(b, forms, 3)
    assert substitute(a + b, forms, 3) == sa + sb
    assert substitute(a * b, forms, 3) == sa * sb


def test_permute_and_embed():
    x1, x2 = x(2, 0), x(2, 1)
    p = x1 * x1 + 3 * x2
    assert permute_vars(p, [1, 0]) == x2 * x2 + 3 * x1
    q = embed_vars(p, [0, 2], 3)
    y1, y3 = x(3, 0), x(3, 2)
    assert q == y1 * y1 + 3 * y3


# -- exact division --------------------------------------------------------


def test_exact_div_pinned():
    # ((x1+x2)^2 - x1^2) / x2 == 2 x1 + x2
    x1, x2 = x(2, 0), x(2, 1)
    num = (x1 + x2) ** 2 - x1 ** 2
    q = exact_div(num, x2)
    assert q == 2 * x1 + x2


def test_exact_div_failure():
    x1, x2 = x(2, 0), x(2, 1)
    with pytest.raises(NotDivisible):
        exact_div(x1 * x1 + x2, x2)
    with pytest.raises(ZeroDivisionError):
        exact_div(x1, MultiPoly.zero(2))


def test_exact_div_zero_numerator():
    assert exact_div(MultiPoly.zero(2), x(2, 1)).is_zero()


@given(polys(nvars=2, max_deg=2), polys(nvars=2, max_deg=2))
@settings(max_examples=60)
def test_exact_div_roundtrip(a, b):
    if b.is_zero():
        return
    assert exact_div(a * b, b) == a


# -- RatFun ----------------------------------------------------------------


def test_ratfun_cancellation():
    x1, x2 = x(2, 0), x(2, 1)
    num = (x1 + x2) ** 2 - x1 ** 2
    r = RatFun(num, {(0, 1): 1})  # divide by x2
    assert r.is_polynomial()
    assert r.as_poly() == 2 * x1 + x2


def test_ratfun_surviving_pole():
    x1 = x(2, 0)
    r = RatFun(x1, {(0, 1): 1})  # x1 / x2 does not reduce
    assert not r.is_polynomial()
    with pytest.raises(PoleError):
        r.as_poly()


def test_ratfun_reciprocal_and_mul():
    # (x1 + x2) * 1/(x1 + x2) == 1
    x1, x2 = x(2, 0), x(2, 1)
    r = RatFun.reciprocal_linear((1, 1), 2) * (x1 + x2)
    assert r.is_polynomial()
    assert r.as_poly() == MultiPoly.const(2, 1)


def test_ratfun_reciprocal_scaling():
    # 1/(2 x1) == (1/2) / x1
    r = RatFun.reciprocal_linear((2, 0), 2)
    assert r.factors == {(1, 0): 1}
    assert r.num == MultiPoly.const(2, Fraction(1, 2))


def test_ratfun_add_common_denominator():
    # 1/x1 + 1/x2 == (x1 + x2)/(x1 x2)
    a = RatFun.reciprocal_linear((1, 0), 2)
    b = RatFun.reciprocal_linear((0, 1), 2)
    s = a + b
    x1, x2 = x(2, 0), x(2, 1)
    assert s.num == x1 + x2
    assert s.factors == {(1, 0): 1, (0, 1): 1}


def test_ratfun_add_cancels():
    # 1/x1 - 1/x1 == 0
    a = RatFun.reciprocal_linear((1, 0), 2)
    s = a - a
    assert s.is_zero()
    assert s.factors == {}


def test_ratfun_divided_difference_is_polynomial():
    # (x1^3 - x2^3)/(x1 - x2) = x1^2 + x1 x2 + x2^2
    x1, x2 = x(2, 0), x(2, 1)
    r = RatFun(x1 ** 3 - x2 ** 3) * RatFun.reciprocal_linear((1, -1), 2)
    assert r.as_poly() == x1 * x1 + x1 * x2 + x2 * x2


@given(polys(nvars=2, max_deg=2), polys(nvars=2, max_deg=2))
@settings(max_examples=40)
def test_ratfun_field_laws(a, b):
    inv = RatFun.reciprocal_linear((1, 2), 2)
    ra = RatFun(a) * inv
    rb = RatFun(b) * inv
    assert ra + rb == RatFun(a + b) * inv
    assert (ra - rb) + rb == ra


# -- linear algebra --------------------------------------------------------


def test_nullspace_pinned():
    m = RatMatrix(1, 2, [[1, -1]])
    basis = nullspace(m)
    assert basis == [(Fraction(1), Fraction(1))]


def test_nullspace_full_rank():
    m = RatMatrix(2, 2, [[1, 0], [0, 1]])
    assert nullspace(m) == []
    assert rank(m) == 2


def test_nullspace_zero_matrix():
    m = RatMatrix(2, 3, [[0, 0, 0], [0, 0, 0]])
    basis = nullspace(m)
    assert len(basis) == 3
    assert rank(m) == 0


def test_solve_linear():
    m = RatMatrix(2, 2, [[1, 1], [1, -1]])
    sol = solve_linear(m, [Fraction(3), Fraction(1)])
    assert sol == [Fraction(2), Fraction(1)]


def test_solve_linear_inconsistent():
    m = RatMatrix(2, 1, [[1], [1]])
    sol = solve_linear(m, [Fraction(0), Fraction(1)])
    assert isinstance(sol, NoSolution)


def test_solve_linear_underdetermined():
    # free variable pinned to zero, result still a genuine solution
    m = RatMatrix(1, 2, [[1, 1]])
    sol = solve_linear(m, [Fraction(5)])
    assert sol == [Fraction(5), Fraction(0)]


@st.composite
def matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = draw(st.integers(min_value=1, max_value=4))
    entries = draw(
        st.lists(
            st.lists(fractions_st, min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return RatMatrix(rows, cols, entries)


@given(matrices())
@settings(max_examples=60)
def test_nullspace_properties(m):
    basis = nullspace(m)
    assert rank(m) + len(basis) == m.cols
    for vec in basis:
        for row in m.entries:
            assert sum(a * v for a, v in zip(row, vec)) == 0
        # primitive integer form, first nonzero entry positive
        nz = [v for v in vec if v]
        assert nz and nz[0] > 0
        assert all(v.denominator == 1 for v in vec)


def test_rat_coercion():
    assert rat("2/3") == Fraction(2, 3)
    assert rat(5) == Fraction(5)
    assert rat(Fraction(1, 7)) == Fraction(1, 7)
