# Exact arithmetic foundation: arbitrary-precision rationals, sparse
# multivariate polynomials, rational functions with factored linear
# denominators, and exact linear algebra over Q.
#
# Everything here is immutable after construction and every operation is a
# pure function, so values can be shared and reused freely.  No floating
# point appears anywhere in this package; all the identities we verify are
# exact polynomial identities and the tolerance is zero.
#
# Conventions:
#   - variables are indexed 0..nvars-1 internally; printing uses x1..xn
#   - a "linear form" is a coefficient tuple over the target variables
#   - lexicographic order on exponent tuples is the monomial order used by
#     exact division (it is a well-order, so division always terminates)

from fractions import Fraction
from math import gcd

from . import _speed as _sp


class NotDivisible(ArithmeticError):
    """Exact division failed; the remainder witness is attached."""


class MalformedSubstitution(ValueError):
    pass


class PoleError(ArithmeticError):
    """A denominator survived where a polynomial was required."""


class NoSolution:
    """Returned (not raised) by solvers when a linear system is inconsistent.

    Carries whatever witness data the solver can offer, e.g. the residual
    defect polynomials of a failed alternility certificate."""

    def __init__(self, reason="", defects=None):
        self.reason = reason
        self.defects = defects if defects is not None else []

    def __repr__(self):
        return "NoSolution(%r)" % (self.reason,)


def rat(x):
    """Coerce ints, strings like '2/3', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class MultiPoly:
    """Sparse polynomial in Q[x_1,...,x_n], keyed by exponent tuple.

    terms maps exponent tuples (length nvars) to nonzero Fractions.  The
    zero polynomial has an empty terms dict.  nvars may be 0, in which case
    the only possible key is () and the polynomial is a constant."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        assert isinstance(nvars, int) and nvars >= 0, nvars
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                c = rat(c)
                if c:
                    e = tuple(e)
                    assert len(e) == nvars, (e, nvars)
                    assert all(isinstance(k, int) and k >= 0 for k in e), e
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        # internal fast path: terms is already a clean dict, adopt it
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = rat(c)
        if not c:
            return cls.zero(nvars)
        return cls._raw(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        """The variable x_{i+1} (index i, 0-based) in nvars variables."""
        assert 0 <= i < nvars, (i, nvars)
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        assert self.is_constant(), self
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        assert isinstance(other, MultiPoly), other
        assert self.nvars == other.nvars, (self.nvars, other.nvars)
        return MultiPoly._raw(self.nvars, _sp.add_terms(self.terms, other.terms))

    def __sub__(self, other):
        assert isinstance(other, MultiPoly), other
        assert self.nvars == other.nvars, (self.nvars, other.nvars)
        return MultiPoly._raw(self.nvars, _sp.sub_terms(self.terms, other.terms))

    def __neg__(self):
        return MultiPoly._raw(self.nvars, _sp.scale_terms(self.terms, Fraction(-1)))

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            assert self.nvars == other.nvars, (self.nvars, other.nvars)
            return MultiPoly._raw(self.nvars, _sp.mul_terms(self.terms, other.terms))
        return MultiPoly._raw(self.nvars, _sp.scale_terms(self.terms, rat(other)))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0, n
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                "x%d" % (i + 1) if k == 1 else "x%d^%d" % (i + 1, k)
                for i, k in enumerate(e)
                if k
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append("%s*%s" % (c, mono))
        s = " + ".join(bits)
        return s.replace("+ -", "- ")


def substitute(p, forms, out_nvars):
    """Substitute a linear form for every variable of p.

    forms is a sequence of length p.nvars; forms[i] is the coefficient
    tuple (length out_nvars) of the linear form replacing variable i.
    Returns the expanded polynomial in out_nvars variables.  This one
    function realizes every variable change in the package (swap, push,
    collision maps, prefix-sum evaluation, and so on)."""
    assert isinstance(p, MultiPoly), p
    if len(forms) != p.nvars:
        raise MalformedSubstitution(
            "expected %d forms, got %d" % (p.nvars, len(forms))
        )
    base = []
    for f in forms:
        f = tuple(f)
        if len(f) != out_nvars:
            raise MalformedSubstitution(
                "form %r does not have %d coefficients" % (f, out_nvars)
            )
        d = {}
        for j, c in enumerate(f):
            c = rat(c)
            if c:
                e = [0] * out_nvars
                e[j] = 1
                d[tuple(e)] = c
        base.append(d)

    one = {(0,) * out_nvars: Fraction(1)}
    # powers of each substituted form, built on demand and reused across terms
    pow_cache = [[one] for _ in range(p.nvars)]
    out = {}
    for e, c in p.terms.items():
        term = {(0,) * out_nvars: c}
        for i, ei in enumerate(e):
            if not ei:
                continue
            cache = pow_cache[i]
            while len(cache) <= ei:
                cache.append(_sp.mul_terms(cache[-1], base[i]))
            term = _sp.mul_terms(term, cache[ei])
            if not term:
                break
        if term:
            out = _sp.add_terms(out, term)
    return MultiPoly._raw(out_nvars, out)


def permute_vars(p, perm):
    """Rename variables: new variable perm[i] receives old variable i.

    perm is a permutation of range(p.nvars).  Cheaper than substitute for
    the operators that only shuffle arguments (pus, mantar, rotations)."""
    assert sorted(perm) == list(range(p.nvars)), perm
    out = {}
    for e, c in p.terms.items():
        ne = [0] * p.nvars
        for i, k in enumerate(e):
            ne[perm[i]] = k
        out[tuple(ne)] = c
    return MultiPoly._raw(p.nvars, out)


def embed_vars(p, positions, out_nvars):
    """View p as a polynomial in out_nvars variables, sending old variable i
    to new variable positions[i].  Positions must be distinct."""
    assert len(positions) == p.nvars, (positions, p.nvars)
    assert len(set(positions)) == p.nvars, positions
    out = {}
    for e, c in p.terms.items():
        ne = [0] * out_nvars
        for i, k in enumerate(e):
            ne[positions[i]] = k
        out[tuple(ne)] = c
    return MultiPoly._raw(out_nvars, out)


def exact_div(p, q):
    """Exact polynomial division: the r with r*q = p, else NotDivisible.

    Monomial-ordered (lex) long division with a zero-remainder requirement.
    A divisibility failure is a meaningful signal here, typically that an
    input mould violates a vanishing condition, so the remainder at the
    point of failure rides along in the exception."""
    assert isinstance(p, MultiPoly) and isinstance(q, MultiPoly), (p, q)
    assert p.nvars == q.nvars, (p.nvars, q.nvars)
    if q.is_zero():
        raise ZeroDivisionError("exact_div by zero polynomial")
    if p.is_zero():
        return MultiPoly.zero(p.nvars)
    lt_q = max(q.terms)
    c_q = q.terms[lt_q]
    rem = dict(p.terms)
    quot = {}
    while rem:
        lt_r = max(rem)
        e = tuple(a - b for a, b in zip(lt_r, lt_q))
        if any(k < 0 for k in e):
            raise NotDivisible(
                "leading monomial %r not divisible by %r" % (lt_r, lt_q)
            )
        c = rem[lt_r] / c_q
        quot[e] = c
        piece = {
            tuple(a + b for a, b in zip(e, eq)): c * cq
            for eq, cq in q.terms.items()
        }
        rem = _sp.sub_terms(rem, piece)
    return MultiPoly._raw(p.nvars, quot)


def _canonical_linear_factor(coeffs):
    """Scale a rational coefficient tuple to primitive integers with the
    first nonzero entry positive.  Returns (key, scalar) with
    key = coeffs / scalar."""
    coeffs = [rat(c) for c in coeffs]
    assert any(coeffs), "zero linear factor"
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    g = 0
    for k in ints:
        g = gcd(g, abs(k))
    ints = [k // g for k in ints]
    lead = next(k for k in ints if k)
    if lead < 0:
        ints = [-k for k in ints]
    key = tuple(ints)
    # scalar such that original = scalar * key
    for orig, k in zip(coeffs, key):
        if k:
            return key, orig / k
    raise AssertionError(coeffs)


def _factor_poly(key, nvars):
    d = {}
    for j, c in enumerate(key):
        if c:
            e = [0] * nvars
            e[j] = 1
            d[tuple(e)] = Fraction(c)
    return MultiPoly._raw(nvars, d)


class RatFun:
    """Rational function num / prod(factors), factors being canonical
    primitive linear forms with multiplicities.

    Only linear denominators ever arise here (the contraction coefficients
    of the quasi-shuffle), so the denominator is stored factored and
    reduction is greedy exact division of the numerator by each factor.
    Linear forms are prime in Q[x], which makes this form canonical."""

    __slots__ = ("nvars", "num", "factors")

    def __init__(self, num, factors=None):
        assert isinstance(num, MultiPoly), num
        self.nvars = num.nvars
        fac = dict(factors) if factors else {}
        for k, m in list(fac.items()):
            assert m >= 0, (k, m)
            if m == 0:
                del fac[k]
        if num.is_zero():
            fac = {}
        else:
            for k in list(fac):
                fp = _factor_poly(k, num.nvars)
                while fac[k] > 0:
                    try:
                        num = exact_div(num, fp)
                    except NotDivisible:
                        break
                    fac[k] -= 1
                if fac[k] == 0:
                    del fac[k]
        self.num = num
        self.factors = fac

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    @classmethod
    def reciprocal_linear(cls, coeffs, nvars):
        """1 / (linear form given by coeffs)."""
        key, scalar = _canonical_linear_factor(coeffs)
        num = MultiPoly.const(nvars, Fraction(1) / scalar)
        return cls(num, {key: 1})

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return not self.factors

    def as_poly(self):
        if self.factors:
            raise PoleError("surviving denominator factors %r" % (self.factors,))
        return self.num

    def denominator_poly(self):
        d = MultiPoly.const(self.nvars, 1)
        for k, m in sorted(self.factors.items()):
            fp = _factor_poly(k, self.nvars)
            for _ in range(m):
                d = d * fp
        return d

    def __add__(self, other):
        if isinstance(other, MultiPoly):
            other = RatFun(other)
        assert isinstance(other, RatFun), other
        assert self.nvars == other.nvars
        keys = set(self.factors) | set(other.factors)
        num_a, num_b = self.num, other.num
        fac = {}
        for k in keys:
            ma = self.factors.get(k, 0)
            mb = other.factors.get(k, 0)
            m = max(ma, mb)
            fac[k] = m
            fp = _factor_poly(k, self.nvars)
            for _ in range(m - ma):
                num_a = num_a * fp
            for _ in range(m - mb):
                num_b = num_b * fp
        return RatFun(num_a + num_b, fac)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatFun._make(-self.num, dict(self.factors))

    @classmethod
    def _make(cls, num, factors):
        # already reduced by construction
        r = object.__new__(cls)
        r.nvars = num.nvars
        r.num = num
        r.factors = factors if not num.is_zero() else {}
        return r

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            other = RatFun(other)
        if isinstance(other, RatFun):
            assert self.nvars == other.nvars
            fac = dict(self.factors)
            for k, m in other.factors.items():
                fac[k] = fac.get(k, 0) + m
            return RatFun(self.num * other.num, fac)
        return RatFun(self.num * rat(other), dict(self.factors))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.num == other.num
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.num, frozenset(self.factors.items())))

    def __repr__(self):
        if not self.factors:
            return repr(self.num)
        return "(%r) / (%r)" % (self.num, self.denominator_poly())


class RatMatrix:
    """Dense matrix of Fractions.  Rows are plain lists."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        assert len(entries) == rows, (rows, len(entries))
        self.rows = rows
        self.cols = cols
        self.entries = [[rat(x) for x in row] for row in entries]
        for row in self.entries:
            assert len(row) == cols, (cols, len(row))

    @classmethod
    def from_rows(cls, rows_list, cols):
        return cls(len(rows_list), cols, rows_list)


def _rref(entries, cols):
    """Reduced row echelon form in place; returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(entries)
    for c in range(cols):
        piv = None
        for i in range(r, nrows):
            if entries[i][c]:
                piv = i
                break
        if piv is None:
            continue
        entries[r], entries[piv] = entries[piv], entries[r]
        inv = 1 / entries[r][c]
        entries[r] = [x * inv for x in entries[r]]
        for i in range(nrows):
            if i != r and entries[i][c]:
                f = entries[i][c]
                row_i = entries[i]
                row_r = entries[r]
                entries[i] = [a - f * b for a, b in zip(row_i, row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _primitive(vec):
    """Scale a rational vector to primitive integers, first nonzero positive."""
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for k in ints:
        g = gcd(g, abs(k))
    if g == 0:
        return tuple(Fraction(0) for _ in vec)
    ints = [k // g for k in ints]
    lead = next((k for k in ints if k), 0)
    if lead < 0:
        ints = [-k for k in ints]
    return tuple(Fraction(k) for k in ints)


def nullspace(mat):
    """Exact basis of the kernel of mat, deterministic.

    Basis vectors are produced one per free column (in increasing column
    order), scaled to primitive integer form.  rank + len(basis) = cols."""
    assert isinstance(mat, RatMatrix), mat
    entries = [list(row) for row in mat.entries]
    pivots = _rref(entries, mat.cols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(mat.cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * mat.cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -entries[r][fc]
        basis.append(_primitive(vec))
    return basis


def solve_linear(mat, rhs):
    """One exact solution of mat * x = rhs (free variables set to 0), or
    NoSolution.  rhs is a sequence of Fractions of length mat.rows."""
    assert isinstance(mat, RatMatrix), mat
    assert len(rhs) == mat.rows, (len(rhs), mat.rows)
    aug = [list(row) + [rat(b)] for row, b in zip(mat.entries, rhs)]
    pivots = _rref(aug, mat.cols + 1)
    if mat.cols in pivots:
        return NoSolution("inconsistent linear system")
    x = [Fraction(0)] * mat.cols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][mat.cols]
    return x


def rank(mat):
    entries = [list(row) for row in mat.entries]
    return len(_rref(entries, mat.cols))
