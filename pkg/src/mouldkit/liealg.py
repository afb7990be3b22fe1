# Lie-algebra membership machinery: the tangential/special derivation side
# (KV1 linear solve, KV2 trace condition), the double shuffle side (the
# y-alphabet projection, star regularization, the coproduct on A_Y and its
# primitivity test), and the graded basis solvers over Lyndon coordinates.

from fractions import Fraction

from .kernel import (
    NoSolution,
    RatMatrix,
    nullspace,
    rat,
    solve_linear,
)
from .ncword import (
    NCPoly,
    NotHomogeneous,
    coefficient,
    decompose_right,
    homogeneous_weight,
    is_lie,
    letter_weight,
    lie_bracket,
    lyndon_basis,
    lyndon_words,
    scale_letter,
    trace,
)

XY = ("x", "y")

# graded solves beyond this weight are refused rather than attempted; the
# bound is generous for desk scale (the acceptance runs stop at weight 8)
WEIGHT_BOUND = 12


class WeightTooSmall(ValueError):
    pass


class WeightBoundError(ValueError):
    pass


class TangentialData:
    """A derivation of the free Lie algebra given by its values on the two
    generators.  Tangentiality and speciality are predicates on this data,
    not invariants of the container."""

    __slots__ = ("value_on_x", "value_on_y")

    def __init__(self, value_on_x, value_on_y):
        assert isinstance(value_on_x, NCPoly), value_on_x
        assert isinstance(value_on_y, NCPoly), value_on_y
        self.value_on_x = value_on_x
        self.value_on_y = value_on_y

    def __eq__(self, other):
        if not isinstance(other, TangentialData):
            return NotImplemented
        return (
            self.value_on_x == other.value_on_x
            and self.value_on_y == other.value_on_y
        )

    __hash__ = None

    def __repr__(self):
        return "TangentialData(x -> %r, y -> %r)" % (
            self.value_on_x,
            self.value_on_y,
        )


class SubspaceBasis:
    """Exact basis of a graded subspace of L_w in Lyndon coordinates."""

    __slots__ = ("weight", "ambient", "vectors")

    def __init__(self, weight, ambient, vectors):
        self.weight = weight
        self.ambient = tuple(tuple(wd) for wd in ambient)
        self.vectors = [tuple(rat(c) for c in v) for v in vectors]
        for v in self.vectors:
            assert len(v) == len(self.ambient), (len(v), len(self.ambient))

    @property
    def dimension(self):
        return len(self.vectors)

    def elements(self):
        """Materialize the basis vectors as Lie polynomials."""
        brackets = lyndon_basis(self.weight, XY)
        out = []
        for v in self.vectors:
            p = NCPoly.zero(XY)
            for c, b in zip(v, brackets):
                if c:
                    p = p + c * b
            out.append(p)
        return out

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.ambient == other.ambient
            and self.vectors == other.vectors
        )

    __hash__ = None

    def __repr__(self):
        return "SubspaceBasis(weight=%d, dim=%d)" % (self.weight, self.dimension)


# ---------------------------------------------------------------------------
# word-coordinate linear solves

def _word_matrix(columns, extra_words=()):
    """Rows indexed by the union of words, deterministic order."""
    support = set(extra_words)
    for p in columns:
        support.update(p.terms)
    words = sorted(support)
    index = {wd: i for i, wd in enumerate(words)}
    rows = [[Fraction(0)] * len(columns) for _ in words]
    for j, p in enumerate(columns):
        for wd, c in p.terms.items():
            rows[index[wd]][j] = c
    return words, rows


def _solve_in_span(columns, target):
    """Coefficients c with sum c_j columns_j = target, or NoSolution."""
    words, rows = _word_matrix(columns, extra_words=target.terms)
    rhs = [target.terms.get(wd, Fraction(0)) for wd in words]
    return solve_linear(RatMatrix.from_rows(rows, len(columns)), rhs)


def solve_G(F, w):
    """The unique Lie G of weight w with [x,G] + [y,F] = 0, or NoSolution.

    ad(x) is injective on L_w for w > 1, so the exact linear solve over the
    Lyndon coordinates of L_w is canonical; for w <= 1 uniqueness genuinely
    fails and the call is refused."""
    assert isinstance(F, NCPoly), F
    if w <= 1:
        raise WeightTooSmall("KV1 solve needs weight > 1, got %r" % (w,))
    if not F.is_zero():
        assert homogeneous_weight(F) == w, (homogeneous_weight(F), w)
    x = NCPoly.letter(XY, "x")
    y = NCPoly.letter(XY, "y")
    target = -lie_bracket(y, F)
    basis = lyndon_basis(w, XY)
    columns = [lie_bracket(x, b) for b in basis]
    coeffs = _solve_in_span(columns, target)
    if isinstance(coeffs, NoSolution):
        return coeffs
    G = NCPoly.zero(XY)
    for c, b in zip(coeffs, basis):
        if c:
            G = G + c * b
    return G


def _weight_parts(p):
    """Split into homogeneous components, mapping weight -> NCPoly."""
    parts = {}
    for wd, c in p.terms.items():
        k = sum(letter_weight(s) for s in wd)
        parts.setdefault(k, {})[wd] = c
    return {k: NCPoly._raw(p.alphabet, t) for k, t in sorted(parts.items())}


def is_sder(d):
    """Tangential (each value is a bracket of the matching generator with
    some Lie element) and killing x + y."""
    assert isinstance(d, TangentialData), d
    if not (d.value_on_x + d.value_on_y).is_zero():
        return False
    for sym, val in (("x", d.value_on_x), ("y", d.value_on_y)):
        if val.is_zero():
            continue
        gen = NCPoly.letter(XY, sym)
        for k, part in _weight_parts(val).items():
            # [gen, L_{k-1}] is the only source of weight-k tangential values
            if k < 2:
                return False
            columns = [lie_bracket(gen, b) for b in lyndon_basis(k - 1, XY)]
            if isinstance(_solve_in_span(columns, part), NoSolution):
                return False
    return True


def kv2_check(F, G, w):
    """Solve tr(G_x x + F_y y) = alpha * tr((x+y)^w - x^w - y^w) exactly.

    Both sides live in the cyclic-word quotient; the right-hand trace is
    nonzero for every w > 1, which pins alpha uniquely."""
    assert isinstance(F, NCPoly) and isinstance(G, NCPoly), (F, G)
    assert w > 1, w
    x = NCPoly.letter(XY, "x")
    y = NCPoly.letter(XY, "y")
    G_x = decompose_right(G)[0]
    F_y = decompose_right(F)[1]
    lhs = trace(G_x * x + F_y * y)
    rhs = trace((x + y) ** w - x ** w - y ** w)
    if rhs.is_zero():
        if lhs.is_zero():
            return Fraction(0)
        return NoSolution("zero target trace with nonzero left side")
    key = min(rhs.terms)
    alpha = lhs.terms.get(key, Fraction(0)) / rhs.terms[key]
    if lhs == alpha * rhs:
        return alpha
    return NoSolution("traces are not proportional")


def is_krv(F, w):
    """Lie, KV1 solvable, and KV2 proportional."""
    assert isinstance(F, NCPoly), F
    if F.is_zero():
        return True
    try:
        if homogeneous_weight(F) != w:
            return False
    except NotHomogeneous:
        return False
    if not is_lie(F):
        return False
    G = solve_G(F, w)
    if isinstance(G, NoSolution):
        return False
    return not isinstance(kv2_check(F, G, w), NoSolution)


# ---------------------------------------------------------------------------
# the y-alphabet side

def _y_alphabet(n):
    return tuple("y%d" % i for i in range(1, n + 1))


def _max_word_weight(p):
    # on the x,y alphabet every letter has weight 1
    if p.is_zero():
        return 1
    return max(len(wd) for wd in p.terms) or 1


def pi_Y(p):
    """Kill words ending in x; send x^{a_1} y ... x^{a_m} y to
    (-1)^m y_{a_1+1} ... y_{a_m+1}, order preserved."""
    assert isinstance(p, NCPoly), p
    assert set(p.alphabet) <= {"x", "y"}, p.alphabet
    n = _max_word_weight(p)
    alphabet = _y_alphabet(n)
    out = NCPoly.zero(alphabet)
    for wd, c in p.terms.items():
        if wd and wd[-1] == "x":
            continue
        letters = []
        run = 0
        for s in wd:
            if s == "x":
                run += 1
            else:
                letters.append("y%d" % (run + 1))
                run = 0
        sign = -1 if len(letters) % 2 else 1
        out = out + NCPoly.from_word(alphabet, tuple(letters), sign * c)
    return out


def star_regularize(p):
    """p_* = p_corr + pi_Y(p) with
    p_corr = sum_n (-1)^n / n * c_{x^{n-1} y}(p) * y_1^n."""
    assert isinstance(p, NCPoly), p
    n = _max_word_weight(p)
    alphabet = _y_alphabet(n)
    out = pi_Y(p)
    for k in range(1, n + 1):
        c = coefficient(p, ("x",) * (k - 1) + ("y",))
        if c:
            sign = -1 if k % 2 else 1
            out = out + NCPoly.from_word(
                alphabet, ("y1",) * k, Fraction(sign, k) * c
            )
    return out


def delta_star(p):
    """The coproduct with Delta(y_n) = sum_i y_i (x) y_{n-i}, y_0 = 1,
    extended multiplicatively to words and linearly; returned as a mapping
    (left word, right word) -> coefficient."""
    assert isinstance(p, NCPoly), p
    out = {}
    for wd, c in p.terms.items():
        pairs = {((), ()): Fraction(1)}
        for s in wd:
            assert s[0] == "y" and s[1:].isdigit(), s
            n = int(s[1:])
            grown = {}
            for (left, right), cc in pairs.items():
                for i in range(n + 1):
                    nl = left + ("y%d" % i,) if i else left
                    nr = right + ("y%d" % (n - i),) if n - i else right
                    key = (nl, nr)
                    grown[key] = grown.get(key, Fraction(0)) + cc
            pairs = grown
        for key, cc in pairs.items():
            v = out.get(key, Fraction(0)) + c * cc
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def primitivity_defect(p):
    """delta_star(p) - p (x) 1 - 1 (x) p, as the same kind of mapping."""
    out = delta_star(p)
    for wd, c in p.terms.items():
        for key in ((wd, ()), ((), wd)):
            v = out.get(key, Fraction(0)) - c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def is_dmr(f, w):
    """Lie, c_{xy} = 0, and the star regularization of the y-flipped
    element is primitive for delta_star.

    The flip y -> -y before regularizing makes the word-level conditions
    match the mould-side characterizations (the senary relation on the associated
    moulds and the alternility of their swaps); without it the two sides
    of the dictionary disagree by a sign on every odd depth."""
    assert isinstance(f, NCPoly), f
    assert w > 1, w
    if f.is_zero():
        return True
    try:
        if homogeneous_weight(f) != w:
            return False
    except NotHomogeneous:
        return False
    if not is_lie(f):
        return False
    if coefficient(f, ("x", "y")) != 0:
        return False
    xi = star_regularize(scale_letter(f, "y", -1))
    return not primitivity_defect(xi)


# ---------------------------------------------------------------------------
# graded bases

def _check_weight(w, bound):
    if not 2 <= w:
        raise WeightBoundError("graded solve needs weight >= 2, got %r" % (w,))
    if w > bound:
        raise WeightBoundError(
            "weight %d exceeds the configured bound %d" % (w, bound)
        )


def _primitive_rows(vectors):
    """Rescale each vector to primitive integer form, first nonzero > 0."""
    out = []
    for v in vectors:
        denom = 1
        for c in v:
            denom = denom * c.denominator // _gcd(denom, c.denominator)
        ints = [int(c * denom) for c in v]
        g = 0
        for k in ints:
            g = _gcd(g, abs(k))
        if g:
            ints = [k // g for k in ints]
        lead = next((k for k in ints if k), 0)
        if lead < 0:
            ints = [-k for k in ints]
        out.append(tuple(Fraction(k) for k in ints))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def dmr_basis(w, bound=WEIGHT_BOUND):
    """Basis of the weight-w double shuffle component, by exact nullspace
    of {c_xy = 0, primitivity of the flipped star regularization} over the
    Lyndon coordinates of L_w."""
    _check_weight(w, bound)
    words = lyndon_words(w, XY)
    brackets = lyndon_basis(w, XY)
    n = len(brackets)
    rows = []
    xy_row = [coefficient(b, ("x", "y")) for b in brackets]
    rows.append(xy_row)
    defects = [
        primitivity_defect(star_regularize(scale_letter(b, "y", -1)))
        for b in brackets
    ]
    support = set()
    for d in defects:
        support.update(d)
    for key in sorted(support):
        rows.append([d.get(key, Fraction(0)) for d in defects])
    vectors = nullspace(RatMatrix.from_rows(rows, n))
    return SubspaceBasis(w, words, vectors)


def krv_basis(w, bound=WEIGHT_BOUND):
    """Basis of the weight-w Kashiwara-Vergne component.

    KV1 and KV2 are jointly linear in (F, G, alpha), so the graded piece is
    one nullspace over the doubled Lyndon coordinates plus the alpha column,
    projected back to F (the projection is injective: F = 0 forces G = 0 by
    ad(x) injectivity and then alpha = 0 against the nonzero target trace)."""
    _check_weight(w, bound)
    words = lyndon_words(w, XY)
    brackets = lyndon_basis(w, XY)
    n = len(brackets)
    x = NCPoly.letter(XY, "x")
    y = NCPoly.letter(XY, "y")
    ncols = 2 * n + 1

    rows = []
    # KV1: [y, F] + [x, G] = 0, one row per word of the union support
    f_cols = [lie_bracket(y, b) for b in brackets]
    g_cols = [lie_bracket(x, b) for b in brackets]
    support = set()
    for p in f_cols + g_cols:
        support.update(p.terms)
    for wd in sorted(support):
        row = [Fraction(0)] * ncols
        for j, p in enumerate(f_cols):
            c = p.terms.get(wd)
            if c:
                row[j] = c
        for j, p in enumerate(g_cols):
            c = p.terms.get(wd)
            if c:
                row[n + j] = c
        rows.append(row)

    # KV2: tr(G_x x + F_y y) - alpha tr((x+y)^w - x^w - y^w) = 0
    f_tr = [trace(decompose_right(b)[1] * y) for b in brackets]
    g_tr = [trace(decompose_right(b)[0] * x) for b in brackets]
    target = trace((x + y) ** w - x ** w - y ** w)
    support = set(target.terms)
    for t in f_tr + g_tr:
        support.update(t.terms)
    for key in sorted(support):
        row = [Fraction(0)] * ncols
        for j, t in enumerate(f_tr):
            c = t.terms.get(key)
            if c:
                row[j] = c
        for j, t in enumerate(g_tr):
            c = t.terms.get(key)
            if c:
                row[n + j] = c
        row[2 * n] = -target.terms.get(key, Fraction(0))
        rows.append(row)

    joint = nullspace(RatMatrix.from_rows(rows, ncols))
    vectors = _primitive_rows([v[:n] for v in joint])
    return SubspaceBasis(w, words, vectors)


def fil2_dimension(elements):
    """Dimension of the subspace of span(elements) whose depth-1 part
    (words with exactly one y) vanishes; elements must be independent."""
    if not elements:
        return 0
    support = set()
    for p in elements:
        for wd in p.terms:
            if wd.count("y") == 1:
                support.add(wd)
    if not support:
        return len(elements)
    rows = [
        [p.terms.get(wd, Fraction(0)) for p in elements] for wd in sorted(support)
    ]
    return len(nullspace(RatMatrix.from_rows(rows, len(elements))))
