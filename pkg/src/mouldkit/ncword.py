# Noncommutative words and polynomials over a declared alphabet, free Lie
# machinery (Dynkin-Specht-Wever test, Lyndon bases), the backwards-writing
# operator, first/last letter decompositions, cyclic words, and the shuffle /
# quasi-shuffle coefficient families on variable words.
#
# Words are plain tuples of alphabet symbols.  An NCPoly is a dict from word
# to nonzero Fraction plus the alphabet it lives over; the alphabet order is
# significant (it fixes Lyndon order and cyclic canonical forms).
#
# Two alphabets appear in practice: ("x", "y") for the Lie side, and
# ("y1", "y2", ..., "yk") for the stuffle side, where the letter "yn" carries
# weight n.  Weight of any other symbol is 1, so on ("x", "y") weight equals
# word length.

import itertools
from fractions import Fraction

from . import _speed as _sp
from .kernel import MultiPoly, RatFun, rat


class AlphabetError(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


class HasConstantTerm(ValueError):
    pass


def letter_weight(sym):
    """Weight of a single alphabet symbol: trailing digits if present
    ("y3" -> 3), otherwise 1 ("x", "y" -> 1)."""
    s = str(sym)
    i = len(s)
    while i > 0 and s[i - 1].isdigit():
        i -= 1
    if i == len(s):
        return 1
    return int(s[i:])


def word_weight(word):
    return sum(letter_weight(a) for a in word)


class NCPoly:
    """Noncommutative polynomial: alphabet tuple + {word tuple: Fraction}."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        alphabet = tuple(alphabet)
        assert len(set(alphabet)) == len(alphabet), alphabet
        ok = set(alphabet)
        out = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            for a in w:
                if a not in ok:
                    raise AlphabetError("letter %r not in alphabet %r" % (a, alphabet))
            c = rat(c)
            if c:
                out[w] = out.get(w, Fraction(0)) + c
                if not out[w]:
                    del out[w]
        self.alphabet = alphabet
        self.terms = out

    @classmethod
    def _raw(cls, alphabet, terms):
        # trusted constructor: terms already canonical
        self = object.__new__(cls)
        self.alphabet = alphabet
        self.terms = terms
        return self

    @classmethod
    def zero(cls, alphabet):
        return cls._raw(tuple(alphabet), {})

    @classmethod
    def one(cls, alphabet):
        return cls._raw(tuple(alphabet), {(): Fraction(1)})

    @classmethod
    def from_word(cls, alphabet, word, coeff=1):
        return cls(alphabet, {tuple(word): coeff})

    @classmethod
    def letter(cls, alphabet, sym):
        return cls(alphabet, {(sym,): 1})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        assert isinstance(other, NCPoly), other
        if self.alphabet != other.alphabet:
            raise AlphabetError("alphabet mismatch: %r vs %r" % (self.alphabet, other.alphabet))

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        return NCPoly._raw(self.alphabet, _sp.add_terms(self.terms, other.terms))

    def __sub__(self, other):
        self._check(other)
        return NCPoly._raw(self.alphabet, _sp.sub_terms(self.terms, other.terms))

    def __neg__(self):
        return NCPoly._raw(self.alphabet, _sp.scale_terms(self.terms, Fraction(-1)))

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return NCPoly._raw(self.alphabet, _sp.concat_mul_terms(self.terms, other.terms))
        return NCPoly._raw(self.alphabet, _sp.scale_terms(self.terms, rat(other)))

    def __rmul__(self, other):
        # scalar * poly
        return NCPoly._raw(self.alphabet, _sp.scale_terms(self.terms, rat(other)))

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0, n
        out = NCPoly.one(self.alphabet)
        for _ in range(n):
            out = out * self
        return out

    def words(self):
        return self.terms.keys()

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        bits = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            c = self.terms[w]
            word = ".".join(str(a) for a in w) if w else "1"
            bits.append("%s*%s" % (c, word))
        return "NCPoly(%s)" % " + ".join(bits)


def coefficient(p, word):
    """c_W(p): the stored coefficient of the word (0 if absent)."""
    assert isinstance(p, NCPoly), p
    return p.terms.get(tuple(word), Fraction(0))


def homogeneous_weight(p):
    """Common weight of all words of p.  Zero polynomial -> None.
    Mixed weights -> NotHomogeneous."""
    assert isinstance(p, NCPoly), p
    ws = {word_weight(w) for w in p.terms}
    if not ws:
        return None
    if len(ws) > 1:
        raise NotHomogeneous("mixed weights %s" % sorted(ws))
    return ws.pop()


def lie_bracket(a, b):
    """[a, b] = ab - ba."""
    assert isinstance(a, NCPoly) and isinstance(b, NCPoly), (a, b)
    if a.alphabet != b.alphabet:
        raise AlphabetError("alphabet mismatch: %r vs %r" % (a.alphabet, b.alphabet))
    return a * b - b * a


def _left_bracketing(alphabet, word):
    # word a1..an -> [[...[a1,a2],...],an]
    q = NCPoly.letter(alphabet, word[0])
    for a in word[1:]:
        la = NCPoly.letter(alphabet, a)
        q = q * la - la * q
    return q


def is_lie(p):
    """Dynkin-Specht-Wever: for p homogeneous of word length n >= 1,
    p is a Lie element iff sum_W c_W [[..[a1,a2]..],an] equals n*p."""
    assert isinstance(p, NCPoly), p
    if p.is_zero():
        return True
    lengths = {len(w) for w in p.terms}
    if len(lengths) > 1:
        raise NotHomogeneous("mixed word lengths %s" % sorted(lengths))
    n = lengths.pop()
    if n == 0:
        raise NotHomogeneous("constant polynomial has weight 0")
    d = NCPoly.zero(p.alphabet)
    for w, c in p.terms.items():
        d = d + c * _left_bracketing(p.alphabet, w)
    return d == n * p


# ---------------------------------------------------------------------------
# Lyndon words and the standard bracketing basis of the free Lie algebra.

def lyndon_words(n, alphabet):
    """All Lyndon words of length exactly n over the alphabet order, in
    lexicographic order (Duval's generation)."""
    alphabet = tuple(alphabet)
    k = len(alphabet)
    assert n >= 1 and k >= 1, (n, k)
    out = []
    w = [0]
    while w:
        if len(w) == n:
            out.append(tuple(alphabet[i] for i in w))
        # extend periodically to length n, then increment
        ww = [w[i % len(w)] for i in range(n)]
        while ww and ww[-1] == k - 1:
            ww.pop()
        if not ww:
            break
        ww[-1] += 1
        w = ww
    return out


def _is_lyndon(word, index):
    n = len(word)
    if n == 0:
        return False
    key = tuple(index[a] for a in word)
    return all(key < key[i:] + key[:i] for i in range(1, n))


def lyndon_bracketing(word, alphabet):
    """Standard bracketing of a Lyndon word: split at the longest proper
    Lyndon suffix and bracket the two halves."""
    alphabet = tuple(alphabet)
    word = tuple(word)
    index = {a: i for i, a in enumerate(alphabet)}
    assert _is_lyndon(word, index), word
    if len(word) == 1:
        return NCPoly.letter(alphabet, word[0])
    for i in range(1, len(word)):
        if _is_lyndon(word[i:], index):
            left = lyndon_bracketing(word[:i], alphabet)
            right = lyndon_bracketing(word[i:], alphabet)
            return lie_bracket(left, right)
    raise AssertionError("no Lyndon factorization for %r" % (word,))


def lyndon_basis(w, alphabet):
    """Standard-bracketing images of the Lyndon words of length w; the list
    size is the Witt number."""
    return [lyndon_bracketing(word, alphabet) for word in lyndon_words(w, alphabet)]


def _mobius(n):
    if n == 1:
        return 1
    m, out = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def witt_dimension(w, k):
    """dim of the weight-w part of the free Lie algebra on k letters:
    (1/w) * sum_{d | w} mu(d) k^(w/d)."""
    assert w >= 1, w
    total = sum(_mobius(d) * k ** (w // d) for d in range(1, w + 1) if w % d == 0)
    q, r = divmod(total, w)
    assert r == 0, (w, k, total)
    return q


# ---------------------------------------------------------------------------
# anti, palindromes, decompositions, trace.

def anti(p):
    """Backwards-writing operator: reverse every word."""
    assert isinstance(p, NCPoly), p
    return NCPoly._raw(p.alphabet, {w[::-1]: c for w, c in p.terms.items()})


def scale_letter(p, sym, c):
    """Rescale every word by c to the power of its sym-letter count."""
    assert isinstance(p, NCPoly), p
    assert sym in p.alphabet, sym
    c = Fraction(c)
    out = {}
    for word, k in p.terms.items():
        k = k * c ** word.count(sym)
        if k:
            out[word] = k
    return NCPoly._raw(p.alphabet, out)


def is_anti_palindromic(p, w):
    """True iff p = (-1)^w * anti(p).  p must be homogeneous of weight w
    (zero passes for any w)."""
    assert isinstance(p, NCPoly), p
    if p.is_zero():
        return True
    pw = homogeneous_weight(p)
    if pw != w:
        raise NotHomogeneous("declared weight %s but polynomial has weight %s" % (w, pw))
    sign = Fraction(1) if w % 2 == 0 else Fraction(-1)
    return p == sign * anti(p)


def decompose_right(p):
    """Split by last letter: p = sum_a p_a * a, returned as a tuple of
    NCPoly aligned with the alphabet order.  On ("x","y"): (p_x, p_y)."""
    assert isinstance(p, NCPoly), p
    if () in p.terms:
        raise HasConstantTerm("constant term %s present" % p.terms[()])
    parts = {a: {} for a in p.alphabet}
    for w, c in p.terms.items():
        parts[w[-1]][w[:-1]] = c
    return tuple(NCPoly._raw(p.alphabet, parts[a]) for a in p.alphabet)


def decompose_left(p):
    """Split by first letter: p = sum_a a * p^a, tuple in alphabet order."""
    assert isinstance(p, NCPoly), p
    if () in p.terms:
        raise HasConstantTerm("constant term %s present" % p.terms[()])
    parts = {a: {} for a in p.alphabet}
    for w, c in p.terms.items():
        parts[w[0]][w[1:]] = c
    return tuple(NCPoly._raw(p.alphabet, parts[a]) for a in p.alphabet)


def _min_rotation(word, index):
    if not word:
        return word
    key = tuple(index[a] for a in word)
    best = 0
    for i in range(1, len(word)):
        if key[i:] + key[:i] < key[best:] + key[:best]:
            best = i
    return word[best:] + word[:best]


class CyclicCombination:
    """Linear combination of cyclic words, keyed by the lexicographically
    minimal rotation under the alphabet order."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        alphabet = tuple(alphabet)
        index = {a: i for i, a in enumerate(alphabet)}
        out = {}
        for w, c in (terms or {}).items():
            w = _min_rotation(tuple(w), index)
            c = rat(c)
            if c:
                out[w] = out.get(w, Fraction(0)) + c
                if not out[w]:
                    del out[w]
        self.alphabet = alphabet
        self.terms = out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, CyclicCombination):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __add__(self, other):
        assert isinstance(other, CyclicCombination), other
        assert self.alphabet == other.alphabet, (self.alphabet, other.alphabet)
        out = CyclicCombination(self.alphabet)
        out.terms = _sp.add_terms(self.terms, other.terms)
        return out

    def __sub__(self, other):
        assert isinstance(other, CyclicCombination), other
        assert self.alphabet == other.alphabet, (self.alphabet, other.alphabet)
        out = CyclicCombination(self.alphabet)
        out.terms = _sp.sub_terms(self.terms, other.terms)
        return out

    def __rmul__(self, c):
        out = CyclicCombination(self.alphabet)
        out.terms = _sp.scale_terms(self.terms, rat(c))
        return out

    def __repr__(self):
        if not self.terms:
            return "CyclicCombination(0)"
        bits = ["%s*cyc(%s)" % (c, "".join(str(a) for a in w))
                for w, c in sorted(self.terms.items())]
        return "CyclicCombination(%s)" % " + ".join(bits)


def trace(p):
    """Natural projection onto cyclic words (rotations identified)."""
    assert isinstance(p, NCPoly), p
    return CyclicCombination(p.alphabet, dict(p.terms))


# ---------------------------------------------------------------------------
# Variable words: words whose letters are formal integer combinations of the
# ambient commutative variables x_1..x_n.  A letter is stored as the tuple of
# its integer coefficients; no letter is identified with a scalar multiple of
# another one.

class VarWord:
    __slots__ = ("arity", "letters")

    def __init__(self, arity, letters):
        letters = tuple(tuple(int(c) for c in l) for l in letters)
        for l in letters:
            assert len(l) == arity, (arity, l)
        self.arity = arity
        self.letters = letters

    @classmethod
    def of_vars(cls, arity, indices):
        """Word whose j-th letter is the plain variable x_{indices[j]}
        (1-based indices)."""
        letters = []
        for i in indices:
            assert 1 <= i <= arity, (i, arity)
            letters.append(tuple(1 if k == i - 1 else 0 for k in range(arity)))
        return cls(arity, letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, VarWord):
            return NotImplemented
        return self.arity == other.arity and self.letters == other.letters

    def __hash__(self):
        return hash((self.arity, self.letters))

    def __repr__(self):
        def fmt(l):
            bits = []
            for i, c in enumerate(l):
                if c == 0:
                    continue
                if c == 1:
                    bits.append("x%d" % (i + 1))
                elif c == -1:
                    bits.append("-x%d" % (i + 1))
                else:
                    bits.append("%d*x%d" % (c, i + 1))
            return "+".join(bits).replace("+-", "-") if bits else "0"
        return "(" + ",".join(fmt(l) for l in self.letters) + ")"


def shuffle(a, b):
    """Plain shuffle of two variable words: dict VarWord -> Fraction.
    Sum of coefficients is binomial(l(a)+l(b), l(a))."""
    assert isinstance(a, VarWord) and isinstance(b, VarWord), (a, b)
    assert a.arity == b.arity, (a.arity, b.arity)
    p, q = len(a), len(b)
    out = {}
    for positions in itertools.combinations(range(p + q), p):
        pos = set(positions)
        ia = ib = 0
        letters = []
        for slot in range(p + q):
            if slot in pos:
                letters.append(a.letters[ia])
                ia += 1
            else:
                letters.append(b.letters[ib])
                ib += 1
        w = VarWord(a.arity, letters)
        out[w] = out.get(w, Fraction(0)) + 1
    return out


def _ratfun_const(n, c):
    return RatFun.from_poly(MultiPoly.const(n, c))


def quasi_shuffle_star(a, b):
    """Quasi-shuffle with contractions: dict VarWord -> RatFun, the RatFun
    living in the y-variables that mirror the x-variables.

      u om *sh* v et = u(om *sh* v et) + v(u om *sh* et)
                       + f(u-v) { u(om *sh* et) - v(om *sh* et) }

    with f(0) := 0 and f(sum n_j x_ij) = 1/(sum n_j y_ij).  Letters never
    merge; only the coefficient field grows."""
    assert isinstance(a, VarWord) and isinstance(b, VarWord), (a, b)
    assert a.arity == b.arity, (a.arity, b.arity)
    n = a.arity
    one = _ratfun_const(n, 1)
    memo = {}

    def prepend(letter, table):
        return {VarWord(n, (letter,) + w.letters): c for w, c in table.items()}

    def add_into(acc, table, factor):
        for w, c in table.items():
            cur = acc.get(w)
            val = factor * c
            acc[w] = val if cur is None else cur + val
        return acc

    def rec(la, lb):
        if not la:
            return {VarWord(n, lb): one}
        if not lb:
            return {VarWord(n, la): one}
        key = (la, lb)
        hit = memo.get(key)
        if hit is not None:
            return hit
        u, v = la[0], lb[0]
        out = {}
        add_into(out, prepend(u, rec(la[1:], lb)), one)
        add_into(out, prepend(v, rec(la, lb[1:])), one)
        diff = tuple(cu - cv for cu, cv in zip(u, v))
        if any(diff):
            f = RatFun.reciprocal_linear(diff, n)
            inner = rec(la[1:], lb[1:])
            add_into(out, prepend(u, inner), f)
            add_into(out, prepend(v, inner), -1 * f)
        out = {w: c for w, c in out.items() if not c.is_zero()}
        memo[key] = out
        return out

    return rec(a.letters, b.letters)
