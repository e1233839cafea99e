"""Codes over prime fields F_p: construction, duality, weight statistics.

Words are tuples of digits in 0..p-1.  A Code remembers whether it is
linear (and then its dimension); all heavier machinery downstream requires
linearity only where the mathematics does.
"""

from __future__ import annotations

import itertools
from collections import Counter

from .cyclotomic import check_prime

# ---------------------------------------------------------------------------
# Fano plane data.  Two standard labelings of the seven points are in play:
# lines of the first give the addition table of the c-vectors, lines of the
# second give the addition table of the b-vectors.  The second labeling is
# binary: point [a:b:c] carries the number 4a+2b+c.
# ---------------------------------------------------------------------------

FANO_LINES_FIRST = (
    frozenset({3, 4, 6}), frozenset({1, 5, 6}), frozenset({2, 6, 7}),
    frozenset({2, 3, 5}), frozenset({1, 3, 7}), frozenset({4, 5, 7}),
    frozenset({1, 2, 4}),
)

FANO_LINES_SECOND = (
    frozenset({2, 5, 7}), frozenset({3, 4, 7}), frozenset({1, 4, 5}),
    frozenset({1, 6, 7}), frozenset({2, 4, 6}), frozenset({1, 2, 3}),
    frozenset({3, 5, 6}),
)

# Complement-of-line vectors, indexed 1..7 (index 0 unused).  b-vectors are
# complements of first-labeling lines, c-vectors of second-labeling lines,
# with c_i + b_i = complement of {i}.
FANO_B_VECTORS = (
    None,
    frozenset({1, 2, 5, 7}), frozenset({2, 3, 4, 7}), frozenset({1, 3, 4, 5}),
    frozenset({1, 4, 6, 7}), frozenset({2, 4, 5, 6}), frozenset({1, 2, 3, 6}),
    frozenset({3, 5, 6, 7}),
)

FANO_C_VECTORS = (
    None,
    frozenset({1, 3, 4, 6}), frozenset({1, 2, 5, 6}), frozenset({2, 3, 6, 7}),
    frozenset({2, 3, 4, 5}), frozenset({1, 3, 5, 7}), frozenset({4, 5, 6, 7}),
    frozenset({1, 2, 4, 7}),
)

_GOLAY_B = (
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, 2, 2, 1),
    (1, 1, 0, 1, 2, 2),
    (1, 2, 1, 0, 1, 2),
    (1, 2, 2, 1, 0, 1),
    (1, 1, 2, 2, 1, 0),
)


class Code:
    """A set of words in F_p^n, with linear structure when present."""

    def __init__(self, p, n, words, generators=None, dimension=None):
        check_prime(p)
        self.p = p
        self.n = n
        self.words = tuple(sorted(words))
        self.word_set = frozenset(self.words)
        self.generators = tuple(generators) if generators is not None else None
        self.dimension = dimension
        assert len(self.word_set) == len(self.words)

    @property
    def is_linear(self):
        return self.dimension is not None

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return tuple(w) in self.word_set

    def __eq__(self, other):
        return (isinstance(other, Code) and other.p == self.p
                and other.n == self.n and other.word_set == self.word_set)

    def __hash__(self):
        return hash((self.p, self.n, self.word_set))

    def __repr__(self):
        kind = "dim %d" % self.dimension if self.is_linear else "nonlinear"
        return "Code(p=%d, n=%d, |C|=%d, %s)" % (self.p, self.n,
                                                 len(self.words), kind)


def _check_word(w, p, n):
    w = tuple(int(d) % p for d in w)
    if len(w) != n:
        raise ValueError("word length %d, expected %d" % (len(w), n))
    return w


def _row_reduce(rows, p):
    """Row echelon form mod p; returns (pivot rows, pivot column list)."""
    rows = [list(r) for r in rows]
    pivots = []
    basis = []
    col = 0
    n = len(rows[0]) if rows else 0
    while rows and col < n:
        src = next((i for i, r in enumerate(rows) if r[col] % p != 0), None)
        if src is None:
            col += 1
            continue
        row = rows.pop(src)
        inv = pow(row[col], -1, p)
        row = [(inv * x) % p for x in row]
        for r in rows:
            f = r[col] % p
            if f:
                for j in range(n):
                    r[j] = (r[j] - f * row[j]) % p
        basis.append(tuple(row))
        pivots.append(col)
        col += 1
    return basis, pivots


def _span(basis, p, n):
    words = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        w = [0] * n
        for a, g in zip(coeffs, basis):
            if a:
                for j in range(n):
                    w[j] = (w[j] + a * g[j]) % p
        words.add(tuple(w))
    return words


def _is_closed(words, p, n):
    """Closure of a word set under subtraction (hence a linear code)."""
    if tuple([0] * n) not in words:
        return False
    for u in words:
        for v in words:
            if tuple((a - b) % p for a, b in zip(u, v)) not in words:
                return False
    return True


def make_code(p, n, words=None, generators=None):
    """Build a Code from explicit words or from spanning generators."""
    check_prime(p)
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    if (words is None) == (generators is None):
        raise ValueError("give exactly one of words= or generators=")
    if generators is not None:
        gens = [_check_word(g, p, n) for g in generators]
        basis, _ = _row_reduce(gens, p)
        span = _span(basis, p, n)
        return Code(p, n, span, generators=gens, dimension=len(basis))
    wlist = {_check_word(w, p, n) for w in words}
    if not wlist:
        raise ValueError("empty code")
    dim = None
    if len(wlist) <= 4096 and _is_closed(wlist, p, n):
        basis, _ = _row_reduce(sorted(wlist), p)
        dim = len(basis)
        assert p ** dim == len(wlist)
    return Code(p, n, wlist, dimension=dim)


def zero_code(p, n):
    return make_code(p, n, words=[(0,) * n])


def linear_basis(code):
    """A row-reduced generating set for a linear code."""
    if not code.is_linear:
        raise ValueError("code is not linear")
    basis, _ = _row_reduce(code.generators or code.words, code.p)
    return basis


def dual_code(code):
    """The dual under the standard inner product; linear codes only."""
    if not code.is_linear:
        raise ValueError("dual of a nonlinear code is undefined here")
    p, n = code.p, code.n
    basis, pivots = _row_reduce(code.words, p)
    free = [j for j in range(n) if j not in pivots]
    dual_basis = []
    for f in free:
        w = [0] * n
        w[f] = 1
        for row, pc in zip(basis, pivots):
            w[pc] = (-row[f]) % p
        dual_basis.append(tuple(w))
    if not dual_basis:
        return zero_code(p, n)
    return make_code(p, n, generators=dual_basis)


def _inner(u, v, p):
    return sum(a * b for a, b in zip(u, v)) % p


class WeightEnumerator:
    """Symmetrized weight statistics: counts of digit-class profiles.

    coefficients maps an exponent tuple (l_0, ..., l_r) to the number of
    words with l_j coordinates congruent to +-j mod p, where
    r = (p-1)/2 for odd p and r = 1 for p = 2.
    """

    def __init__(self, p, n, coefficients):
        self.p = p
        self.n = n
        self.r = 1 if p == 2 else (p - 1) // 2
        self.coefficients = dict(coefficients)
        for expo, cnt in self.coefficients.items():
            assert len(expo) == self.r + 1 and sum(expo) == n and cnt > 0

    def mass(self):
        return sum(self.coefficients.values())

    def __eq__(self, other):
        return (isinstance(other, WeightEnumerator) and other.p == self.p
                and other.coefficients == self.coefficients)

    def __repr__(self):
        return "WeightEnumerator(p=%d, %r)" % (self.p, self.coefficients)


def digit_class(d, p):
    """The symmetrization class of a digit: j with d = +-j mod p."""
    d %= p
    return min(d, p - d)


def word_profile(w, p):
    r = 1 if p == 2 else (p - 1) // 2
    prof = [0] * (r + 1)
    for d in w:
        prof[digit_class(d, p)] += 1
    return tuple(prof)


def weight_enumerator(code):
    counts = Counter(word_profile(w, code.p) for w in code.words)
    return WeightEnumerator(code.p, code.n, counts)


def hamming_weight(w):
    return sum(1 for d in w if d != 0)


def min_distance(code):
    """Minimum pairwise Hamming distance; None for codes with one word."""
    if len(code.words) < 2:
        return None
    if code.is_linear:
        return min(hamming_weight(w) for w in code.words if any(w))
    best = None
    for u, v in itertools.combinations(code.words, 2):
        d = sum(1 for a, b in zip(u, v) if a != b)
        if best is None or d < best:
            best = d
    return best


def doubly_even(code):
    """All weights divisible by 4; defined for p = 2 only."""
    if code.p != 2:
        raise ValueError("doubly even is a binary-code notion")
    return all(hamming_weight(w) % 4 == 0 for w in code.words)


def code_predicates(code):
    """Self-orthogonality and friends, as a plain dict."""
    p = code.p
    self_orth = code.is_linear and all(
        _inner(u, v, p) == 0
        for u in (code.generators or code.words)
        for v in (code.generators or code.words))
    out = {
        "self_orthogonal": bool(self_orth),
        "self_dual": bool(self_orth and code.is_linear
                          and 2 * code.dimension == code.n),
        "min_distance": min_distance(code),
    }
    if p == 2:
        out["doubly_even"] = doubly_even(code)
    return out


# ---------------------------------------------------------------------------
# Standard codes
# ---------------------------------------------------------------------------

def _hamming8():
    """Extended binary Hamming code on coordinates (parity, point 1..7)."""
    cvecs = [FANO_C_VECTORS[i] for i in range(1, 8)]
    gens = []
    for cv in cvecs[:3]:          # c_1, c_2, c_3 are independent
        gens.append(tuple(1 if j in cv else 0 for j in range(8)))
    gens.append((1,) + (1,) * 7)  # all-ones with its parity bit
    return make_code(2, 8, generators=gens)


def _tetracode():
    return make_code(3, 4, generators=[(1, 0, 1, 2), (0, 1, 1, 1)])


def _golay12():
    gens = []
    for i in range(6):
        row = [0] * 6
        row[i] = 1
        gens.append(tuple(row) + _GOLAY_B[i])
    return make_code(3, 12, generators=gens)


_STANDARD = {"hamming8": _hamming8, "tetracode": _tetracode,
             "golay12": _golay12}


def standard_codes(name):
    """One of the named codes: hamming8, tetracode, golay12."""
    try:
        return _STANDARD[name]()
    except KeyError:
        raise ValueError("unknown standard code %r (have %s)"
                         % (name, ", ".join(sorted(_STANDARD)))) from None


# ---------------------------------------------------------------------------
# Monomial transforms
# ---------------------------------------------------------------------------

class MonomialTransform:
    """Coordinate permutation combined with unit scalars.

    Acting on a word w gives y with y_j = c_j * w[sigma_j], so sigma lists,
    for every output coordinate, which input coordinate feeds it.
    """

    def __init__(self, p, sigma, scalars):
        check_prime(p)
        self.p = p
        self.sigma = tuple(int(s) for s in sigma)
        self.scalars = tuple(int(c) % p for c in scalars)
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)):
            raise ValueError("sigma is not a permutation of 0..%d" % (n - 1))
        if len(self.scalars) != n or any(c % p == 0 for c in self.scalars):
            raise ValueError("scalars must be n units mod p")

    @property
    def n(self):
        return len(self.sigma)

    def apply_word(self, w):
        return tuple((self.scalars[j] * w[self.sigma[j]]) % self.p
                     for j in range(self.n))

    def compose(self, other):
        """self after other: apply_word(other.apply_word(w)) for all w."""
        if self.p != other.p or self.n != other.n:
            raise ValueError("incompatible transforms")
        sigma = tuple(other.sigma[self.sigma[j]] for j in range(self.n))
        scal = tuple((self.scalars[j] * other.scalars[self.sigma[j]]) % self.p
                     for j in range(self.n))
        return MonomialTransform(self.p, sigma, scal)


def apply_monomial(code, g):
    """Image of a code under a monomial transform."""
    if g.p != code.p or g.n != code.n:
        raise ValueError("transform does not match the code")
    words = [g.apply_word(w) for w in code.words]
    return Code(code.p, code.n, words, dimension=code.dimension)


# ---------------------------------------------------------------------------
# File format: first line "p n", one word per line, '#' starts a comment.
# ---------------------------------------------------------------------------

def parse_code_text(text):
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'p n'")
    p, n = int(head[0]), int(head[1])
    words = []
    for body in lines[1:]:
        digits = body.split()
        if len(digits) != n:
            raise ValueError("bad word %r: expected %d digits" % (body, n))
        words.append(tuple(int(d) for d in digits))
    if not words:
        raise ValueError("code file lists no words")
    return make_code(p, n, words=words)


def read_code_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_text(fh.read())


def code_to_text(code):
    out = ["%d %d" % (code.p, code.n)]
    out.extend(" ".join(str(d) for d in w) for w in code.words)
    return "\n".join(out) + "\n"
