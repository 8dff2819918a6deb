"""Exact combinatorics of the shuffle algebra on the alphabet {x, y}.

Words, linear combinations over exact rationals, the shuffle product, the
regularization maps onto the subalgebras h1 = C + h*y (words ending in y)
and h0 = C + x*h*y (words starting with x and ending in y), the antipode,
and enumeration of all words with fixed weight, depth and height.

Everything in this module is exact; no floating point arithmetic.
"""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import DomainError

Rational = Union[int, Fraction]


class Letter(Enum):
    X = "x"
    Y = "y"

    @property
    def char(self) -> str:
        return self.value


def _check_word_string(s: str) -> None:
    if s.strip("xy"):
        raise ValueError(f"word may only contain letters 'x' and 'y': {s!r}")


_WORDS: Dict[str, "Word"] = {}


class Word:
    """An immutable word over {x, y}.  The empty word is the algebra unit.

    Instances are interned, so words are cheap to hash and compare and can
    be used freely as dictionary keys.
    """

    __slots__ = ("s",)

    s: str

    def __new__(cls, letters: Union[str, "Word", Iterable[Letter]] = "") -> "Word":
        if isinstance(letters, Word):
            return letters
        if isinstance(letters, str):
            s = letters
        else:
            s = "".join(a.char for a in letters)
        _check_word_string(s)
        w = _WORDS.get(s)
        if w is None:
            w = object.__new__(cls)
            w.s = s
            _WORDS[s] = w
        return w

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the textual word syntax: a string over {x,y}, or "1" for the unit."""
        text = text.strip()
        if text == "1" or text == "":
            return cls("")
        return cls(text)

    # -- basic data -------------------------------------------------------

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(Letter(c) for c in self.s)

    @property
    def weight(self) -> int:
        return len(self.s)

    @property
    def depth(self) -> int:
        return self.s.count("y")

    @property
    def height(self) -> int:
        if not self.s:
            raise DomainError("height of the empty word is undefined")
        return self.s.count("yx") + 1

    @property
    def is_empty(self) -> bool:
        return not self.s

    @property
    def in_h1(self) -> bool:
        """Membership in C + h*y: empty, or last letter y."""
        return not self.s or self.s[-1] == "y"

    @property
    def in_h0(self) -> bool:
        """Membership in C + x*h*y: empty, or first letter x and last letter y."""
        return not self.s or (self.s[0] == "x" and self.s[-1] == "y")

    # -- structure --------------------------------------------------------

    def concat(self, other: "Word") -> "Word":
        return Word(self.s + other.s)

    def __add__(self, other: "Word") -> "Word":
        return self.concat(other)

    def reverse(self) -> "Word":
        return Word(self.s[::-1])

    def prefix(self, n: int) -> "Word":
        return Word(self.s[:n])

    def suffix(self, n: int) -> "Word":
        """The suffix consisting of the last n letters."""
        return Word(self.s[len(self.s) - n:]) if n else Word("")

    def __len__(self) -> int:
        return len(self.s)

    def __hash__(self) -> int:
        return hash(self.s)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.s == other.s

    def __lt__(self, other: "Word") -> bool:
        return (len(self.s), self.s) < (len(other.s), other.s)

    def __str__(self) -> str:
        return self.s or "1"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY_WORD = Word("")
X = Word("x")
Y = Word("y")


class MultiIndex:
    """A composition (k1, ..., kr) of positive integers, r >= 1.

    Multi-indices are in bijection with nonempty words in h1 through
    (k1,...,kr) <-> x^(k1-1) y ... x^(kr-1) y.
    """

    __slots__ = ("parts",)

    parts: Tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(k) for k in parts)
        if not parts or any(k < 1 for k in parts):
            raise ValueError(f"multi-index parts must be positive integers: {parts}")
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "MultiIndex":
        """Parse the comma-list syntax, e.g. "3,1"."""
        return cls(int(t) for t in text.split(","))

    @property
    def admissible(self) -> bool:
        return self.parts[0] >= 2

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def height(self) -> int:
        return sum(1 for k in self.parts if k >= 2)

    def to_word(self) -> Word:
        return Word("".join("x" * (k - 1) + "y" for k in self.parts))

    @classmethod
    def from_word(cls, w: Word) -> "MultiIndex":
        if w.is_empty or not w.in_h1:
            raise DomainError(f"only nonempty words in h1 name a multi-index: {w}")
        parts, run = [], 0
        for c in w.s:
            if c == "x":
                run += 1
            else:
                parts.append(run + 1)
                run = 0
        return cls(parts)

    def __hash__(self) -> int:
        return hash(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiIndex) and self.parts == other.parts

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.parts)

    def __repr__(self) -> str:
        return f"MultiIndex({self.parts})"


class LinComb:
    """A finite formal linear combination of words with exact rational coefficients.

    Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    terms: Dict[Word, Fraction]

    def __init__(self, terms: Union[Dict[Word, Rational], Iterable[Tuple[Word, Rational]], None] = None):
        d: Dict[Word, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                c = Fraction(c)
                if c:
                    c0 = d.get(w)
                    c = c if c0 is None else c0 + c
                    if c:
                        d[w] = c
                    elif w in d:
                        del d[w]
        self.terms = d

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def of(cls, w: Word, coeff: Rational = 1) -> "LinComb":
        return cls({w: Fraction(coeff)})

    def coefficient(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(self.terms.items())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LinComb") -> "LinComb":
        d = dict(self.terms)
        for w, c in other.terms.items():
            nc = d.get(w, Fraction(0)) + c
            if nc:
                d[w] = nc
            elif w in d:
                del d[w]
        out = LinComb.__new__(LinComb)
        out.terms = d
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        out = LinComb.__new__(LinComb)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __mul__(self, scalar: Rational) -> "LinComb":
        c = Fraction(scalar)
        out = LinComb.__new__(LinComb)
        out.terms = {} if not c else {w: v * c for w, v in self.terms.items()}
        return out

    __rmul__ = __mul__

    def concat_letter(self, a: Letter, left: bool = True) -> "LinComb":
        """Exact concatenation of a single letter on the left or right."""
        out = LinComb.__new__(LinComb)
        if left:
            out.terms = {Word(a.char + w.s): c for w, c in self.terms.items()}
        else:
            out.terms = {Word(w.s + a.char): c for w, c in self.terms.items()}
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            bits.append(f"{c}*{w}" if c != 1 else str(w))
        return " + ".join(bits)

    def to_jsonable(self) -> List[dict]:
        """Serialize as a list of {word, numerator, denominator}."""
        return [
            {"word": str(w), "numerator": c.numerator, "denominator": c.denominator}
            for w, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_jsonable(cls, data: Sequence[dict]) -> "LinComb":
        return cls(
            (Word.parse(item["word"]), Fraction(item["numerator"], item["denominator"]))
            for item in data
        )


# ---------------------------------------------------------------------------
# shuffle product
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _shuffle_str(u: str, v: str) -> Tuple[Tuple[str, int], ...]:
    # a1 w1 sh a2 w2 = a1 (w1 sh a2 w2) + a2 (a1 w1 sh w2)
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    if u > v:  # shuffle is commutative; canonicalize for the memo table
        u, v = v, u
    acc: Dict[str, int] = {}
    for w, c in _shuffle_str(u[1:], v):
        key = u[0] + w
        acc[key] = acc.get(key, 0) + c
    for w, c in _shuffle_str(u, v[1:]):
        key = v[0] + w
        acc[key] = acc.get(key, 0) + c
    return tuple(acc.items())


def shuffle(w1: Word, w2: Word) -> LinComb:
    """Shuffle product of two words; integer coefficients."""
    out = LinComb.__new__(LinComb)
    out.terms = {Word(s): Fraction(c) for s, c in _shuffle_str(w1.s, w2.s)}
    return out


def shuffle_lin(a: Union[Word, LinComb], b: Union[Word, LinComb]) -> LinComb:
    """Bilinear extension of the shuffle product to linear combinations."""
    if isinstance(a, Word):
        a = LinComb.of(a)
    if isinstance(b, Word):
        b = LinComb.of(b)
    acc: Dict[Word, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            cuv = cu * cv
            for s, c in _shuffle_str(u.s, v.s):
                w = Word(s)
                nc = acc.get(w, Fraction(0)) + cuv * c
                if nc:
                    acc[w] = nc
                elif w in acc:
                    del acc[w]
    out = LinComb.__new__(LinComb)
    out.terms = acc
    return out


# ---------------------------------------------------------------------------
# regularization maps
# ---------------------------------------------------------------------------
#
# Both maps are computed from the recursive consequence of the unique
# polynomial decompositions h = h1[x] and h1 = h0[y]: stripping the trailing
# block of x's (resp. the leading block of y's) and subtracting the higher
# shuffle components leaves exactly the constant term.

def _in_h1_str(s: str) -> bool:
    return not s or s[-1] == "y"


def _in_h0_str(s: str) -> bool:
    return not s or (s[0] == "x" and s[-1] == "y")


def _merge_scaled(acc: Dict[str, int], items: Iterable[Tuple[str, int]], scale: int) -> None:
    for s, c in items:
        nc = acc.get(s, 0) + scale * c
        if nc:
            acc[s] = nc
        elif s in acc:
            del acc[s]


@lru_cache(maxsize=None)
def _reg1_str(w: str) -> Tuple[Tuple[str, int], ...]:
    if _in_h1_str(w):
        return ((w, 1),)
    stripped = w.rstrip("x")
    n = len(w) - len(stripped)
    acc: Dict[str, int] = {w: 1}
    for j in range(1, n + 1):
        for s, c in _reg1_str(stripped + "x" * (n - j)):
            _merge_scaled(acc, _shuffle_str(s, "x" * j), -c)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _reg0_h1_str(w: str) -> Tuple[Tuple[str, int], ...]:
    # input must lie in h1; strips the leading block of y's
    if _in_h0_str(w):
        return ((w, 1),)
    stripped = w.lstrip("y")
    m = len(w) - len(stripped)
    acc: Dict[str, int] = {w: 1}
    for j in range(1, m + 1):
        for s, c in _reg0_h1_str("y" * (m - j) + stripped):
            _merge_scaled(acc, _shuffle_str(s, "y" * j), -c)
    return tuple(acc.items())


def reg1(w: Union[Word, LinComb]) -> LinComb:
    """Project onto h1 along the shuffle decomposition h = h1[x]."""
    if isinstance(w, Word):
        w = LinComb.of(w)
    acc: Dict[Word, Fraction] = {}
    for u, cu in w.terms.items():
        for s, c in _reg1_str(u.s):
            ww = Word(s)
            nc = acc.get(ww, Fraction(0)) + cu * c
            if nc:
                acc[ww] = nc
            elif ww in acc:
                del acc[ww]
    out = LinComb.__new__(LinComb)
    out.terms = acc
    return out


def reg0(w: Union[Word, LinComb]) -> LinComb:
    """Project onto h0 along the shuffle decomposition h = h0[x, y]."""
    acc: Dict[Word, Fraction] = {}
    for u, cu in reg1(w).terms.items():
        for s, c in _reg0_h1_str(u.s):
            ww = Word(s)
            nc = acc.get(ww, Fraction(0)) + cu * c
            if nc:
                acc[ww] = nc
            elif ww in acc:
                del acc[ww]
    out = LinComb.__new__(LinComb)
    out.terms = acc
    return out


def x_decomposition(w: Union[Word, LinComb]) -> Dict[int, LinComb]:
    """Write w = sum_j v_j sh x^j with every v_j in h1; returns {j: v_j}.

    For a word u x^n with u in h1 the components are v_j = reg1(u x^(n-j)),
    inverting u x^n = sum_j reg1(u x^(n-j)) sh x^j.
    """
    if isinstance(w, Word):
        w = LinComb.of(w)
    out: Dict[int, LinComb] = {}
    for u, c in w.terms.items():
        stripped = u.s.rstrip("x")
        n = len(u.s) - len(stripped)
        for j in range(n + 1):
            vj = reg1(Word(stripped + "x" * (n - j))) * c
            if not vj.is_zero:
                out[j] = out.get(j, LinComb.zero()) + vj
    return {j: v for j, v in out.items() if not v.is_zero}


def antipode(w: Union[Word, LinComb]) -> LinComb:
    """The antipode: sign-reversing word reversal, S(w) = (-1)^|w| reverse(w)."""
    if isinstance(w, Word):
        w = LinComb.of(w)
    acc: Dict[Word, Fraction] = {}
    for u, c in w.terms.items():
        rw = u.reverse()
        sign = -1 if len(u) % 2 else 1
        nc = acc.get(rw, Fraction(0)) + sign * c
        if nc:
            acc[rw] = nc
        elif rw in acc:
            del acc[rw]
    out = LinComb.__new__(LinComb)
    out.terms = acc
    return out


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

_ENUM_WEIGHT_LIMIT = 22


def words_of_weight(k: int) -> Iterator[Word]:
    """All 2^k words of weight k."""
    for tup in itertools.product("xy", repeat=k):
        yield Word("".join(tup))


def g_vanishes(i: int, k: int, n: int, s: int) -> bool:
    """The vanishing conventions for the fixed-statistics word sums."""
    if k <= 0 or n <= 0 or s <= 0 or n < s:
        return True
    if i == 0:
        return k < n + s
    return k < n + s - 1


@lru_cache(maxsize=None)
def enumerate_g(i: int, k: int, n: int, s: int) -> LinComb:
    """Sum (with coefficient 1) of all words in h_i with weight k, depth n, height s.

    Out-of-range triples give the zero combination, following the same
    conventions used when these sums multiply generating series.
    """
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    if g_vanishes(i, k, n, s):
        return LinComb.zero()
    if k > _ENUM_WEIGHT_LIMIT:
        raise DomainError(f"refusing to enumerate 2^{k} words (weight > {_ENUM_WEIGHT_LIMIT})")
    member = _in_h0_str if i == 0 else _in_h1_str
    acc = {}
    for tup in itertools.product("xy", repeat=k):
        w = "".join(tup)
        if w[-1] != "y":
            continue
        if not member(w):
            continue
        if w.count("y") != n or w.count("yx") + 1 != s:
            continue
        acc[Word(w)] = Fraction(1)
    out = LinComb.__new__(LinComb)
    out.terms = acc
    return out


def suffix_closure(w: Word) -> List[Word]:
    """All suffixes of w ordered by increasing length, starting at the empty word."""
    return [w.suffix(n) for n in range(len(w) + 1)]
