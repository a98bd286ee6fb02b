"""Free associative algebras over QQ: words, degree-lexicographic orders and polynomials.

Words are tuples of generator indices; the empty tuple is the unit.  Polynomials
are immutable maps from words to nonzero :class:`fractions.Fraction` coefficients
tagged with the alphabet they live over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Word = tuple[int, ...]
Scalar = Union[int, Fraction]

LESS, EQUAL, GREATER = -1, 0, 1


class AlphabetError(ValueError):
    """Operands live over different alphabets."""


@dataclass(frozen=True)
class Generator:
    name: str
    index: int


def make_alphabet(names: Iterable[str]) -> tuple[str, ...]:
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate generator names in {names!r}")
    return names


def generators(alphabet: Sequence[str]) -> list[Generator]:
    return [Generator(name, i) for i, name in enumerate(alphabet)]


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order on words.

    ``precedence`` lists the generator indices from largest to smallest, so the
    default ``(0, 1, ..., n-1)`` makes the first declared generator the biggest.
    """

    alphabet: tuple[str, ...]
    precedence: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.precedence) != list(range(len(self.alphabet))):
            raise ValueError("precedence must be a permutation of the alphabet")
        n = len(self.precedence)
        rank = [0] * n
        for pos, g in enumerate(self.precedence):
            rank[g] = n - pos
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def deglex(cls, alphabet: Sequence[str], precedence: Sequence[str] | None = None) -> "MonomialOrder":
        alphabet = tuple(alphabet)
        if precedence is None:
            return cls(alphabet, tuple(range(len(alphabet))))
        index = {name: i for i, name in enumerate(alphabet)}
        try:
            prec = [index[name] for name in precedence]
        except KeyError as exc:
            raise AlphabetError(f"unknown generator {exc.args[0]!r} in precedence") from None
        # unnamed generators keep declaration order below the named ones
        prec += [i for i in range(len(alphabet)) if i not in prec]
        return cls(alphabet, tuple(prec))

    def reversed(self) -> "MonomialOrder":
        return MonomialOrder(self.alphabet, tuple(reversed(self.precedence)))

    def key(self, word: Word) -> tuple[int, tuple[int, ...]]:
        rank = self._rank
        return (len(word), tuple(rank[g] for g in word))

    def compare(self, u: Word, v: Word) -> int:
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def names(self) -> list[str]:
        return [self.alphabet[g] for g in self.precedence]


def compare(u: Word, v: Word, order: MonomialOrder) -> int:
    n = len(order.alphabet)
    if any(g < 0 or g >= n for g in u + v):
        raise AlphabetError("word uses letters outside the order's alphabet")
    return order.compare(u, v)


def word_str(word: Word, alphabet: Sequence[str]) -> str:
    """Render a word with runs collapsed, e.g. ``x*y^2``; the unit renders as ``1``."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = alphabet[word[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


class NcPoly:
    """An element of QQ<alphabet>.  Immutable; zero coefficients are never stored."""

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Sequence[str], terms: Mapping[Word, Scalar] | None = None):
        self.alphabet = tuple(alphabet)
        clean: dict[Word, Fraction] = {}
        if terms:
            n = len(self.alphabet)
            for w, c in terms.items():
                w = tuple(w)
                if any(g < 0 or g >= n for g in w):
                    raise AlphabetError(f"word {w} has letters outside {self.alphabet}")
                c = Fraction(c)
                if c:
                    clean[w] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, alphabet: tuple[str, ...], terms: dict[Word, Fraction]) -> "NcPoly":
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p._terms = {w: c for w, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def zero(cls, alphabet: Sequence[str]) -> "NcPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Sequence[str]) -> "NcPoly":
        return cls(alphabet, {(): 1})

    @classmethod
    def word(cls, alphabet: Sequence[str], word: Word, coeff: Scalar = 1) -> "NcPoly":
        return cls(alphabet, {tuple(word): coeff})

    @classmethod
    def gen(cls, alphabet: Sequence[str], name: str) -> "NcPoly":
        return cls(alphabet, {(tuple(alphabet).index(name),): 1})

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> list[Word]:
        return list(self._terms)

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((len(w) for w in self._terms), default=-1)

    def leading_word(self, order: MonomialOrder) -> Word:
        if not self._terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._terms[self.leading_word(order)]

    def monic(self, order: MonomialOrder) -> "NcPoly":
        return self * (1 / self.leading_coefficient(order))

    def _check(self, other: "NcPoly") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def _coerce(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return NcPoly(self.alphabet, {(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return NcPoly._raw(self.alphabet, terms)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            return NcPoly._raw(self.alphabet, {w: c * c0 for w, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Word, Fraction] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                terms[w] = terms.get(w, 0) + a * b
        return NcPoly._raw(self.alphabet, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = NcPoly.one(self.alphabet)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.alphabet == other.alphabet and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Word, Fraction]]:
        order = order or MonomialOrder.deglex(self.alphabet)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_str(self, order: MonomialOrder | None = None) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (w, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = word_str(w, self.alphabet)
            if not w:
                body = str(a)
            elif a != 1:
                body = f"{a}*{body}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"NcPoly({self.to_str()!r})"

    def substitute(self, images: Mapping[int, "NcPoly"], target_alphabet: Sequence[str]) -> "NcPoly":
        """Apply the algebra map sending generator ``i`` to ``images[i]``.

        Generators missing from ``images`` must also exist in ``target_alphabet``
        and are sent to themselves.
        """
        target_alphabet = tuple(target_alphabet)
        tindex = {name: i for i, name in enumerate(target_alphabet)}

        def image(g: int) -> NcPoly:
            if g in images:
                return images[g]
            return NcPoly(target_alphabet, {(tindex[self.alphabet[g]],): 1})

        result = NcPoly.zero(target_alphabet)
        for w, c in self._terms.items():
            term = NcPoly(target_alphabet, {(): c})
            for g in w:
                term = term * image(g)
            result = result + term
        return result


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q - q * p
