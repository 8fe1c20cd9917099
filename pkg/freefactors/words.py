"""Reduced words over a fixed free basis and basis endomorphisms.

Letters are signed integers: ``i`` stands for a_i and ``-i`` for a_i^-1,
so a letter is exactly an (index, sign) pair packed into one int.
Text syntax uses lowercase ``a..z`` for a_1..a_26 and uppercase for the
inverses; ranks above 26 use the ``a1 A1`` token form.
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from freefactors.exceptions import (
    InverseMismatchError,
    LetterOutOfRangeError,
    MapError,
    WordError,
    WordParseError,
)

_TOKEN = re.compile(r"([aA])(\d+)")
_IDENTITY_TEXT = frozenset({"", "1", "ε"})


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def _letter_text(x: int, tokens: bool) -> str:
    index = abs(x)
    if tokens:
        return f"{'a' if x > 0 else 'A'}{index}"
    ch = chr(ord("a") + index - 1)
    return ch if x > 0 else ch.upper()


@dataclass(frozen=True, slots=True)
class Word:
    """A reduced word. Construct through :func:`reduce` or the helpers."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        previous = 0
        for x in self.letters:
            if x == 0:
                raise WordError("letter index 0 is not a basis letter")
            if x == -previous:
                raise WordError(f"word {self.letters} is not reduced")
            previous = x

    @classmethod
    def generator(cls, i: int, sign: int = 1) -> Word:
        return cls((i if sign > 0 else -i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        left = list(self.letters)
        right = other.letters
        k = 0
        while left and k < len(right) and left[-1] == -right[k]:
            left.pop()
            k += 1
        return Word(tuple(left) + right[k:])

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        result = Word()
        for _ in range(abs(k)):
            result = result * base
        return result

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        tokens = self.max_index > 26
        return (" " if tokens else "").join(_letter_text(x, tokens) for x in self.letters)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    @property
    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The letters as (index, sign) pairs."""
        return tuple((abs(x), 1 if x > 0 else -1) for x in self.letters)

    def inverse(self) -> Word:
        return Word(tuple(-x for x in reversed(self.letters)))

    def conjugate(self, g: Word) -> Word:
        """g · self · g⁻¹."""
        return g * self * g.inverse()

    def count(self, i: int) -> int:
        """Occurrences of a_i^{±1}."""
        return sum(1 for x in self.letters if abs(x) == i)

    @property
    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or self.letters[0] != -self.letters[-1]

    def rotations(self) -> list[Word]:
        """Cyclic rotations; meaningful for cyclically reduced words."""
        n = len(self.letters)
        if n == 0:
            return [self]
        return [Word(self.letters[k:] + self.letters[:k]) for k in range(n)]

    def class_key(self) -> tuple[int, ...]:
        """Canonical key of the unoriented conjugacy class [w] = [w⁻¹]."""
        core, _ = cyclic_reduce(self)
        if core.is_trivial:
            return ()
        candidates = [r.letters for r in core.rotations()]
        candidates += [r.letters for r in core.inverse().rotations()]
        return min(candidates)


def reduce(raw: Iterable[int | tuple[int, int]], rank: int | None = None) -> Word:
    """Return the unique reduced form of a letter sequence.

    Letters may be signed ints or (index, sign) pairs. With ``rank`` given,
    indices above it raise :class:`LetterOutOfRangeError`.
    """
    letters: list[int] = []
    for item in raw:
        if isinstance(item, tuple):
            index, sign = item
            x = index if sign > 0 else -index
        else:
            x = int(item)
        if x == 0:
            raise WordError("letter index 0 is not a basis letter")
        if rank is not None and abs(x) > rank:
            raise LetterOutOfRangeError(abs(x), rank)
        letters.append(x)
    return Word(_free_reduce(letters))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w as conjugator · core · conjugator⁻¹ with core cyclically reduced."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return Word(letters[i : j + 1]), Word(letters[:i])


@dataclass(frozen=True)
class Alphabet:
    """The basis a_1..a_n of F_n, with the word text syntax."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise WordError(f"alphabet rank must be at least 2, got {self.rank}")

    def generator(self, i: int) -> Word:
        if not 1 <= i <= self.rank:
            raise LetterOutOfRangeError(i, self.rank)
        return Word((i,))

    def generators(self) -> list[Word]:
        return [Word((i,)) for i in range(1, self.rank + 1)]

    def parse(self, text: str) -> Word:
        stripped = text.strip()
        if stripped in _IDENTITY_TEXT:
            return Word()
        if any(ch.isdigit() for ch in stripped):
            return reduce(self._parse_tokens(text), self.rank)
        letters: list[int] = []
        for column, ch in enumerate(text, start=1):
            if ch.isspace():
                continue
            if not ("a" <= ch.lower() <= "z"):
                raise WordParseError(text, column)
            index = ord(ch.lower()) - ord("a") + 1
            if index > self.rank:
                raise LetterOutOfRangeError(index, self.rank)
            letters.append(index if ch.islower() else -index)
        return reduce(letters, self.rank)

    def _parse_tokens(self, text: str) -> list[int]:
        letters: list[int] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            match = _TOKEN.match(text, pos)
            if match is None:
                raise WordParseError(text, pos + 1, "expected a<index> or A<index>")
            index = int(match.group(2))
            if not 1 <= index <= self.rank:
                raise LetterOutOfRangeError(index, self.rank)
            letters.append(index if match.group(1) == "a" else -index)
            pos = match.end()
        return letters

    def parse_list(self, text: str) -> list[Word]:
        """Parse a comma-separated word list such as ``"a,bab"``."""
        return [self.parse(part) for part in text.split(",")]

    def format(self, w: Word) -> str:
        return str(w)


def parse_word(text: str, n: int) -> Word:
    return Alphabet(n).parse(text)


def enumerate_words(n: int, max_length: int) -> Iterator[Word]:
    """All reduced words of length ≤ max_length, shortest first."""
    layer: list[tuple[int, ...]] = [()]
    yield Word()
    letters = [x for i in range(1, n + 1) for x in (i, -i)]
    for _ in range(max_length):
        nxt: list[tuple[int, ...]] = []
        for w in layer:
            for x in letters:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        for w in nxt:
            yield Word(w)
        layer = nxt


def random_word(n: int, length: int, rng: random.Random) -> Word:
    """A uniformly grown random reduced word of exactly the given length."""
    letters: list[int] = []
    while len(letters) < length:
        x = rng.randint(1, n) * rng.choice((1, -1))
        if letters and letters[-1] == -x:
            continue
        letters.append(x)
    return Word(tuple(letters))


@dataclass(frozen=True)
class BasisMap:
    """Endomorphism of F_n given by the images of a_1..a_n.

    A map is flagged as an automorphism exactly when ``inverse`` is attached;
    inverses are verified by composition on generators when supplied.
    """

    images: tuple[Word, ...]
    inverse: BasisMap | None = field(default=None, compare=False, repr=False)
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.images:
            raise MapError("a basis map needs at least one image")
        for image in self.images:
            if image.max_index > len(self.images):
                raise LetterOutOfRangeError(image.max_index, len(self.images))

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def is_automorphism(self) -> bool:
        return self.inverse is not None

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def with_inverse(self, inverse: BasisMap) -> BasisMap:
        """Attach ``inverse`` after checking both compositions fix every generator."""
        if inverse.rank != self.rank:
            raise InverseMismatchError("inverse has a different rank")
        for i in range(1, self.rank + 1):
            a = Word((i,))
            if apply(inverse, self.images[i - 1]) != a or apply(self, inverse.images[i - 1]) != a:
                raise InverseMismatchError(
                    f"supplied inverse of {self.name or 'map'} fails on a_{i}"
                )
        return _paired(self.images, inverse.images, self.name)

    def compose(self, other: BasisMap) -> BasisMap:
        """self ∘ other, with inverse tracked when both are automorphisms."""
        if other.rank != self.rank:
            raise MapError("cannot compose maps of different rank")
        images = tuple(apply(self, x) for x in other.images)
        name = f"{self.name}∘{other.name}" if self.name and other.name else ""
        if self.inverse is None or other.inverse is None:
            return BasisMap(images, name=name)
        inverse_images = tuple(apply(other.inverse, x) for x in self.inverse.images)
        return _paired(images, inverse_images, name)

    def inverted(self) -> BasisMap:
        if self.inverse is None:
            raise MapError(f"{self.name or 'map'} has no verified inverse")
        return self.inverse

    def __str__(self) -> str:
        body = ", ".join(f"a{i}↦{w}" for i, w in enumerate(self.images, start=1))
        return f"{self.name}({body})" if self.name else f"({body})"

    @classmethod
    def from_images(cls, images: Sequence[Word], name: str = "") -> BasisMap:
        return cls(tuple(images), name=name)

    @classmethod
    def identity(cls, n: int) -> BasisMap:
        gens = tuple(Word((i,)) for i in range(1, n + 1))
        return _paired(gens, gens, "id")

    @classmethod
    def nielsen(cls, n: int, i: int, j: int, sign: int = 1, left: bool = False) -> BasisMap:
        """a_i ↦ a_i a_j^sign (or a_j^sign a_i when ``left``)."""
        if i == j:
            raise MapError("Nielsen transformation needs i != j")
        aj = Word.generator(j, sign)
        ai = Word((i,))

        def images(factor: Word) -> tuple[Word, ...]:
            out = [Word((k,)) for k in range(1, n + 1)]
            out[i - 1] = factor * ai if left else ai * factor
            return tuple(out)

        fwd = cls(images(aj), name=f"λ{i}{j}")
        return fwd.with_inverse(cls(images(aj.inverse())))

    @classmethod
    def epsilon(cls, n: int, i: int) -> BasisMap:
        images = tuple(Word((-k,) if k == i else (k,)) for k in range(1, n + 1))
        fwd = cls(images, name=f"ε{i}")
        return fwd.with_inverse(fwd)

    @classmethod
    def iota(cls, n: int) -> BasisMap:
        images = tuple(Word((-k,)) for k in range(1, n + 1))
        fwd = cls(images, name="ι")
        return fwd.with_inverse(fwd)

    @classmethod
    def signed_permutation(
        cls, n: int, perm: Sequence[int], signs: Sequence[int] | None = None
    ) -> BasisMap:
        """a_i ↦ a_{perm[i]}^{signs[i]}; ``perm`` lists 1-based targets."""
        signs = signs or [1] * n
        if sorted(perm) != list(range(1, n + 1)) or len(signs) != n:
            raise MapError(f"not a signed permutation of rank {n}: {perm}, {signs}")
        images = tuple(Word.generator(perm[k], signs[k]) for k in range(n))
        inverse = [Word()] * n
        for k in range(n):
            inverse[perm[k] - 1] = Word.generator(k + 1, signs[k])
        return cls(images, name="w").with_inverse(cls(tuple(inverse)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> BasisMap:
        perm = list(range(1, n + 1))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return cls.signed_permutation(n, perm)

    @classmethod
    def inner(cls, n: int, g: Word) -> BasisMap:
        """Conjugation x ↦ g⁻¹ x g."""
        gi = g.inverse()
        fwd = tuple(gi * Word((k,)) * g for k in range(1, n + 1))
        bwd = tuple(g * Word((k,)) * gi for k in range(1, n + 1))
        return _paired(fwd, bwd, f"c[{g}]")


def _paired(images: tuple[Word, ...], inverse_images: tuple[Word, ...], name: str) -> BasisMap:
    fwd = BasisMap(images, name=name)
    bwd = BasisMap(inverse_images, name=f"{name}⁻¹" if name else "")
    object.__setattr__(fwd, "inverse", bwd)
    object.__setattr__(bwd, "inverse", fwd)
    return fwd


def apply(m: BasisMap, w: Word) -> Word:
    """Substitute the images of m into w and reduce."""
    out: list[int] = []
    for x in w.letters:
        index = abs(x)
        if index > m.rank:
            raise LetterOutOfRangeError(index, m.rank)
        image = m.images[index - 1].letters
        out.extend(image if x > 0 else (-y for y in reversed(image)))
    return Word(_free_reduce(out))


def f0(n: int) -> BasisMap:
    """The fully irreducible automorphism a_i ↦ a_{i+1}, a_n ↦ a_1 a_3 … a_n a_2."""
    if n < 2:
        raise WordError(f"f0 needs n >= 2, got {n}")
    if n == 2:
        images = (Word((2,)), Word((1, 2)))
        inverse = (Word((2, -1)), Word((1,)))
    else:
        images = tuple(Word((i + 1,)) for i in range(1, n)) + (
            Word((1,) + tuple(range(3, n + 1)) + (2,)),
        )
        first = Word((n, -1) + tuple(-k for k in range(n - 1, 1, -1)))
        inverse = (first,) + tuple(Word((i - 1,)) for i in range(2, n + 1))
    return BasisMap(images, name="f0").with_inverse(BasisMap(inverse))


def build_W(n: int, k: int) -> Word:
    """W_0 = a_n and W_{k+1} = W_k a_{k+1} W_k⁻¹."""
    if n < 2 or not 0 <= k <= n - 1:
        raise WordError(f"build_W needs 0 <= k <= n-1, got n={n}, k={k}")
    w = Word((n,))
    for step in range(1, k + 1):
        w = w * Word((step,)) * w.inverse()
    return w
