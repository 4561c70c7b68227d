"""Alphabets, finite words, morphisms and generated words.

Words keep their letters as ``bytes`` of letter indices; the alphabet is the
only place where indices are mapped back to characters.  Positions reported
to users are 1-based.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union


class DomainError(ValueError):
    """A word or letter does not belong to the expected alphabet."""


class PreconditionError(ValueError):
    """An operation was called outside its precondition."""


class SpecSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"repeated letters in alphabet {self.letters!r}")
        if len(self.letters) > 256:
            raise ValueError("alphabets are limited to 256 letters")

    @classmethod
    def first(cls, k: int) -> "Alphabet":
        """The alphabet of the first ``k`` lower-case letters."""
        if not 1 <= k <= 26:
            raise ValueError(f"alphabet size must be in [1, 26], got {k}")
        return cls("abcdefghijklmnopqrstuvwxyz"[:k])

    @property
    def size(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def index(self, letter: str) -> int:
        i = self.letters.find(letter)
        if i < 0 or len(letter) != 1:
            raise DomainError(f"letter {letter!r} not in alphabet {self.letters!r}")
        return i

    def word(self, text: str) -> "Word":
        return Word(self, bytes(self.index(ch) for ch in text))

    def all_words(self, length: int) -> Iterator["Word"]:
        """Every word of the given length, in lexicographic order."""
        from itertools import product

        for t in product(range(self.size), repeat=length):
            yield Word(self, bytes(t))


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    symbols: bytes = b""

    def __post_init__(self):
        if self.symbols and max(self.symbols) >= self.alphabet.size:
            raise DomainError("letter index outside alphabet")

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return "".join(self.alphabet.letters[i] for i in self.symbols)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise DomainError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.symbols + other.symbols)

    def at(self, i: int) -> str:
        """The i-th letter, counting from 1."""
        if not 1 <= i <= len(self.symbols):
            raise IndexError(i)
        return self.alphabet.letters[self.symbols[i - 1]]

    def factor(self, position: int, length: int) -> "Word":
        """The factor of ``length`` letters starting at 1-based ``position``."""
        return Word(self.alphabet, self.symbols[position - 1 : position - 1 + length])

    def prefix(self, n: int) -> "Word":
        return Word(self.alphabet, self.symbols[:n])

    def over(self, alphabet: Alphabet) -> "Word":
        """Re-express this word over another alphabet containing its letters."""
        if alphabet == self.alphabet:
            return self
        return alphabet.word(str(self))


@dataclass(frozen=True)
class Morphism:
    source: Alphabet
    target: Alphabet
    images: tuple[bytes, ...]

    def __post_init__(self):
        if len(self.images) != self.source.size:
            raise ValueError("one image per source letter is required")
        for img in self.images:
            if not img:
                raise ValueError("morphism images must be nonempty")
            if max(img) >= self.target.size:
                raise DomainError("image letter outside target alphabet")

    @classmethod
    def from_dict(cls, mapping: dict[str, str], target: Alphabet | None = None) -> "Morphism":
        source = Alphabet("".join(mapping))
        if target is None:
            used = set("".join(mapping.values()))
            if used <= set(source.letters):
                target = source
            else:
                target = Alphabet("".join(sorted(used)))
        return cls(source, target, tuple(target.word(img).symbols for img in mapping.values()))

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Parse ``a=ab,b=ba`` notation."""
        mapping: dict[str, str] = {}
        for part in text.split(","):
            key, sep, img = part.strip().partition("=")
            if not sep or len(key) != 1 or not img or not img.isalpha():
                raise SpecSyntaxError(f"bad morphism entry {part!r} in {text!r}")
            if key in mapping:
                raise SpecSyntaxError(f"letter {key!r} mapped twice in {text!r}")
            mapping[key] = img
        try:
            return cls.from_dict(mapping)
        except ValueError as e:
            raise SpecSyntaxError(str(e)) from e

    def image(self, letter: str) -> Word:
        return Word(self.target, self.images[self.source.index(letter)])

    @property
    def is_endomorphism(self) -> bool:
        return self.source == self.target

    @property
    def min_image_length(self) -> int:
        return min(map(len, self.images))

    def __str__(self):
        return ",".join(
            f"{a}={''.join(self.target.letters[i] for i in img)}"
            for a, img in zip(self.source.letters, self.images)
        )


def apply_morphism(m: Morphism, w: Word) -> Word:
    if w.alphabet != m.source:
        try:
            w = w.over(m.source)
        except DomainError as e:
            raise DomainError(f"word {str(w)!r} is not over the domain of {m}") from e
    images = m.images
    return Word(m.target, b"".join(images[i] for i in w.symbols))


def fixpoint_prefix(m: Morphism, seed: str, min_len: int) -> Word:
    """Prefix of length >= ``min_len`` of the fixpoint of ``m`` starting at ``seed``.

    The whole current word is re-expanded at each step and the last expansion
    is returned untruncated.
    """
    if not m.is_endomorphism:
        raise PreconditionError("fixpoints need a morphism from an alphabet to itself")
    s = m.source.index(seed)
    img = m.images[s]
    if len(img) < 2 or img[0] != s:
        raise PreconditionError(f"{m} is not prolongable on {seed!r}")
    w = Word(m.source, bytes([s]))
    while len(w) < min_len:
        w = apply_morphism(m, w)
    return w


@dataclass(frozen=True)
class Literal:
    word: Word

    def __str__(self):
        return f"lit:{self.word}"


@dataclass(frozen=True)
class Fixpoint:
    morphism: Morphism
    seed: str

    def __post_init__(self):
        m = self.morphism
        if not m.is_endomorphism:
            raise PreconditionError("fixpoints need a morphism from an alphabet to itself")
        img = m.image(self.seed)
        if len(img) < 2 or img.at(1) != self.seed:
            raise PreconditionError(f"{m} is not prolongable on {self.seed!r}")

    def __str__(self):
        return f"fix:{self.morphism}@{self.seed}"


@dataclass(frozen=True)
class Composed:
    inner: "WordSpec"
    morphism: Morphism

    def __str__(self):
        return f"{self.inner}|{self.morphism}"


WordSpec = Union[Literal, Fixpoint, Composed]


def realize_word(spec: WordSpec, min_len: int) -> Word:
    """Materialize a generated word, at least ``min_len`` letters long when possible.

    Literals are returned whole regardless of ``min_len``.
    """
    if isinstance(spec, Literal):
        return spec.word
    if isinstance(spec, Fixpoint):
        return fixpoint_prefix(spec.morphism, spec.seed, min_len)
    if isinstance(spec, Composed):
        need = math.ceil(min_len / spec.morphism.min_image_length) + 1
        return apply_morphism(spec.morphism, realize_word(spec.inner, need))
    raise TypeError(f"not a word spec: {spec!r}")


def parse_wordspec(text: str) -> WordSpec:
    """Parse ``lit:<letters>``, ``fix:<morphism>@<seed>`` and ``<spec>|<morphism>``."""
    text = text.strip()
    head, *tail = text.split("|")
    if head.startswith("lit:"):
        letters = head[4:]
        if not letters.isalpha():
            raise SpecSyntaxError(f"literal must be letters only: {head!r}")
        spec: WordSpec = Literal(Alphabet("".join(sorted(set(letters)))).word(letters))
    elif head.startswith("fix:"):
        body, sep, seed = head[4:].rpartition("@")
        if not sep or len(seed) != 1:
            raise SpecSyntaxError(f"fixpoint needs '@<seed letter>': {head!r}")
        try:
            spec = Fixpoint(Morphism.parse(body), seed)
        except (PreconditionError, DomainError) as e:
            raise SpecSyntaxError(str(e)) from e
    else:
        raise SpecSyntaxError(f"word spec must start with 'lit:' or 'fix:': {text!r}")
    for part in tail:
        spec = Composed(spec, Morphism.parse(part))
    return spec


def factors(w: Word, len_min: int, len_max: int) -> Iterator[tuple[int, Word]]:
    """Yield ``(position, factor)`` for every factor with length in range.

    Position-major, then by increasing length; positions are 1-based.
    """
    if not 1 <= len_min <= len_max:
        raise ValueError("need 1 <= len_min <= len_max")
    s, n = w.symbols, len(w)
    for i in range(n):
        for ell in range(len_min, min(len_max, n - i) + 1):
            yield i + 1, Word(w.alphabet, s[i : i + ell])


THUE_MORSE = Fixpoint(Morphism.parse("a=ab,b=ba"), "a")
