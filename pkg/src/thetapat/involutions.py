"""Morphic and antimorphic involutions induced by involutive letter permutations.

Only letter-to-letter involutions are modelled: a permutation ``p`` of the
alphabet with ``p[p[i]] == i``, extended either morphically (letterwise) or
antimorphically (letterwise, then reversed).  The antimorphic extension of the
identity permutation is plain reversal.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .words import Alphabet, DomainError, Word


class Mode(str, enum.Enum):
    MORPHIC = "morphic"
    ANTIMORPHIC = "antimorphic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Involution:
    alphabet: Alphabet
    perm: tuple[int, ...]
    mode: Mode
    _table: bytes = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        k = self.alphabet.size
        if sorted(self.perm) != list(range(k)):
            raise ValueError(f"{self.perm} is not a permutation of {k} letters")
        if any(self.perm[p] != i for i, p in enumerate(self.perm)):
            raise ValueError(f"{self.perm} is not involutive")
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "_table", bytes(self.perm) + bytes(range(k, 256)))

    @classmethod
    def identity(cls, alphabet: Alphabet, mode: Mode = Mode.MORPHIC) -> "Involution":
        return cls(alphabet, tuple(range(alphabet.size)), mode)

    @classmethod
    def from_swaps(cls, alphabet: Alphabet, swaps: str, mode: Mode) -> "Involution":
        """Build from a string of letter pairs, e.g. ``"ab"`` swaps a and b."""
        perm = list(range(alphabet.size))
        for x, y in zip(swaps[::2], swaps[1::2]):
            i, j = alphabet.index(x), alphabet.index(y)
            perm[i], perm[j] = j, i
        return cls(alphabet, tuple(perm), mode)

    @property
    def is_identity_perm(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    def apply_symbols(self, s: bytes) -> bytes:
        t = s.translate(self._table)
        return t[::-1] if self.mode is Mode.ANTIMORPHIC else t

    def __call__(self, w: Word) -> Word:
        return apply_involution(self, w)

    def cycles(self) -> str:
        if self.is_identity_perm:
            return "id"
        letters = self.alphabet.letters
        return "".join(
            f"({letters[i]}{letters[p]})" if p > i else f"({letters[i]})"
            for i, p in enumerate(self.perm)
            if p >= i
        )

    def __str__(self):
        return f"{self.mode.value}:{self.cycles()}"


def apply_involution(theta: Involution, w: Word) -> Word:
    if w.alphabet != theta.alphabet:
        raise DomainError(
            f"word over {w.alphabet.letters!r}, involution over {theta.alphabet.letters!r}"
        )
    return Word(w.alphabet, theta.apply_symbols(w.symbols))


def _involutive_perms(k: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def extend(perm: list[int | None]):
        try:
            i = perm.index(None)
        except ValueError:
            out.append(tuple(perm))  # type: ignore[arg-type]
            return
        perm[i] = i
        extend(perm)
        for j in range(i + 1, k):
            if perm[j] is None:
                perm[i], perm[j] = j, i
                extend(perm)
                perm[j] = None
        perm[i] = None

    extend([None] * k)
    return sorted(out)


def enumerate_involutions(alphabet: Alphabet, mode: Mode) -> list[Involution]:
    """All involutive letter permutations, lexicographic by image sequence.

    The identity always comes first.
    """
    mode = Mode(mode)
    return [Involution(alphabet, p, mode) for p in _involutive_perms(alphabet.size)]


_CYCLE = re.compile(r"\(([a-z])([a-z]?)\)")


def parse_involution(text: str, alphabet: Alphabet) -> Involution:
    """Parse ``morphic:(ab)(c)`` / ``antimorphic:id`` notation over ``alphabet``."""
    mode_text, sep, body = text.strip().partition(":")
    try:
        mode = Mode(mode_text)
    except ValueError:
        raise ValueError(f"unknown involution mode {mode_text!r}") from None
    if not sep:
        raise ValueError(f"expected '<mode>:<cycles>', got {text!r}")
    body = body.replace(" ", "")
    if body == "id":
        return Involution.identity(alphabet, mode)
    if not body or _CYCLE.sub("", body):
        raise ValueError(f"bad cycle notation {body!r}")
    perm = list(range(alphabet.size))
    seen: set[str] = set()
    for x, y in _CYCLE.findall(body):
        for ch in x + y:
            if ch in seen:
                raise ValueError(f"letter {ch!r} appears twice in {body!r}")
            seen.add(ch)
        if y:
            i, j = alphabet.index(x), alphabet.index(y)
            perm[i], perm[j] = j, i
        else:
            alphabet.index(x)
    return Involution(alphabet, tuple(perm), mode)
