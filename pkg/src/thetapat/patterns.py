"""Patterns with involution and their occurrences in finite words.

A pattern is a sequence of terms, each a variable either plain or wrapped in
``t(...)``.  An occurrence substitutes nonempty words for the variables and
applies a fixed involution to the wrapped terms.  All searches take an
explicit bound on the length of each substituted word.
"""
from __future__ import annotations

import re
import string
from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple

import numpy as np

from .involutions import Involution, Mode, apply_involution, enumerate_involutions
from .words import Word


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at column {position + 1}")
        self.position = position


class Term(NamedTuple):
    var: int
    theta: bool = False


@dataclass(frozen=True)
class Pattern:
    terms: tuple[Term, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a pattern needs at least one term")
        object.__setattr__(self, "terms", tuple(Term(*t) for t in self.terms))
        order: list[int] = []
        for t in self.terms:
            if t.var not in order:
                order.append(t.var)
        if order != list(range(len(order))):
            raise ValueError("variable ids must be numbered by first appearance")
        if not self.names:
            object.__setattr__(self, "names", tuple(string.ascii_lowercase[: len(order)]))
        if len(self.names) != len(order) or len(set(self.names)) != len(self.names):
            raise ValueError(f"need {len(order)} distinct variable names, got {self.names}")

    @classmethod
    def renumbered(cls, terms: list[tuple[str, bool]]) -> "Pattern":
        """Build from ``(name, theta)`` pairs, numbering names by first appearance."""
        names: list[str] = []
        out = []
        for name, th in terms:
            if name not in names:
                names.append(name)
            out.append(Term(names.index(name), th))
        return cls(tuple(out), tuple(names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def theta_free(self) -> bool:
        return not any(t.theta for t in self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return " ".join(
            f"t({self.names[t.var]})" if t.theta else self.names[t.var] for t in self.terms
        )


def parse_pattern(text: str) -> Pattern:
    """Parse e.g. ``"a t(a) a"``; variables are single letters a-z."""
    terms: list[tuple[str, bool]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif text.startswith("t(", i):
            var, close = text[i + 2 : i + 3], text[i + 3 : i + 4]
            if not (var.isascii() and var.islower()):
                raise PatternSyntaxError("expected a variable inside t(...)", i + 2)
            if close != ")":
                raise PatternSyntaxError("expected ')'", i + 3)
            terms.append((var, True))
            i += 4
        elif ch.isascii() and ch.islower():
            terms.append((ch, False))
            i += 1
        else:
            raise PatternSyntaxError(f"unexpected character {ch!r}", i)
    if not terms:
        raise PatternSyntaxError("empty pattern", 0)
    return Pattern.renumbered(terms)


def theta_complement(p: Pattern) -> Pattern:
    """Swap plain and wrapped terms of every variable."""
    return Pattern(tuple(Term(t.var, not t.theta) for t in p.terms), p.names)


def erase_theta(p: Pattern) -> Pattern:
    """Replace every ``t(x)`` by ``x``."""
    return Pattern(tuple(Term(t.var) for t in p.terms), p.names)


def split_theta(p: Pattern) -> Pattern:
    """Replace every ``t(x)`` by a fresh plain variable (one per wrapped variable)."""
    free = (c for c in string.ascii_lowercase if c not in p.names)
    fresh: dict[int, str] = {}
    terms = []
    for t in p.terms:
        if t.theta:
            if t.var not in fresh:
                fresh[t.var] = next(free)
            terms.append((fresh[t.var], False))
        else:
            terms.append((p.names[t.var], False))
    return Pattern.renumbered(terms)


def build_instance(
    p: Pattern, asg: Mapping[str, Word], theta: Involution | None = None
) -> Word:
    parts = []
    for t in p.terms:
        name = p.names[t.var]
        if name not in asg:
            raise KeyError(f"variable {name!r} is not assigned")
        u = asg[name]
        if not len(u):
            raise ValueError(f"variable {name!r} assigned the empty word")
        if t.theta:
            if theta is None:
                raise ValueError("pattern has t(...) terms but no involution was given")
            u = apply_involution(theta, u)
        parts.append(u)
    out = parts[0]
    for u in parts[1:]:
        out = out + u
    return out


@dataclass
class Occurrence:
    position: int
    assignment: dict[str, Word]
    involution: Involution
    instance: Word

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(u) for u in self.assignment.values())

    def __str__(self):
        vals = " ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"pos={self.position} theta={self.involution} {vals}"


class _Plan:
    """Static per-term facts for the depth-first matcher.

    Whether a term's variable is already bound when the search reaches it
    depends only on the term order, so it is computed once per pattern.
    """

    def __init__(self, terms: tuple[Term, ...], nvars: int):
        self.terms = terms
        self.nvars = nvars
        seen: set[int] = set()
        self.fresh: list[bool] = []
        self.count: list[int] = []
        self.min_rest: list[int] = []
        self.bound_rest: list[list[int]] = []
        self.accel: list[bool] = []
        self.theta_vars = {t.var for t in terms if t.theta}
        for j, t in enumerate(terms):
            self.fresh.append(t.var not in seen)
            later = terms[j:]
            self.count.append(sum(r.var == t.var for r in later))
            self.min_rest.append(sum(r.var != t.var and r.var not in seen for r in later))
            self.bound_rest.append([r.var for r in later if r.var != t.var and r.var in seen])
            seen.add(t.var)
            nxt = terms[j + 1] if j + 1 < len(terms) else None
            self.accel.append(nxt is not None and nxt.var != t.var and nxt.var in seen)


_PLANS: dict[tuple[Term, ...], _Plan] = {}


def _plan(terms: tuple[Term, ...], nvars: int) -> _Plan:
    plan = _PLANS.get(terms)
    if plan is None:
        plan = _PLANS[terms] = _Plan(terms, nvars)
    return plan


def _match_at(
    s: bytes,
    terms: tuple[Term, ...],
    nvars: int,
    theta: Involution | None,
    max_len: int,
    start: int,
    end: int | None = None,
) -> Iterator[list[bytes]]:
    """Assignments (as byte strings per variable) matching ``terms`` at ``start``.

    Depth-first over terms, each fresh variable taking increasing lengths, so
    results come in lexicographic order of their length vectors.  With ``end``
    the match must stop exactly there.
    """
    plan = _plan(terms, nvars)
    limit = len(s) if end is None else end
    m = len(terms)
    bound: list[bytes] = [b""] * nvars
    imaged: list[bytes] = [b""] * nvars
    flip = theta.apply_symbols if theta is not None else None

    def go(j: int, pos: int) -> Iterator[list[bytes]]:
        if j == m:
            if end is None or pos == end:
                yield list(bound)
            return
        t = terms[j]
        if not plan.fresh[j]:
            img = imaged[t.var] if t.theta else bound[t.var]
            if s.startswith(img, pos) and pos + len(img) <= limit:
                yield from go(j + 1, pos + len(img))
            return
        rest = plan.min_rest[j]
        for v in plan.bound_rest[j]:
            rest += len(bound[v])
        hi = min(max_len, (limit - pos - rest) // plan.count[j])
        if hi < 1:
            return
        if plan.accel[j]:
            nxt = terms[j + 1]
            target = imaged[nxt.var] if nxt.theta else bound[nxt.var]
            stop = pos + hi + len(target)
            lengths: list[int] | range = []
            i = s.find(target, pos + 1, stop)
            while i != -1:
                lengths.append(i - pos)  # type: ignore[union-attr]
                i = s.find(target, i + 1, stop)
        else:
            lengths = range(1, hi + 1)
        for ell in lengths:
            chunk = s[pos : pos + ell]
            if t.theta:
                bound[t.var], imaged[t.var] = flip(chunk), chunk  # type: ignore[misc]
            else:
                bound[t.var] = chunk
                if t.var in plan.theta_vars:
                    imaged[t.var] = flip(chunk)  # type: ignore[misc]
            yield from go(j + 1, pos + ell)

    yield from go(0, start)


def _occurrence(host: Word, p: Pattern, theta: Involution, start: int, words: list[bytes]) -> Occurrence:
    asg = {name: Word(host.alphabet, u) for name, u in zip(p.names, words)}
    return Occurrence(start + 1, asg, theta, build_instance(p, asg, theta))


def _check_args(host: Word, theta: Involution, max_var_len: int) -> None:
    if max_var_len < 1:
        raise ValueError("max_var_len must be at least 1")
    if theta.alphabet != host.alphabet:
        raise ValueError("involution and host word use different alphabets")


def iter_occurrences(
    host: Word, p: Pattern, theta: Involution, max_var_len: int
) -> Iterator[Occurrence]:
    """Every occurrence, by start position and then by length vector."""
    _check_args(host, theta, max_var_len)
    s = host.symbols
    for start in range(len(s)):
        for words in _match_at(s, p.terms, p.nvars, theta, max_var_len, start):
            yield _occurrence(host, p, theta, start, words)


def _unary_first(
    s: bytes, p: Pattern, theta: Involution, max_len: int
) -> tuple[int, int] | None:
    """First (start, length) of a one-variable pattern under a morphic involution.

    Each term's block is a letterwise image of the first block, so for a fixed
    length the condition is a run of matching positions; numpy scans all
    positions per length at once.
    """
    a = np.frombuffer(s, dtype=np.uint8)
    n, m = len(a), len(p.terms)
    pa = np.asarray(theta.perm, dtype=np.uint8)[a] if len(a) else a
    first_wrap = p.terms[0].theta
    best: tuple[int, int] | None = None
    for ell in range(1, min(max_len, n // m) + 1):
        span = n - (m - 1) * ell
        ok = np.ones(span, dtype=bool)
        for j, t in enumerate(p.terms[1:], start=1):
            ref = pa[:span] if t.theta != first_wrap else a[:span]
            ok &= a[j * ell : j * ell + span] == ref
        run = np.concatenate(([0], np.cumsum(ok, dtype=np.int64)))
        hits = np.flatnonzero(run[ell:] - run[:-ell] == ell)
        if len(hits) and (best is None or hits[0] < best[0]):
            best = (int(hits[0]), ell)
            if best[0] == 0:
                break
    return best


def find_occurrence(
    host: Word, p: Pattern, theta: Involution, max_var_len: int, fast: bool = True
) -> Occurrence | None:
    """First occurrence with every variable of length <= ``max_var_len``, or None.

    One-variable patterns under morphic involutions use a vectorized scan
    unless ``fast`` is False; both paths return the same occurrence.
    """
    _check_args(host, theta, max_var_len)
    if fast and p.nvars == 1 and (theta.mode is Mode.MORPHIC or p.theta_free):
        hit = _unary_first(host.symbols, p, theta, max_var_len)
        if hit is None:
            return None
        start, ell = hit
        chunk = host.symbols[start : start + ell]
        u = theta.apply_symbols(chunk) if p.terms[0].theta else chunk
        return _occurrence(host, p, theta, start, [u])
    return next(iter_occurrences(host, p, theta, max_var_len), None)


def find_occurrence_any_involution(
    host: Word,
    p: Pattern,
    mode: Mode,
    max_var_len: int,
    involutions: list[Involution] | None = None,
) -> Occurrence | None:
    """First occurrence over the involutions of ``mode``, tried in canonical order.

    For a pattern without ``t(...)`` terms only the identity is tried, which
    is first in canonical order and gives the same answer as any other.
    """
    if involutions is None:
        involutions = enumerate_involutions(host.alphabet, mode)
    if p.theta_free:
        involutions = involutions[:1]
    for theta in involutions:
        occ = find_occurrence(host, p, theta, max_var_len)
        if occ is not None:
            return occ
    return None


def theta_free_regex(p: Pattern, max_var_len: int) -> re.Pattern[str]:
    """A backreference regex equivalent to a pattern without ``t(...)`` terms.

    Lazy groups make ``re.search`` return the occurrence with the smallest
    start, then the lexicographically smallest length vector.
    """
    if not p.theta_free:
        raise ValueError("only patterns without t(...) terms have a regex form")
    seen: set[int] = set()
    parts = []
    for t in p.terms:
        if t.var in seen:
            parts.append(f"(?P={p.names[t.var]})")
        else:
            seen.add(t.var)
            parts.append(f"(?P<{p.names[t.var]}>.{{1,{max_var_len}}}?)")
    return re.compile("".join(parts), re.DOTALL)


def contains_any(
    s: bytes, p: Pattern, involutions: list[Involution], max_var_len: int
) -> bool:
    """Bare yes/no search over raw symbols, skipping Occurrence construction."""
    if p.theta_free:
        involutions = involutions[:1]
    for theta in involutions:
        for start in range(len(s) - len(p.terms) + 1):
            for _ in _match_at(s, p.terms, p.nvars, theta, max_var_len, start):
                return True
    return False


def occurs_ending_at(
    s: bytes, p: Pattern, involutions: list[Involution], end: int, max_var_len: int
) -> bool:
    """Whether some occurrence ends exactly at offset ``end`` of ``s``.

    Used by the prover to test only the occurrences a new last letter creates.
    """
    if p.theta_free:
        involutions = involutions[:1]
    m = len(p.terms)
    lowest = max(0, end - m * max_var_len)
    for theta in involutions:
        for start in range(end - m, lowest - 1, -1):
            for _ in _match_at(s, p.terms, p.nvars, theta, max_var_len, start, end):
                return True
    return False
