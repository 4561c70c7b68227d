"""Exhaustive finite searches: unavoidability certificates, block checks and
bounded avoidance evidence for the block-substitution constructions.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields
from itertools import product
from typing import Iterable, Mapping

import numpy as np

from .involutions import Involution, Mode, enumerate_involutions
from .patterns import (
    Occurrence,
    Pattern,
    contains_any,
    find_occurrence_any_involution,
    iter_occurrences,
    occurs_ending_at,
    parse_pattern,
    theta_free_regex,
)
from .words import Alphabet, Word, WordSpec, parse_wordspec, realize_word

log = logging.getLogger(__name__)

THM3_WORD = parse_wordspec("fix:a=ab,b=ba@a|a=aacb,b=accb")
THM4_WORD = parse_wordspec("fix:a=ab,b=ba@a|a=aabbc,b=aaccb")
SQUAREFREE_WORD = parse_wordspec("fix:a=abc,b=ac,c=b@a")
ATA = parse_pattern("a t(a) a")


class CounterexampleError(AssertionError):
    def __init__(self, message: str, occurrence: Occurrence):
        super().__init__(f"{message}: {occurrence}")
        self.occurrence = occurrence


class AuditViolation(AssertionError):
    def __init__(self, position: int, factor: str):
        super().__init__(f"doubled letter at position {position} followed badly: {factor!r}")
        self.position = position
        self.factor = factor


def _render(obj) -> dict:
    d = {}
    for f in fields(obj):
        v = getattr(obj, f.name)
        d[f.name] = v if isinstance(v, (int, str, bool)) and not isinstance(v, Mode) else str(v)
    return d


def _as_text(kind: str, d: dict) -> str:
    lines = [f"[{kind}]"]
    lines += [f"{k} = {v}" for k, v in d.items()]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class UnavoidabilityCertificate:
    """Every word of length ``depth`` over ``alphabet_size`` letters contains the
    pattern for some involution of ``mode``, with variables no longer than
    ``max_var_len_used``.

    ``bound_sufficient`` is False when the variable bound was too small to see
    every occurrence; the depth is then still sound but possibly not minimal.
    """

    pattern: Pattern
    mode: Mode
    alphabet_size: int
    depth: int
    nodes_explored: int
    max_var_len_used: int
    bound_sufficient: bool = True

    def to_dict(self) -> dict:
        return _render(self)

    def to_text(self) -> str:
        return _as_text("unavoidability-certificate", self.to_dict())


@dataclass(frozen=True)
class Exceeded:
    """A word of the full search depth in which no occurrence was found.

    With ``bound_sufficient`` False the witness may still contain the pattern
    through longer variables.
    """

    pattern: Pattern
    mode: Mode
    alphabet_size: int
    witness: Word
    nodes_explored: int
    max_var_len_used: int
    bound_sufficient: bool = True

    def to_dict(self) -> dict:
        return _render(self)

    def to_text(self) -> str:
        return _as_text("exceeded", self.to_dict())


ProverResult = UnavoidabilityCertificate | Exceeded


def _prove(
    p: Pattern, k: int, mode: Mode, max_depth: int, max_var_len: int | None, reduced: bool
) -> ProverResult:
    if k < 1 or max_depth < 1:
        raise ValueError("need k >= 1 and max_depth >= 1")
    mode = Mode(mode)
    alphabet = Alphabet.first(k)
    invs = enumerate_involutions(alphabet, mode)
    if max_var_len is None:
        max_var_len = max_depth
    sufficient = max_var_len >= max(1, max_depth - len(p) + 1)
    nodes = 0
    longest = 0

    def dfs(s: bytes) -> bytes | None:
        nonlocal nodes, longest
        letters = range(1 if reduced and not s else k)
        for a in letters:
            t = s + bytes((a,))
            nodes += 1
            if occurs_ending_at(t, p, invs, len(t), max_var_len):
                continue
            longest = max(longest, len(t))
            if len(t) >= max_depth:
                return t
            hit = dfs(t)
            if hit is not None:
                return hit
        return None

    survivor = dfs(b"")
    if survivor is not None:
        return Exceeded(p, mode, k, Word(alphabet, survivor), nodes, max_var_len, sufficient)
    return UnavoidabilityCertificate(p, mode, k, longest + 1, nodes, max_var_len, sufficient)


def prove_unavoidable(
    p: Pattern, k: int, mode: Mode, max_depth: int = 32, max_var_len: int | None = None
) -> ProverResult:
    """Depth-first search over the k-ary word tree, pruning every word that
    contains ``p``.  Returns a certificate when the tree dies out, otherwise
    the first surviving word of length ``max_depth``.

    Only occurrences ending at the newest letter are checked at each node;
    shorter prefixes were already checked.  ``max_var_len`` defaults to
    ``max_depth``.
    """
    return _prove(p, k, mode, max_depth, max_var_len, reduced=False)


def symmetry_reduced_prove(
    p: Pattern, k: int, mode: Mode, max_depth: int = 32, max_var_len: int | None = None
) -> ProverResult:
    """Same verdict as :func:`prove_unavoidable`, exploring only words that start
    with the first letter.

    Relabelling letters maps occurrences to occurrences (the involutions of a
    mode are closed under conjugation by permutations), so every first letter
    roots an isomorphic subtree.
    """
    return _prove(p, k, mode, max_depth, max_var_len, reduced=True)


@dataclass(frozen=True)
class ScanConfirmation:
    words_checked: int
    all_contain: bool
    minimal: bool


def scan_confirm(cert: UnavoidabilityCertificate) -> ScanConfirmation:
    """Re-check a certificate by brute force over all words of length ``depth``,
    and that some word one letter shorter avoids the pattern."""
    alphabet = Alphabet.first(cert.alphabet_size)
    invs = enumerate_involutions(alphabet, cert.mode)
    bound = cert.max_var_len_used

    if cert.pattern.theta_free:
        rx = theta_free_regex(cert.pattern, bound)

        def contains(w: Word) -> bool:
            return rx.search(str(w)) is not None

    else:

        def contains(w: Word) -> bool:
            return contains_any(w.symbols, cert.pattern, invs, bound)

    checked = 0
    all_contain = True
    for w in alphabet.all_words(cert.depth):
        checked += 1
        if not contains(w):
            all_contain = False
            break
    minimal = cert.depth == 1 or any(
        not contains(w) for w in alphabet.all_words(cert.depth - 1)
    )
    return ScanConfirmation(checked, all_contain, minimal)


@dataclass(frozen=True)
class Solution:
    u: Word
    involution: Involution
    blocks: str
    host: Word
    position: int

    def __str__(self):
        return f"u={self.u} theta={self.involution} blocks={self.blocks} host={self.host} pos={self.position}"


@dataclass
class FiniteCheckReport:
    block_words: dict[str, str]
    block_seq_len: int
    forbidden_block_factors: list[str]
    max_u_len: int
    mode: Mode
    sequences_checked: int
    solutions: list[Solution] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "block_words": dict(self.block_words),
            "block_seq_len": self.block_seq_len,
            "forbidden_block_factors": list(self.forbidden_block_factors),
            "max_u_len": self.max_u_len,
            "mode": str(self.mode),
            "sequences_checked": self.sequences_checked,
            "solutions": [str(s) for s in self.solutions],
        }

    def to_text(self) -> str:
        return _as_text("finite-block-check", self.to_dict())


def finite_block_check(
    block_words: Mapping[str, str],
    block_seq_len: int,
    forbidden: Iterable[str],
    max_u_len: int,
    mode: Mode,
    pattern: Pattern = ATA,
    alphabet: Alphabet | None = None,
) -> FiniteCheckReport:
    """Search every admissible concatenation of blocks for ``u t(u) u``.

    Block sequences are strings over the keys of ``block_words`` (e.g. ``"xyyx"``);
    a sequence is admissible when it contains none of ``forbidden`` as a factor.
    Every distinct ``(u, involution, sequence)`` found is reported.
    """
    if block_seq_len < 1:
        raise ValueError("block_seq_len must be at least 1")
    mode = Mode(mode)
    forbidden = list(forbidden)
    if alphabet is None:
        alphabet = Alphabet("".join(sorted(set("".join(block_words.values())))))
    invs = enumerate_involutions(alphabet, mode)
    report = FiniteCheckReport(
        dict(block_words), block_seq_len, forbidden, max_u_len, mode, 0
    )
    keys = list(block_words)
    for seq in map("".join, product(keys, repeat=block_seq_len)):
        if any(f in seq for f in forbidden):
            continue
        report.sequences_checked += 1
        host = alphabet.word("".join(block_words[b] for b in seq))
        for theta in invs:
            seen: set[bytes] = set()
            for occ in iter_occurrences(host, pattern, theta, max_u_len):
                u = next(iter(occ.assignment.values()))
                if u.symbols not in seen:
                    seen.add(u.symbols)
                    report.solutions.append(Solution(u, theta, seq, host, occ.position))
    return report


@dataclass(frozen=True)
class AvoidanceEvidence:
    """No occurrence within a realized prefix, for every involution of the mode,
    with variables up to ``max_var_len``.  Evidence only: nothing is claimed
    past the prefix or the bound."""

    word_spec: str
    prefix_len: int
    pattern: Pattern
    mode: Mode
    max_var_len: int
    result: str = "no-occurrence"

    def to_dict(self) -> dict:
        return _render(self)

    def to_text(self) -> str:
        return _as_text("avoidance-evidence", self.to_dict())


def check_avoidance(
    spec: WordSpec, prefix_len: int, p: Pattern, mode: Mode, max_var_len: int
) -> AvoidanceEvidence:
    if prefix_len < 1:
        raise ValueError("prefix_len must be at least 1")
    mode = Mode(mode)
    host = realize_word(spec, prefix_len).prefix(prefix_len)
    occ = find_occurrence_any_involution(host, p, mode, max_var_len)
    if occ is not None:
        raise CounterexampleError(f"{spec} contains {p}", occ)
    return AvoidanceEvidence(str(spec), len(host), p, mode, max_var_len)


CONSTRUCTIONS: dict[Mode, WordSpec] = {Mode.MORPHIC: THM3_WORD, Mode.ANTIMORPHIC: THM4_WORD}


def verify_construction(which: Mode, prefix_len: int, max_var_len: int) -> AvoidanceEvidence:
    """Bounded check that the ternary block-substitution word for ``which``
    avoids ``a t(a) a`` under all involutions of that mode."""
    which = Mode(which)
    return check_avoidance(CONSTRUCTIONS[which], prefix_len, ATA, which, max_var_len)


def is_square_free(w: Word) -> bool:
    """True when ``w`` has no factor ``uu``.

    A square of period ``p`` is a run of ``p`` consecutive positions ``i`` with
    ``w[i] == w[i + p]``.
    """
    a = np.frombuffer(w.symbols, dtype=np.uint8)
    n = len(a)
    for p in range(1, n // 2 + 1):
        eq = a[:-p] == a[p:]
        run = np.concatenate(([0], np.cumsum(eq, dtype=np.int64)))
        if np.any(run[p:] - run[:-p] == p):
            return False
    return True


def squarefree_witness(prefix_len: int) -> Word:
    w = realize_word(SQUAREFREE_WORD, prefix_len).prefix(prefix_len)
    if not is_square_free(w):
        raise AssertionError(f"{SQUAREFREE_WORD} prefix of length {prefix_len} has a square")
    return w


@dataclass
class DoubledLetterReport:
    prefix_len: int
    counts: dict[str, int]
    unchecked_tail: int
    violations: list[int] = field(default_factory=list)


def doubled_letter_audit(
    prefix_len: int,
    spec: WordSpec = THM3_WORD,
    allowed: Iterable[str] = ("aac", "ccb"),
) -> DoubledLetterReport:
    """Check that every doubled letter is followed as ``allowed`` says.

    Raises :class:`AuditViolation` at the first offending position.  A pair in
    the last two positions has no follower and is counted as unchecked.
    """
    if prefix_len < 3:
        raise ValueError("prefix_len must be at least 3")
    w = str(realize_word(spec, prefix_len).prefix(prefix_len))
    allowed = tuple(allowed)
    counts = {f"{a[:2]}->{a[2]}": 0 for a in allowed}
    tail = 0
    for i in range(len(w) - 1):
        if w[i] != w[i + 1]:
            continue
        if i + 2 >= len(w):
            tail += 1
            continue
        f = w[i : i + 3]
        if f not in allowed:
            raise AuditViolation(i + 1, f)
        counts[f"{f[:2]}->{f[2]}"] += 1
    return DoubledLetterReport(len(w), counts, tail)


PROVEN = "PROVEN-UNAVOIDABLE"
AVOIDABLE = "EVIDENCE-AVOIDABLE"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class IndexRow:
    k: int
    mode: Mode
    status: str
    detail: str

    def __str__(self):
        return f"k={self.k} mode={self.mode} {self.status} {self.detail}"


def index_report(
    p: Pattern,
    max_k: int,
    witnesses: Iterable[WordSpec],
    prover_depth: int,
    max_var_len: int,
    witness_len: int = 10**4,
    modes: Iterable[Mode] = (Mode.MORPHIC, Mode.ANTIMORPHIC),
) -> list[IndexRow]:
    """One row per (alphabet size, mode): a certificate gives an exact lower
    bound on the avoidance index, a witness word over k letters that avoids the
    pattern gives bounded evidence for an upper bound."""
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    words = [(spec, realize_word(spec, witness_len).prefix(witness_len)) for spec in witnesses]
    rows = []
    for k in range(1, max_k + 1):
        for mode in modes:
            mode = Mode(mode)
            res = symmetry_reduced_prove(p, k, mode, prover_depth)
            if isinstance(res, UnavoidabilityCertificate):
                rows.append(IndexRow(k, mode, PROVEN, f"depth={res.depth}"))
                continue
            status, detail = INCONCLUSIVE, f"survivor of length {len(res.witness)}"
            for spec, w in words:
                if w.alphabet.size != k:
                    continue
                if find_occurrence_any_involution(w, p, mode, max_var_len) is None:
                    status = AVOIDABLE
                    detail = f"{spec} prefix={len(w)} max_var_len={max_var_len}"
                    break
            log.info("index %s k=%d %s: %s", p, k, mode, status)
            rows.append(IndexRow(k, mode, status, detail))
    return rows
