"""Frozen parameters and drivers for re-running every finite claim.

All constants live in ``PARAMETERS``; each target reads only from there.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from .involutions import Mode
from .patterns import parse_pattern
from .provers import (
    CONSTRUCTIONS,
    SQUAREFREE_WORD,
    AuditViolation,
    CounterexampleError,
    UnavoidabilityCertificate,
    check_avoidance,
    doubled_letter_audit,
    finite_block_check,
    prove_unavoidable,
    scan_confirm,
    squarefree_witness,
    verify_construction,
)

log = logging.getLogger(__name__)

MODES = (Mode.MORPHIC, Mode.ANTIMORPHIC)
THUE_MORSE_FORBIDDEN = ["xxx", "yyy", "xyxyx", "yxyxy"]

PARAMETERS: dict[str, dict] = {
    "lemma2": dict(
        claim="a t(a) a is unavoidable over 2 letters for morphic involutions",
        pattern="a t(a) a", k=2, mode="morphic", max_depth=10,
    ),
    "lemma3": dict(
        claim="a t(a) a is unavoidable over 2 letters for antimorphic involutions",
        pattern="a t(a) a", k=2, mode="antimorphic", max_depth=10,
    ),
    "thm3-finite": dict(
        claim="no u t(u) u with |u| < 7 in admissible words of {x,y}^6, x=aacb, y=accb (morphic)",
        blocks={"x": "aacb", "y": "accb"}, block_seq_len=6,
        forbidden=THUE_MORSE_FORBIDDEN, max_u_len=6, mode="morphic",
    ),
    "thm4-finite": dict(
        claim="no u t(u) u with |u| < 9 in admissible words of {x,y}^6, x=aabbc, y=aaccb (antimorphic)",
        blocks={"x": "aabbc", "y": "aaccb"}, block_seq_len=6,
        forbidden=THUE_MORSE_FORBIDDEN, max_u_len=8, mode="antimorphic",
    ),
    "thm3-evidence": dict(
        claim="Thue-Morse under a->aacb, b->accb avoids a t(a) a (morphic), bounded",
        mode="morphic", prefix_len=10**4, max_var_len=30,
    ),
    "thm4-evidence": dict(
        claim="Thue-Morse under a->aabbc, b->aaccb avoids a t(a) a (antimorphic), bounded",
        mode="antimorphic", prefix_len=10**4, max_var_len=30,
    ),
    "doubled-letters": dict(
        claim="in the aacb/accb word every doubled letter is aa->c or cc->b",
        prefix_len=10**5,
    ),
    "lemma-aata": dict(
        claim="a a t(a) has morphic and antimorphic index 3",
        patterns=["a a t(a)"], max_depth=16, witness_len=10**4, max_var_len=30,
    ),
    "lemma-taaa": dict(
        claim="t(a) a a has morphic and antimorphic index 3",
        patterns=["t(a) a a"], max_depth=16, witness_len=10**4, max_var_len=30,
    ),
    "corollary": dict(
        claim="t(a) a t(a), t(a) t(a) a and a t(a) t(a) have index 3 in both modes",
        patterns=["t(a) a t(a)", "t(a) t(a) a", "a t(a) t(a)"],
        max_depth=16, witness_len=10**4, max_var_len=30,
    ),
    "observation-lothaire": dict(
        claim="nine theta-free patterns are 2-unavoidable and 3-avoidable",
        patterns=["a a", "a a b", "b a a", "a a b a", "a b b a", "a a b b",
                  "a b a b", "a a b a a", "a a b a b"],
        max_depth=64, witness_len=10**4, max_var_len=30,
    ),
}


@dataclass
class TargetResult:
    target: str
    passed: bool
    lines: list[str] = field(default_factory=list)

    def __str__(self):
        head = f"{'PASS' if self.passed else 'FAIL'} {self.target}"
        return "\n".join([head] + [f"  {line}" for line in self.lines])


def _certify(pattern: str, k: int, mode: Mode, max_depth: int, res: TargetResult) -> None:
    cert = prove_unavoidable(parse_pattern(pattern), k, mode, max_depth)
    if not isinstance(cert, UnavoidabilityCertificate):
        res.passed = False
        res.lines.append(f"{pattern} k={k} {mode}: EXCEEDED witness={cert.witness}")
        return
    note = ""
    if cert.alphabet_size ** cert.depth <= 2**20:
        scan = scan_confirm(cert)
        res.passed &= scan.all_contain and scan.minimal
        note = f" scan={scan.words_checked} words all_contain={scan.all_contain} minimal={scan.minimal}"
    res.passed &= cert.bound_sufficient
    res.lines.append(
        f"{pattern} k={k} {mode}: certificate depth={cert.depth} nodes={cert.nodes_explored}{note}"
    )


def _evidence(pattern: str, spec, prefix_len: int, mode: Mode, bound: int, res: TargetResult) -> None:
    try:
        ev = check_avoidance(spec, prefix_len, parse_pattern(pattern), mode, bound)
    except CounterexampleError as e:
        res.passed = False
        res.lines.append(f"{pattern} k=3 {mode}: CONTAINS {e.occurrence}")
        return
    res.lines.append(
        f"{pattern} k=3 {mode}: avoids on {ev.word_spec} prefix={ev.prefix_len} max_var_len={bound}"
    )


def _prover_target(name: str) -> TargetResult:
    prm = PARAMETERS[name]
    res = TargetResult(name, True)
    _certify(prm["pattern"], prm["k"], Mode(prm["mode"]), prm["max_depth"], res)
    return res


def _finite_target(name: str) -> TargetResult:
    prm = PARAMETERS[name]
    rep = finite_block_check(
        prm["blocks"], prm["block_seq_len"], prm["forbidden"], prm["max_u_len"], Mode(prm["mode"])
    )
    res = TargetResult(name, not rep.solutions and rep.sequences_checked > 0)
    res.lines.append(
        f"sequences={rep.sequences_checked} max_u_len={rep.max_u_len} solutions={len(rep.solutions)}"
    )
    res.lines += [str(s) for s in rep.solutions]
    return res


def _construction_target(name: str) -> TargetResult:
    prm = PARAMETERS[name]
    try:
        ev = verify_construction(Mode(prm["mode"]), prm["prefix_len"], prm["max_var_len"])
    except CounterexampleError as e:
        return TargetResult(name, False, [f"CONTAINS {e.occurrence}"])
    return TargetResult(
        name, True, [f"{ev.word_spec} prefix={ev.prefix_len} max_var_len={ev.max_var_len}: no occurrence"]
    )


def _doubled_target(name: str) -> TargetResult:
    try:
        rep = doubled_letter_audit(PARAMETERS[name]["prefix_len"])
    except AuditViolation as e:
        return TargetResult(name, False, [str(e)])
    counts = " ".join(f"{k}:{v}" for k, v in rep.counts.items())
    return TargetResult(name, True, [f"prefix={rep.prefix_len} {counts} violations=0"])


def _index_target(name: str) -> TargetResult:
    prm = PARAMETERS[name]
    res = TargetResult(name, True)
    try:
        squarefree_witness(prm["witness_len"])
        res.lines.append(f"witness {SQUAREFREE_WORD} prefix={prm['witness_len']} is square-free")
    except AssertionError as e:
        return TargetResult(name, False, [str(e)])
    for pattern in prm["patterns"]:
        p = parse_pattern(pattern)
        modes = MODES[:1] if p.theta_free else MODES
        for mode in modes:
            _certify(pattern, 2, mode, prm["max_depth"], res)
        for mode in modes:
            # u t(u) u and its complement need the block constructions; the
            # others all contain a square
            unary_ata = p.nvars == 1 and len(p) == 3 and p.terms[0].theta == p.terms[2].theta != p.terms[1].theta
            spec = CONSTRUCTIONS[mode] if unary_ata else SQUAREFREE_WORD
            _evidence(pattern, spec, prm["witness_len"], mode, prm["max_var_len"], res)
    return res


TARGETS: dict[str, Callable[[str], TargetResult]] = {
    "lemma2": _prover_target,
    "lemma3": _prover_target,
    "thm3-finite": _finite_target,
    "thm4-finite": _finite_target,
    "thm3-evidence": _construction_target,
    "thm4-evidence": _construction_target,
    "doubled-letters": _doubled_target,
    "lemma-aata": _index_target,
    "lemma-taaa": _index_target,
    "corollary": _index_target,
    "observation-lothaire": _index_target,
}


def run_target(name: str) -> TargetResult:
    if name not in TARGETS:
        raise KeyError(f"unknown target {name!r}")
    log.info("running %s", name)
    return TARGETS[name](name)


def run_all() -> list[TargetResult]:
    return [run_target(name) for name in TARGETS]


def seed_table() -> str:
    lines = []
    for name, prm in PARAMETERS.items():
        rest = " ".join(f"{k}={v}" for k, v in prm.items() if k != "claim")
        lines.append(f"{name}: {prm['claim']}\n    {rest}")
    return "\n".join(lines)
