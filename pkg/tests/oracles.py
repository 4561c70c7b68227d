"""Brute-force reference implementations on plain ``str``.

Nothing here imports the package; these are the independent side of every
oracle-equivalence test.
"""
from __future__ import annotations

from itertools import permutations, product


def involutive_perms(letters: str) -> list[dict[str, str]]:
    """Every involutive permutation of ``letters`` as a dict, lexicographic by image."""
    out = []
    for img in permutations(letters):
        m = dict(zip(letters, img))
        if all(m[m[a]] == a for a in letters):
            out.append(m)
    out.sort(key=lambda m: [letters.index(m[a]) for a in letters])
    return out


def apply_theta(perm: dict[str, str], mode: str, u: str) -> str:
    if mode == "morphic":
        return "".join(perm[a] for a in u)
    out = ""
    for a in u:
        out = perm[a] + out
    return out


def words_up_to(letters: str, n: int) -> list[str]:
    return ["".join(t) for ell in range(1, n + 1) for t in product(letters, repeat=ell)]


def pattern_terms(text: str) -> list[tuple[str, bool]]:
    out = []
    i = 0
    while i < len(text):
        if text[i] == " ":
            i += 1
        elif text.startswith("t(", i):
            out.append((text[i + 2], True))
            i += 4
        else:
            out.append((text[i], False))
            i += 1
    return out


def instance_table(
    terms: list[tuple[str, bool]], letters: str, perm, mode: str, bound: int, max_total: int
) -> dict[str, tuple[int, ...]]:
    """Map every instance of length <= max_total to its smallest length vector."""
    names: list[str] = []
    for v, _ in terms:
        if v not in names:
            names.append(v)
    pool = words_up_to(letters, bound)
    table: dict[str, tuple[int, ...]] = {}

    def rec(i: int, asg: dict[str, str], used: int):
        if i == len(names):
            inst = "".join(apply_theta(perm, mode, asg[v]) if th else asg[v] for v, th in terms)
            key = tuple(len(asg[v]) for v in names)
            if inst not in table or key < table[inst]:
                table[inst] = key
            return
        mult = sum(1 for v, _ in terms if v == names[i])
        for u in pool:
            if used + mult * len(u) > max_total:
                continue
            asg[names[i]] = u
            rec(i + 1, asg, used + mult * len(u))
        asg.pop(names[i], None)

    rec(0, {}, 0)
    return table


def first_occurrence(host: str, tables: list[dict[str, tuple[int, ...]]]):
    """(involution index, 1-based position, length vector) of the canonical first
    occurrence, or None; ``tables`` is one instance table per involution."""
    for ti, table in enumerate(tables):
        for s in range(len(host)):
            hits = [table[host[s:e]] for e in range(s + 1, len(host) + 1) if host[s:e] in table]
            if hits:
                return ti, s + 1, min(hits)
    return None


def contains(host: str, text: str, letters: str, mode: str, bound: int) -> bool:
    terms = pattern_terms(text)
    for perm in involutive_perms(letters):
        table = instance_table(terms, letters, perm, mode, bound, len(host))
        if any(host[s:e] in table for s in range(len(host)) for e in range(s + 1, len(host) + 1)):
            return True
    return False


def has_cube(w: str) -> bool:
    n = len(w)
    return any(
        w[i : i + p] == w[i + p : i + 2 * p] == w[i + 2 * p : i + 3 * p]
        for p in range(1, n // 3 + 1)
        for i in range(n - 3 * p + 1)
    )


def has_square(w: str) -> bool:
    n = len(w)
    return any(
        w[i : i + p] == w[i + p : i + 2 * p] for p in range(1, n // 2 + 1) for i in range(n - 2 * p + 1)
    )


def all_normalized_patterns(max_terms: int) -> list[str]:
    """Every pattern text with at most ``max_terms`` terms, variables named by first use."""
    out = []
    for m in range(1, max_terms + 1):
        for seq in product(range(m), repeat=m):
            if any(seq[i] > max(seq[:i], default=-1) + 1 for i in range(m)):
                continue
            for wraps in product((False, True), repeat=m):
                out.append(
                    " ".join(f"t({'abcd'[v]})" if w else "abcd"[v] for v, w in zip(seq, wraps))
                )
    return out
