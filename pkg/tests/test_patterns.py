import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from thetapat.involutions import Involution, Mode, enumerate_involutions
from thetapat.patterns import (
    Pattern,
    PatternSyntaxError,
    Term,
    build_instance,
    erase_theta,
    find_occurrence,
    find_occurrence_any_involution,
    iter_occurrences,
    occurs_ending_at,
    parse_pattern,
    split_theta,
    theta_complement,
    theta_free_regex,
)
from thetapat.words import THUE_MORSE, Alphabet, realize_word

AB = Alphabet("ab")
SWAP = Involution.from_swaps(AB, "ab", Mode.MORPHIC)
ANTI_SWAP = Involution.from_swaps(AB, "ab", Mode.ANTIMORPHIC)


def test_parse_examples():
    assert parse_pattern("a t(a) a").terms == (Term(0), Term(0, True), Term(0))
    assert parse_pattern("a a t(a) b").terms == (Term(0), Term(0), Term(0, True), Term(1))
    assert parse_pattern("at(a)a") == parse_pattern("a t(a) a")
    assert str(parse_pattern("b a b")) == "b a b"
    assert parse_pattern("b a b").terms == (Term(0), Term(1), Term(0))


@pytest.mark.parametrize("text,col", [("t(", 3), ("", 1), ("a (a)", 3), ("t(a", 4), ("a A", 3), ("t(ab)", 4)])
def test_parse_errors(text, col):
    with pytest.raises(PatternSyntaxError) as e:
        parse_pattern(text)
    assert e.value.position == col - 1


def test_pattern_invariants():
    with pytest.raises(ValueError):
        Pattern(())
    with pytest.raises(ValueError):
        Pattern((Term(1), Term(0)))


def test_build_instance_examples():
    p = parse_pattern("a t(a)")
    assert str(build_instance(p, {"a": AB.word("ab")}, SWAP)) == "abba"
    # t(ab) = t(b) t(a) = ab under the antimorphic swap
    p = parse_pattern("a a t(a)")
    assert str(build_instance(p, {"a": AB.word("ab")}, ANTI_SWAP)) == "ababab"
    xyz = Alphabet("xyz")
    assert str(build_instance(parse_pattern("a"), {"a": xyz.word("xyz")})) == "xyz"
    with pytest.raises(KeyError):
        build_instance(parse_pattern("a b"), {"a": AB.word("a")}, SWAP)
    with pytest.raises(ValueError):
        build_instance(parse_pattern("a"), {"a": AB.word("")}, SWAP)


def test_pattern_language_sample():
    # the short members of the language of a t(a) under the morphic swap
    p = parse_pattern("a t(a)")
    got = {str(build_instance(p, {"a": AB.word(u)}, SWAP)) for u in ["a", "b", "aa", "ab", "ba", "bb"]}
    assert got == {"ab", "ba", "aabb", "abba", "baab", "bbaa"}


def test_find_occurrence_examples():
    p = parse_pattern("a t(a) a")
    occ = find_occurrence(AB.word("abbaab"), p, SWAP, 2)
    assert occ.position == 1 and str(occ.assignment["a"]) == "ab"
    assert str(occ) == "pos=1 theta=morphic:(ab) a=ab"
    occ = find_occurrence(AB.word("aaa"), p, Involution.identity(AB), 1)
    assert str(occ.assignment["a"]) == "a"
    tm = realize_word(THUE_MORSE, 64).prefix(64)
    assert find_occurrence(tm, parse_pattern("a a a"), Involution.identity(AB), 21) is None


def test_find_any_involution_examples():
    p = parse_pattern("a t(a) a")
    occ = find_occurrence_any_involution(AB.word("abbaab"), p, Mode.MORPHIC, 2)
    assert occ.involution == SWAP
    host = AB.word("a" * 16)
    occ = find_occurrence_any_involution(host, parse_pattern("a t(a)"), Mode.MORPHIC, 8)
    assert occ.involution.is_identity_perm
    assert find_occurrence_any_involution(host, parse_pattern("a t(a)"), Mode.MORPHIC, 8, [SWAP]) is None
    occ = find_occurrence_any_involution(AB.word("ababab"), parse_pattern("a a t(a)"), Mode.ANTIMORPHIC, 3)
    assert str(occ.assignment["a"]) == "ab"


def test_canonical_order_prefers_position_then_lengths():
    host = AB.word("abab" + "aa")
    occs = list(iter_occurrences(host, parse_pattern("a b a"), Involution.identity(AB), 3))
    keys = [(o.position, o.lengths) for o in occs]
    assert keys == sorted(keys)
    assert keys[0] == (1, (1, 1))


def test_transforms():
    p = parse_pattern("a a t(a) b")
    assert str(theta_complement(p)) == "t(a) t(a) a t(b)"
    assert str(theta_complement(parse_pattern("a"))) == "t(a)"
    assert str(erase_theta(parse_pattern("a t(a) a"))) == "a a a"
    assert str(split_theta(parse_pattern("a t(a) a"))) == "a b a"
    assert str(erase_theta(parse_pattern("a b"))) == "a b"
    assert split_theta(parse_pattern("t(a) a")).terms == (Term(0), Term(1))


patterns = st.sampled_from(oracles.all_normalized_patterns(3)).map(parse_pattern)


@given(patterns)
def test_complement_involutive(p):
    assert theta_complement(theta_complement(p)) == p


@st.composite
def host_and_involution(draw, max_len=14):
    k = draw(st.integers(1, 3))
    alphabet = Alphabet.first(k)
    mode = draw(st.sampled_from(list(Mode)))
    theta = draw(st.sampled_from(enumerate_involutions(alphabet, mode)))
    host = alphabet.word(draw(st.text(alphabet=alphabet.letters, max_size=max_len)))
    return host, theta


@given(host_and_involution(), patterns, st.integers(1, 6))
def test_occurrences_reconstruct(hi, p, bound):
    host, theta = hi
    for occ in iter_occurrences(host, p, theta, bound):
        assert occ.instance == build_instance(p, occ.assignment, theta)
        assert host.factor(occ.position, len(occ.instance)) == occ.instance
        assert all(1 <= len(u) <= bound for u in occ.assignment.values())


@given(host_and_involution(), patterns, st.integers(1, 5), st.integers(0, 4))
def test_bound_monotone(hi, p, bound, extra):
    host, theta = hi
    if find_occurrence(host, p, theta, bound) is not None:
        assert find_occurrence(host, p, theta, bound + extra) is not None


unary = st.lists(st.booleans(), min_size=1, max_size=5).map(
    lambda wraps: Pattern(tuple(Term(0, w) for w in wraps))
)


@settings(max_examples=300)
@given(host_and_involution(max_len=40), unary, st.integers(1, 15))
def test_unary_fast_path_matches_generic(hi, p, bound):
    host, theta = hi
    fast = find_occurrence(host, p, theta, bound)
    slow = find_occurrence(host, p, theta, bound, fast=False)
    if fast is None or slow is None:
        assert fast is slow
    else:
        assert (fast.position, fast.assignment) == (slow.position, slow.assignment)


@settings(max_examples=300)
@given(st.text(alphabet="ab", max_size=30), st.sampled_from(
    ["a a", "a b a", "a a b", "a b a b a", "a b b a", "a b c a b c", "a a a"]), st.integers(1, 8))
def test_regex_oracle_matches_generic(text, ptext, bound):
    p = parse_pattern(ptext)
    m = theta_free_regex(p, bound).search(text)
    occ = find_occurrence(AB.word(text), p, Involution.identity(AB), bound, fast=False)
    if m is None:
        assert occ is None
    else:
        lengths = tuple(len(m.group(name)) for name in p.names)
        assert (occ.position, occ.lengths) == (m.start() + 1, lengths)


@given(host_and_involution(), patterns, st.integers(1, 5))
def test_incremental_check_matches_rescan(hi, p, bound):
    host, theta = hi
    s = host.symbols
    seen_before = False
    for n in range(1, len(s) + 1):
        now = find_occurrence(host.prefix(n), p, theta, bound) is not None
        assert now == (seen_before or occurs_ending_at(s[:n], p, [theta], n, bound))
        seen_before = now


@given(host_and_involution(max_len=10), patterns)
def test_complement_symmetry(hi, p):
    host, theta = hi
    mode = theta.mode
    a = find_occurrence_any_involution(host, p, mode, 5) is not None
    b = find_occurrence_any_involution(host, theta_complement(p), mode, 5) is not None
    assert a == b


@given(host_and_involution(max_len=12), patterns)
def test_sandwich(hi, p):
    host, theta = hi
    ident = Involution.identity(host.alphabet, Mode.MORPHIC)
    if find_occurrence(host, erase_theta(p), ident, 6) is not None:
        assert find_occurrence(host, p, ident, 6) is not None
    if find_occurrence(host, split_theta(p), ident, 6) is None:
        assert find_occurrence_any_involution(host, p, theta.mode, 6) is None


@pytest.mark.parametrize("mode", ["morphic", "antimorphic"])
def test_matcher_agrees_with_oracle_small(mode):
    tables = {}
    for text in oracles.all_normalized_patterns(3):
        terms = oracles.pattern_terms(text)
        tables[text] = [
            oracles.instance_table(terms, "ab", perm, mode, 4, 7) for perm in oracles.involutive_perms("ab")
        ]
    invs = enumerate_involutions(AB, Mode(mode))
    for host_text in oracles.words_up_to("ab", 7):
        host = AB.word(host_text)
        for text, tabs in tables.items():
            want = oracles.first_occurrence(host_text, tabs)
            occ = find_occurrence_any_involution(host, parse_pattern(text), Mode(mode), 4)
            got = None if occ is None else (invs.index(occ.involution), occ.position, occ.lengths)
            assert got == want, (host_text, text)
