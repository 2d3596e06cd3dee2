"""Alignment primitives against brute-force oracles and fixed fixtures."""

from __future__ import annotations

import functools
import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lemscript.alignment import (
    DELETE,
    INSERT,
    MATCH,
    REPLACE,
    LcsResult,
    levenshtein_align,
    longest_common_substring,
    min_script_align,
    replay,
    source_of,
)


# --- independent oracles -------------------------------------------------

def lcs_by_enumeration(a: str, b: str) -> LcsResult:
    """All-substrings oracle with the same tie rule."""
    best = LcsResult(0, 0, 0)
    for i in range(len(a)):
        for j in range(len(b)):
            k = 0
            while i + k < len(a) and j + k < len(b) and a[i + k] == b[j + k]:
                k += 1
            if k > best.length:
                best = LcsResult(i, j, k)
    return best


@functools.lru_cache(maxsize=None)
def distance_recursive(a: str, b: str) -> int:
    """Textbook recursive Levenshtein distance, independent of the DP."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(
        distance_recursive(a[1:], b[1:]) + (a[0] != b[0]),
        distance_recursive(a[1:], b) + 1,
        distance_recursive(a, b[1:]) + 1,
    )


def edit_count(ops) -> int:
    return sum(1 for op in ops if op.kind != MATCH)


WORDS = st.text(alphabet="abcdабвгßİı", min_size=0, max_size=8)


# --- longest common substring --------------------------------------------

def test_lcs_examples():
    assert longest_common_substring("cats", "cat") == (0, 0, 3)
    assert longest_common_substring("did", "do") == (0, 0, 1)
    assert longest_common_substring("xyz", "абв") == (0, 0, 0)
    assert longest_common_substring("", "abc") == (0, 0, 0)


def test_lcs_within_bound_matches_oracle():
    strings = ["".join(p) for n in range(4) for p in itertools.product("abc", repeat=n)]
    for a in strings:
        for b in strings:
            got = longest_common_substring(a, b)
            want = lcs_by_enumeration(a, b)
            assert got == want, (a, b)
            assert a[got.start_in_a : got.start_in_a + got.length] == (
                b[got.start_in_b : got.start_in_b + got.length]
            )


@given(WORDS, WORDS)
def test_lcs_property(a, b):
    got = longest_common_substring(a, b)
    want = lcs_by_enumeration(a, b)
    assert got.length == want.length
    assert got == want


# --- levenshtein_align ----------------------------------------------------

def test_levenshtein_fixtures():
    assert levenshtein_align("did", "do") == [
        (MATCH, "d", "d"),
        (REPLACE, "i", "o"),
        (DELETE, "d", None),
    ]
    assert levenshtein_align("", "ab") == [(INSERT, None, "a"), (INSERT, None, "b")]
    assert levenshtein_align("cats", "cat") == [
        (MATCH, "c", "c"),
        (MATCH, "a", "a"),
        (MATCH, "t", "t"),
        (DELETE, "s", None),
    ]


def test_levenshtein_small_universe_matches_distance_oracle():
    strings = ["".join(p) for n in range(4) for p in itertools.product("abcd", repeat=n)]
    for a in strings:
        for b in strings:
            ops = levenshtein_align(a, b)
            assert edit_count(ops) == distance_recursive(a, b), (a, b)
            assert source_of(ops) == a
            assert replay(ops) == b


def test_levenshtein_sampled_length6_universe():
    rng = random.Random(20240501)
    alphabet = "abcd"
    for _ in range(4000):
        a = "".join(rng.choices(alphabet, k=rng.randint(0, 6)))
        b = "".join(rng.choices(alphabet, k=rng.randint(0, 6)))
        for tie in (False, True):
            ops = levenshtein_align(a, b, delete_before_replace=tie)
            assert edit_count(ops) == distance_recursive(a, b)
            assert source_of(ops) == a
            assert replay(ops) == b


def test_levenshtein_deterministic():
    first = levenshtein_align("переход", "переходы")
    for _ in range(3):
        assert levenshtein_align("переход", "переходы") == first


@given(WORDS, WORDS)
def test_levenshtein_replay_property(a, b):
    ops = levenshtein_align(a, b)
    assert source_of(ops) == a
    assert replay(ops) == b
    assert edit_count(ops) == distance_recursive(a, b)


def test_tie_order_flag_changes_only_tied_choices():
    default = levenshtein_align("did", "od")
    flipped = levenshtein_align("did", "od", delete_before_replace=True)
    assert edit_count(default) == edit_count(flipped) == 2
    assert default != flipped
    assert default[0].kind == REPLACE
    assert flipped[0].kind == DELETE


# --- min_script_align -----------------------------------------------------

def test_min_script_fixtures():
    assert min_script_align("id", "o") == [
        (DELETE, "i", None),
        (DELETE, "d", None),
        (INSERT, None, "o"),
    ]
    assert min_script_align("a", "a") == [(MATCH, "a", "a")]
    assert min_script_align("ab", "b") == [(DELETE, "a", None), (MATCH, "b", "b")]


def test_min_script_never_replaces_and_replays():
    rng = random.Random(7)
    for _ in range(2000):
        a = "".join(rng.choices("abcd", k=rng.randint(0, 6)))
        b = "".join(rng.choices("abcd", k=rng.randint(0, 6)))
        ops = min_script_align(a, b)
        assert all(op.kind != REPLACE for op in ops)
        assert source_of(ops) == a
        assert replay(ops) == b


def test_min_script_cost_is_minimal_by_enumeration():
    """Compare against exhaustive recursion over MATCH/DELETE/INSERT."""

    @functools.lru_cache(maxsize=None)
    def best_cost(a: str, b: str) -> int:
        if not a:
            return 2 * len(b)
        if not b:
            return len(a)
        options = [1 + best_cost(a[1:], b), 2 + best_cost(a, b[1:])]
        if a[0] == b[0]:
            options.append(1 + best_cost(a[1:], b[1:]))
        return min(options)

    def cost(ops) -> int:
        table = {MATCH: 1, DELETE: 1, INSERT: 2}
        return sum(table[op.kind] for op in ops)

    strings = ["".join(p) for n in range(4) for p in itertools.product("ab", repeat=n)]
    for a in strings:
        for b in strings:
            assert cost(min_script_align(a, b)) == best_cost(a, b), (a, b)


def test_min_script_rejects_non_positive_costs():
    with pytest.raises(ValueError):
        min_script_align("a", "b", insert_cost=0)
    with pytest.raises(ValueError):
        min_script_align("a", "b", delete_cost=-1)
