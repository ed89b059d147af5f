import itertools

import pytest
from hypothesis import given

from intensio.sexpr import ParseError
from intensio.types import (E, T, Fun, Sense, degree, depth, fun, is_reduced, parse_type,
                            print_type, reduce_type, small_types)

from conftest import TYPES


def brute_degree(tp):
    # written against the tuple shape so it shares nothing with the library
    if tp in ("e", "t"):
        return 1
    if tp[0] == "'":
        return brute_degree(tp[1])
    a, b = brute_degree(tp[0]), brute_degree(tp[1])
    return a + 1 if a >= b else b


def as_tuple(tp):
    if tp == E:
        return "e"
    if tp == T:
        return "t"
    if isinstance(tp, Sense):
        return ("'", as_tuple(tp.inner))
    return (as_tuple(tp.domain), as_tuple(tp.codomain))


@pytest.mark.parametrize("text,deg", [
    ("e", 1), ("t", 1),
    ("(e (e t))", 2), ("(t (e t))", 2),
    ("((e t) e)", 3), ("((e t) t)", 3),
    ("(t' t)'", 2),
])
def test_degree_table(text, deg):
    assert degree(parse_type(text)) == deg


def test_degree_agrees_with_brute_force_on_small_types():
    for tp in small_types(3):
        assert degree(tp) == brute_degree(as_tuple(tp))


@given(TYPES, TYPES)
def test_ordering_facts(a, b):
    assert degree(a) < degree(Fun(a, b))
    assert degree(b) <= degree(Fun(a, b))
    assert degree(Sense(a)) == degree(a)


def test_reduce_type():
    assert reduce_type(Sense(Fun(E, T))) == Fun(Sense(E), Sense(T))
    assert reduce_type(E) == E
    assert reduce_type(Sense(Sense(E))) == Sense(Sense(E))
    assert reduce_type(Sense(Sense(Fun(E, T)))) == Fun(Sense(Sense(E)), Sense(Sense(T)))


@given(TYPES)
def test_reduce_type_is_normal_and_idempotent(tp):
    r = reduce_type(tp)
    assert is_reduced(r)
    assert reduce_type(r) == r
    assert degree(r) >= 1


def test_parse_grammar_cases():
    assert parse_type("((e t) e)") == Fun(Fun(E, T), E)
    assert parse_type("t'") == Sense(T)
    assert parse_type(" ( e  t ) ' ") == Sense(Fun(E, T))
    assert parse_type("((e t)' t)") == Fun(Sense(Fun(E, T)), T)


def test_parse_error_offset():
    with pytest.raises(ParseError) as info:
        parse_type("(e")
    assert info.value.offset == 2


@pytest.mark.parametrize("bad", ["", "x", "(e t", "(e t) e", "'", "(e)"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_type(bad)


@given(TYPES)
def test_print_parse_roundtrip(tp):
    assert parse_type(print_type(tp)) == tp


def test_depth_and_fun_helper():
    assert depth(E) == 0
    assert depth(Sense(Fun(E, T))) == 2
    assert fun(E, E, T) == Fun(E, Fun(E, T))
    with pytest.raises(ValueError):
        fun(E)


def test_small_types_counts():
    # 2 base types, 2 primes + 4 arrows, then 6 + 2*4 + 4*2... counted independently
    sizes = {0: 2}
    for n in range(1, 4):
        sizes[n] = sizes[n - 1] + sum(sizes[i] * sizes[n - 1 - i] for i in range(n))
    assert len(small_types(3)) == sum(sizes.values())
    assert len(set(small_types(3))) == len(small_types(3))


def test_depth_three_is_exhaustive():
    # every type of depth <= 3, built level by level
    levels = [[E, T]]
    for _ in range(3):
        prev = [tp for lv in levels for tp in lv]
        new = [Sense(a) for a in prev] + [Fun(a, b) for a, b in itertools.product(prev, prev)]
        levels.append([tp for tp in new if depth(tp) == len(levels)])
    every = [tp for lv in levels for tp in lv]
    assert len(every) == 5552
    for tp in every:
        if isinstance(tp, Fun):
            assert degree(tp.domain) < degree(tp) and degree(tp.codomain) <= degree(tp)
