import json

import pytest
from hypothesis import given, strategies as st

from alexcircle.invariants import (
    InvariantTuple,
    SeifertPair,
    TupleArityError,
    TupleSyntaxError,
    is_valid,
    parse_tuple,
    serialize_tuple,
    singular_point_count,
    tuple_from_json,
    tuple_to_json,
    validate,
)

from conftest import valid_tuples


def test_parse_suspension_pair():
    t = parse_tuple("(0;(o,0,0,0);[];[2,2])")
    assert (t.b, t.eps, t.g, t.f, t.t) == (0, "o", 0, 0, 0)
    assert t.pairs == ()
    assert t.singular == (2, 2)


def test_parse_lens_like():
    t = parse_tuple("(1;(o,0,0,0);[(3,1)];[])")
    assert t.b == 1
    assert t.pairs == (SeifertPair(3, 1),)
    assert t.s == 0


def test_parse_nonorientable():
    t = parse_tuple("(0;(n,1,1,0);[(2,1),(5,2)];[4])")
    assert (t.eps, t.g, t.f, t.t) == ("n", 1, 1, 0)
    assert t.pairs == ((2, 1), (5, 2))
    assert t.singular == (4,)


def test_parse_ignores_whitespace():
    assert parse_tuple(" ( -3 ; ( o , 2 , 0 , 0 ) ; [ ( 5 , 2 ) ] ; [ ] ) ") == InvariantTuple(
        -3, "o", 2, 0, 0, [(5, 2)], []
    )


@pytest.mark.parametrize(
    "text, pos",
    [
        ("(0;(x,0,0,0);[];[])", 4),
        ("(0;(o,0,0,0);[];[2,])", 19),
        ("(0;(o,0,0,0);[];[]) junk", 20),
        ("(0;(o,0,0);[];[])", 9),
    ],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(TupleSyntaxError) as exc:
        parse_tuple(text)
    assert exc.value.position == pos


@pytest.mark.parametrize("text", ["(0;(o,0,0,0);[])", "(0;(o,0,0,0))", "(0)"])
def test_missing_part_is_arity_error(text):
    with pytest.raises(TupleArityError):
        parse_tuple(text)


def test_serialize():
    assert serialize_tuple(InvariantTuple(0, "o", 0, 0, 0, [], [2, 2])) == "(0;(o,0,0,0);[];[2,2])"
    t = InvariantTuple(0, "o", 1, 0, 0, [(5, 2), (3, 1)], [])
    assert serialize_tuple(t) == "(0;(o,1,0,0);[(3,1),(5,2)];[])"
    assert serialize_tuple(InvariantTuple(0, "o", 0, 1, 0, [], [4, 2])).endswith("[2,4])")


@given(valid_tuples())
def test_text_round_trip(t):
    assert parse_tuple(serialize_tuple(t)) == t


@given(valid_tuples())
def test_json_round_trip(t):
    obj = json.loads(json.dumps(tuple_to_json(t)))
    assert tuple_from_json(obj) == t
    assert obj["pairs"] == sorted(obj["pairs"])
    assert obj["singular"] == sorted(obj["singular"])


def _rules(t):
    return {v.rule for v in validate(t).violations}


def test_validate_examples():
    assert "r_even" in _rules(parse_tuple("(0;(o,0,0,0);[];[3])"))
    assert "gcd" in _rules(parse_tuple("(0;(o,0,0,0);[(4,2)];[])"))
    assert "b_boundary" in _rules(parse_tuple("(1;(o,0,1,0);[];[])"))


def test_validate_reports_every_violation():
    report = validate(parse_tuple("(2;(n,0,1,0);[(4,2),(1,1)];[3])"))
    assert not report.ok
    assert {"genus_nonorientable", "gcd", "alpha_min", "beta_range", "r_even", "b_boundary"} <= {
        v.rule for v in report.violations
    }


def test_closed_manifold_tuples_are_legal():
    assert is_valid(parse_tuple("(7;(o,0,0,0);[];[])"))
    assert is_valid(parse_tuple("(-4;(n,2,0,0);[(3,1)];[])"))


_MUTATIONS = [
    ("g", lambda t: t.replace(g=-1), "genus_nonneg"),
    ("f", lambda t: t.replace(f=-1), "f_nonneg"),
    ("t", lambda t: t.replace(t=-1), "t_nonneg"),
    ("eps", lambda t: t.replace(eps="x"), "eps"),
    ("odd r", lambda t: t.replace(singular=t.singular + (5,)), "r_even"),
    ("zero r", lambda t: t.replace(singular=t.singular + (0,)), "r_positive"),
    ("alpha", lambda t: t.replace(pairs=t.pairs + ((1, 0),)), "alpha_min"),
    ("beta", lambda t: t.replace(pairs=t.pairs + ((3, 3),)), "beta_range"),
    ("gcd", lambda t: t.replace(pairs=t.pairs + ((6, 4),)), "gcd"),
    ("b", lambda t: t.replace(b=1, f=t.f + 1), "b_boundary"),
]


@given(valid_tuples(), st.sampled_from(_MUTATIONS))
def test_single_mutation_is_caught(t, mutation):
    _, mutate, rule = mutation
    assert validate(t).ok
    assert rule in _rules(mutate(t))


@pytest.mark.parametrize("singular, expected", [((2, 2), 4), ((), 0), ((4, 2, 2), 8)])
def test_singular_point_count(singular, expected):
    assert singular_point_count(InvariantTuple(0, "o", 0, 0, 0, [], singular)) == expected


@given(valid_tuples())
def test_singular_point_count_even(t):
    assert singular_point_count(t) % 2 == 0
