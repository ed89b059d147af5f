import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from intensio.lang import EApp, Eq, Exists, Forall, IApp, ONE, Pres, Rep, Var, ZERO
from intensio.models import (Atom, CardinalityOverflow, Frame, FrameError, Graph, ONE_V, TooLarge,
                             Unpopulated, ZERO_V, count, eval_formula, eval_term,
                             frame_from_json, graph_of, kaplan_report, obj, random_custom_frame,
                             render_count, value_from_json, value_to_json, world)
from intensio.types import E, T, Fun, Sense, parse_type, small_types

ET = Fun(E, T)
PROP = Sense(T)


def test_standard_concepts():
    frame = Frame.standard(2)
    concepts = frame.materialize(ET)
    assert len(concepts) == 4
    assert concepts[0] == Graph([(obj(0), ZERO_V), (obj(1), ZERO_V)])
    assert len(set(concepts)) == 4


def test_kaplan_propositions():
    frame = Frame.kaplan(2, 2)
    props = frame.materialize(PROP)
    assert len(props) == 4
    assert all(p.args() == (world(0), world(1)) for p in props)


def test_cap_is_enforced():
    frame = Frame.standard(3)
    with pytest.raises(TooLarge) as info:
        frame.materialize(parse_type("(((e t) t) t)"))
    assert "2^256" in str(info.value)


def test_standard_senses_unpopulated():
    with pytest.raises(Unpopulated):
        Frame.standard(2).materialize(Sense(E))


def test_truth_type_size():
    assert Frame.standard(4).cardinality(T) == 2


def test_kaplan_fine_grained_branch():
    rep = kaplan_report(5, 1)
    assert rep.sizes["t'"] == 2
    assert not rep.fine_grained_possible
    assert rep.verdict.startswith("fine-grained fails")


def test_kaplan_chain_2_3():
    rep = kaplan_report(2, 3)
    assert rep.sizes == {"e": 2, "t'": 8, "(t' t)": 256, "(t' t)'": 2 ** 24}
    assert rep.chain_holds


def brute_count(frame, tp):
    return sum(1 for _ in frame.scan(tp))


@pytest.mark.parametrize("ne,nw", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_count_matches_enumeration(ne, nw):
    frame = Frame.kaplan(ne, nw)
    for tp in small_types(2):
        n = count("kaplan", ne, nw, tp)
        if n <= 5000:
            assert brute_count(frame, tp) == n == len(frame.materialize(tp))


def test_render_and_overflow():
    assert render_count(5) == 5
    assert render_count(2 ** 300) == "2^300"
    assert render_count(3 ** 40) == str(3 ** 40)
    with pytest.raises(CardinalityOverflow):
        count("kaplan", 20, 20, parse_type("((t' t)' t)"))


def test_least_is_first():
    frame = Frame.kaplan(2, 2)
    for tp in (E, T, ET, PROP, Fun(PROP, T)):
        assert frame.least(tp) == frame.materialize(tp)[0]


def test_canonical_order_sorted():
    frame = Frame.kaplan(2, 1)
    for tp in (ET, PROP, Fun(PROP, T), Fun(ET, E)):
        vals = frame.materialize(tp)
        assert [v.key for v in vals] == sorted(v.key for v in vals)


def test_presentation_at_base_world():
    frame = Frame.kaplan(2, 2)
    p = Graph([(world(0), ONE_V), (world(1), ZERO_V)])
    s = Var("s", PROP)
    assert eval_formula(frame, {"s": p}, Pres(T, s, ONE))
    assert not eval_formula(frame, {"s": p}, Pres(T, s, ZERO))


def test_trivial_identity():
    assert eval_formula(Frame.standard(1), {}, Eq(ZERO, ZERO))


def test_pointwise_iapp():
    frame = Frame.kaplan(2, 1)
    w0 = world(0)
    f = Graph([(obj(0), ONE_V), (obj(1), ZERO_V)])
    fp = Graph([(w0, f)])
    xp = Graph([(w0, obj(0))])
    rp = Graph([(w0, ONE_V)])
    env = {"f'": fp, "x'": xp, "r'": rp}
    vs = Var("f'", Sense(ET)), Var("x'", Sense(E)), Var("r'", PROP)
    assert eval_formula(frame, env, IApp(E, T, *vs))
    env["r'"] = Graph([(w0, ZERO_V)])
    assert not eval_formula(frame, env, IApp(E, T, *vs))


def test_quantifiers_and_application():
    frame = Frame.standard(3)
    g, x = Var("g", ET), Var("x", E)
    # some concept is true of everything, and not every concept is
    assert eval_formula(frame, {}, Exists(g, Forall(x, Eq(EApp(g, x), ONE))))
    assert not eval_formula(frame, {}, Forall(g, Forall(x, Eq(EApp(g, x), ONE))))


def test_rep_evaluates_through_nabla():
    frame = random_custom_frame(random.Random(4))
    x = Var("x", E)
    for v in frame.materialize(E):
        s = eval_term(frame, {"x": v}, Rep(x))
        assert frame.present(E, s) == (v,)


def test_value_json_roundtrip():
    frame = Frame.kaplan(2, 2)
    for tp in (E, T, ET, PROP, Fun(PROP, T)):
        for v in frame.materialize(tp)[:20]:
            assert value_from_json(json.loads(json.dumps(value_to_json(v)))) == v


@given(st.integers(0, 2 ** 32))
def test_random_custom_frames_roundtrip(seed):
    frame = random_custom_frame(random.Random(seed))
    again = frame_from_json(json.loads(json.dumps(frame.to_json())))
    for tp in (E, T, Sense(E), Sense(T), Sense(ET)):
        assert frame.materialize(tp) == again.materialize(tp)
    for s in frame.materialize(Sense(ET)):
        assert frame.present(ET, s) == again.present(ET, s)


def test_bad_frame_json():
    with pytest.raises(FrameError):
        frame_from_json({"E": 2})
    with pytest.raises(FrameError):
        frame_from_json({"kind": "spooky", "E": 2})


def test_custom_frame_needs_consistent_nabla():
    o0, o5 = obj(0), obj(5)
    with pytest.raises(FrameError):
        # the representation of o0 presents nothing
        Frame("custom", 1, domains={Sense(E): [o5]}, delta={E: {}}, nabla={E: {o0: o5}})


def test_graph_basics():
    g = graph_of(lambda x: ONE_V if x == obj(1) else ZERO_V, [obj(0), obj(1)])
    assert g(obj(1)) == ONE_V and obj(2) not in g
    assert str(g) == "{o0↦0, o1↦1}"
    assert Graph(reversed(g.pairs)) == g
    assert Atom("obj", 1) != Atom("world", 1)
