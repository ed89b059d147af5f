import pytest
from hypothesis import given, strategies as st

from intensio.lang import EApp, Eq, Exists, Forall, ONE, Pres, Var, bound_vars
from intensio.schema import (CONCEPT_COMPREHENSION, TYPED_CHOICE, TYPED_COMPREHENSION,
                             MalformedInstance, SchemaInstance, choice_to_comprehension,
                             classify, concept_to_typed, explain, parse_instance,
                             print_instance, typed_to_concept)
from intensio.types import E, T, Fun, Sense, degree
from intensio.walkthrough import (builder_instance, constant_instance, diagonal_instance,
                                  smuggled_instance)

from conftest import types_upto

ET = Fun(E, T)


def triples(verdict):
    return [(v.variable, v.role, v.degree, v.bound) for v in verdict.violations]


def test_diagonal_is_impredicative():
    v = classify(diagonal_instance())
    assert not v.predicative
    assert triples(v) == [("f", "bound", 2, 2), ("iota", "parameter", 3, 2)]
    assert v.configuration == "NotApplicable"


def test_constant_map_is_predicative():
    v = classify(constant_instance())
    assert v.predicative and v.configuration == "First"
    assert v.split == {"n": 1, "low": ["z"], "top": []}


def test_builder_is_predicative():
    assert classify(builder_instance()).predicative


def test_smuggled_rejected_on_parameter_alone():
    v = classify(smuggled_instance())
    assert triples(v) == [("D", "parameter", 3, 2)]


def test_choice_second_configuration():
    x, y, p = Var("x", E), Var("y", ET), Var("p", ET)
    inst = SchemaInstance(TYPED_CHOICE, Eq(y, p), x, y, (p,))
    v = classify(inst)
    assert v.predicative and v.configuration == "Second"
    assert v.split == {"n": 1, "low": [], "top": ["p"]}


def test_implicit_index_counted():
    # a presentation at a high type drags its index into the parameter check
    x, s = Var("x", E), Var("s", Sense(Fun(ET, T)))
    g = Var("g", Fun(ET, T))
    inst = SchemaInstance(CONCEPT_COMPREHENSION, Exists(g, Pres(Fun(ET, T), s, g)), x, None, (s,))
    v = classify(inst)
    roles = {(t[1], t[0]) for t in triples(v)}
    assert ("implicit", "pres[((e t) t)]") in roles
    assert ("bound", "g") in roles


def test_explain_text():
    text = explain(classify(diagonal_instance()))
    assert "bound variable f has degree 2, not < 2" in text
    assert "parameter iota has degree 3 > 2" in text
    assert "not applicable" in text
    assert "predicative" in explain(classify(constant_instance())).splitlines()[1]


def test_malformed_instances():
    x, y, z = Var("x", E), Var("y", E), Var("z", E)
    with pytest.raises(MalformedInstance):
        classify(SchemaInstance(TYPED_COMPREHENSION, Eq(y, z), x, y, ()))  # stray z
    with pytest.raises(MalformedInstance):
        classify(SchemaInstance(CONCEPT_COMPREHENSION, Eq(x, x), x, y, ()))
    h = Var("h", ET)
    with pytest.raises(MalformedInstance):
        classify(SchemaInstance(CONCEPT_COMPREHENSION, Eq(EApp(h, x), ONE), x, None, (h,)))
    with pytest.raises(MalformedInstance):
        classify(SchemaInstance("nonsense", Eq(x, x), x, None, ()))


def test_rewrites_preserve_verdict_shape():
    inst = diagonal_instance()
    typed = concept_to_typed(inst)
    assert typed.kind == TYPED_COMPREHENSION and typed.y.type == T
    assert classify(typed).target_degree == classify(inst).target_degree
    back = typed_to_concept(typed)
    assert back.kind == CONCEPT_COMPREHENSION
    assert choice_to_comprehension(
        SchemaInstance(TYPED_CHOICE, Eq(Var("y", E), Var("x", E)), Var("x", E), Var("y", E), ())
    ).kind == TYPED_COMPREHENSION


@pytest.mark.parametrize("build", [diagonal_instance, constant_instance, builder_instance,
                                   smuggled_instance])
def test_instance_file_roundtrip(build):
    inst = build()
    assert parse_instance(print_instance(inst)) == inst


@given(types_upto(3), types_upto(3), st.lists(types_upto(3), max_size=3), types_upto(3))
def test_classify_matches_definition(a, b, ptypes, btype):
    x, y = Var("x", a), Var("y", b)
    params = tuple(Var(f"p{i}", tp) for i, tp in enumerate(ptypes))
    w = Var("w", btype)
    inst = SchemaInstance(TYPED_COMPREHENSION, Forall(w, Eq(w, w)), x, y, params)
    v = classify(inst)
    top = degree(Fun(a, b))
    expect = degree(btype) < top and all(degree(p.type) <= top for p in params)
    assert v.predicative == expect
    if expect:
        assert v.configuration == ("First" if degree(a) >= degree(b) else "Second")
        assert sorted(v.split["low"] + v.split["top"]) == sorted(p.name for p in params)
