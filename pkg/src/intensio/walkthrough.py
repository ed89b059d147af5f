"""A narrated Markdown replay of the worked derivations.

Everything here is deterministic given the seed: random choices go through
one ``random.Random(seed)``, and every set is printed in canonical order.
"""

from __future__ import annotations

import json
import random

from . import axioms, paradox
from .lang import EApp, Eq, Exists, Forall, ONE, Var, ZERO, conj
from .models import Frame, kaplan_report, random_custom_frame, support, value_to_json
from .schema import (CONCEPT_COMPREHENSION, TYPED_COMPREHENSION, SchemaInstance, classify,
                     explain)
from .types import E, Fun, T, degree, parse_type

ET = Fun(E, T)
EE = Fun(E, E)


# -- the stock schema instances -------------------------------------------

def diagonal_instance() -> SchemaInstance:
    """``d(x) = 1`` iff some concept ``f`` with ``iota(f) = x`` has ``f(x) = 0``."""
    x, f, iota = Var("x", E), Var("f", ET), Var("iota", Fun(ET, E))
    matrix = Exists(f, conj(Eq(EApp(iota, f), x), Eq(EApp(f, x), ZERO)))
    return SchemaInstance(CONCEPT_COMPREHENSION, matrix, x, None, (iota,))


def constant_instance() -> SchemaInstance:
    """``theta(x, y, z) := y = z``: a constant map at the parameter ``z``."""
    x, y, z = Var("x", E), Var("y", E), Var("z", E)
    return SchemaInstance(TYPED_COMPREHENSION, Eq(y, z), x, y, (z,))


def builder_instance() -> SchemaInstance:
    """The map sending ``x`` to the constant function at ``x``."""
    x, y, w = Var("x", E), Var("y", EE), Var("w", E)
    return SchemaInstance(TYPED_COMPREHENSION, Forall(w, Eq(EApp(y, w), x)), x, y, ())


def smuggled_instance() -> SchemaInstance:
    """``d~(q) = 1`` iff ``D(C(q)) = 1``, with the higher-order ``D`` as a parameter."""
    q, big_d, big_c = Var("q", E), Var("D", Fun(EE, T)), Var("C", Fun(E, EE))
    matrix = Eq(EApp(big_d, EApp(big_c, q)), ONE)
    return SchemaInstance(CONCEPT_COMPREHENSION, matrix, q, None, (big_d, big_c))


STOCK_INSTANCES = {
    "diagonal": diagonal_instance,
    "constant": constant_instance,
    "builder": builder_instance,
    "smuggled": smuggled_instance,
}


# -- report ---------------------------------------------------------------

def _js(v) -> str:
    return "`" + json.dumps(value_to_json(v), ensure_ascii=False) + "`"


def _members(g) -> str:
    return "{" + ", ".join(str(x) for x in support(g)) + "}"


def _degrees(out: list) -> None:
    out.append("## Degrees\n")
    out.append("| type | degree |")
    out.append("|---|---|")
    for s in ("e", "t", "(e (e t))", "(t (e t))", "((e t) e)", "((e t) t)", "(e t)'", "((e t) t)'"):
        out.append(f"| `{parse_type(s)}` | {degree(parse_type(s))} |")
    out.append("")


def _classification(out: list) -> None:
    out.append("## Schema instances\n")
    for name, build in STOCK_INSTANCES.items():
        verdict = classify(build())
        out.append(f"### {name}\n")
        out.append("```")
        out.append(explain(verdict))
        out.append("```\n")


def _cantor(out: list, rng: random.Random) -> None:
    out.append("## Diagonal refutation\n")
    frame = Frame.standard(2)
    a = E
    iota = paradox.constant_iota(frame, a)
    w = paradox.cantor_refute(frame, a, iota)
    out.append(f"Constant `iota` on |E| = 2 sends every concept to {frame.least(a)}.\n")
    out.append(f"- diagonal d = {_js(w.diagonal)}")
    out.append(f"- iota(d) = {w.collision}")
    out.append(f"- colliding concept f = {_js(w.f)}")
    out.append(f"- verified: {w.verified}\n")
    points = frame.materialize(a)
    n = len(frame.materialize(Fun(a, T)))
    table = [rng.randrange(len(points)) for _ in range(n)]
    w = paradox.cantor_refute(frame, a, paradox.iota_from_indices(frame, a, table))
    out.append(f"Random `iota` with index table {table}: f = {_js(w.f)}, "
               f"g = {_js(w.g)}, shared image {w.collision}, verified: {w.verified}\n")


def _smuggle(out: list, rng: random.Random) -> None:
    out.append("## Smuggling the diagonal through constant maps\n")
    frame = Frame.standard(2)
    points = frame.materialize(E)
    n = len(frame.materialize(ET))
    table = [rng.randrange(len(points)) for _ in range(n)]
    res = paradox.smuggle(frame, E, paradox.iota_from_indices(frame, E, table))
    out.append(f"`iota` index table {table}.\n")
    out.append(f"- C = {_js(res.builder)}")
    out.append(f"- d~ = {_js(res.d_tilde)}")
    out.append(f"- direct diagonal = {_js(res.diagonal)}")
    out.append(f"- agree and verified: {res.verified}\n")


KAPLAN_SHAPES = ((1, 1), (2, 1), (3, 1), (2, 2))
KAPLAN_CHECKS = (("sdr", (E,)), ("sdr", (T,)), ("composition", (E, T)),
                 ("surjectivity", (E,)), ("surjectivity", (T,)))


def _kaplan(out: list) -> None:
    out.append("## Possible-worlds frames\n")
    heads = [f"{ax} {' '.join(str(t) for t in ts)}" for ax, ts in KAPLAN_CHECKS]
    out.append("| E | W | " + " | ".join(heads) + " | branch |")
    out.append("|---" * (len(heads) + 3) + "|")
    for ne, nw in KAPLAN_SHAPES:
        frame = Frame.kaplan(ne, nw)
        cells = ["holds" if axioms.check_axiom(frame, ax, ts).holds else "fails"
                 for ax, ts in KAPLAN_CHECKS]
        out.append(f"| {ne} | {nw} | " + " | ".join(cells) + f" | {kaplan_report(ne, nw).verdict} |")
    out.append("")


def _pipeline(out: list) -> None:
    out.append("## From the four axioms to the paradox\n")
    cases = [("kaplan |E|=5 |W|=1", Frame.kaplan(5, 1)),
             ("kaplan |E|=2 |W|=2", Frame.kaplan(2, 2)),
             ("two-object custom frame", paradox.contradiction_frame())]
    for label, frame in cases:
        res = paradox.rm_pipeline(frame)
        if isinstance(res, paradox.AxiomFailure):
            out.append(f"- {label}: stops at **{res.axiom}**. {res.note}".rstrip())
        else:
            ref = res.refutation
            out.append(f"- {label}: all checked axioms hold, so iota = chi . delta is built "
                       f"and refuted. f = {_js(ref.f)}, g = {_js(ref.g)}, both sent to "
                       f"{ref.collision}; verified: {ref.verified}. "
                       f"Sense determines reference here: {res.injective_by_sdr}.")
    out.append("")


def _gallin(out: list, rng: random.Random) -> None:
    out.append("## Representation axioms on a random custom frame\n")
    frame = random_custom_frame(rng)
    out.append(f"Frame: {frame.describe()}\n")
    out.append("| axiom | types | holds |")
    out.append("|---|---|---|")
    rows = []
    for a in (E, T):
        rows += axioms.gallin_report(frame, a, T)
    for ax in ("iterative", "church16", "injectivity"):
        rows.append(axioms.check_axiom(frame, ax, (E, T)))
    for v in rows:
        out.append(f"| {v.axiom} | {' '.join(str(t) for t in v.types)} | {v.holds} |")
    out.append("")


def _extension(out: list) -> None:
    out.append("## Extending a concept past a sense table\n")
    frame, partial, h = paradox.worked_extension_example()
    step = paradox.extension_step(frame, partial, None, h)
    out.append(f"With h = {_members(h)}: g_h = {_members(step.g_h)}, selected {step.selected}, "
               f"h~ = {_members(step.h_tilde)} ({step.status}).\n")
    probe = paradox.indefinite_extensibility_probe(frame, partial)
    chain = " -> ".join(_members(g) for g in probe.chain)
    out.append(f"Probe from the empty concept: {chain}; stopped: {probe.stopped}.\n")


def report(seed: int = 0) -> str:
    rng = random.Random(seed)
    out = [f"# Walkthrough (seed {seed})\n"]
    _degrees(out)
    _classification(out)
    _cantor(out, rng)
    _smuggle(out, rng)
    _kaplan(out)
    _pipeline(out)
    _gallin(out, rng)
    _extension(out)
    return "\n".join(out).rstrip("\n") + "\n"
