"""Diagonal arguments replayed on finite frames.

Every witness reported here is re-checked by evaluating an object-language
formula in the frame, so the constructions are never trusted on their own.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .axioms import canonical_injection, check_axiom
from .lang import (And, EApp, Eq, Exists, Forall, Not, ONE, Var, ZERO, conj, iff)
from .models import (Atom, Frame, Graph, ONE_V, PROP, Truth, ZERO_V, eval_formula, graph_of,
                     support, value_to_json)
from .types import E, Fun, Sense, T, Type


class PreconditionError(ValueError):
    def __init__(self, message: str, offending=None):
        super().__init__(message)
        self.offending = offending


# -- Cantor ----------------------------------------------------------------

def _vars(a: Type):
    at = Fun(a, T)
    return (Var("iota", Fun(at, a)), Var("f", at), Var("g", at), Var("y", a),
            Var("d", at), Var("x", a), Var("h", at))


def diagonal_formula(a: Type):
    """``forall x. d(x)=1 <-> exists h. iota(h)=x & h(x)=0``."""
    iota, _, _, _, d, x, h = _vars(a)
    rhs = Exists(h, And(Eq(EApp(iota, h), x), Eq(EApp(h, x), ZERO)))
    return Forall(x, iff(Eq(EApp(d, x), ONE), rhs))


def check_iota(frame: Frame, a: Type, iota: Graph) -> None:
    if not frame.in_domain(Fun(Fun(a, T), a), iota):
        raise PreconditionError(f"iota is not a total map from D_({a} t) to D_{a}")


def diagonal(frame: Frame, a: Type, iota: Graph) -> Graph:
    concepts = frame.materialize(Fun(a, T))
    hit = {iota(f) for f in concepts if f(iota(f)) == ZERO_V}
    return graph_of(lambda x: ONE_V if x in hit else ZERO_V, frame.materialize(a))


@dataclass(frozen=True)
class RefutationWitness:
    """``f != g`` with ``iota(f) = iota(g)``; ``g`` is the diagonal."""
    f: Graph
    g: Graph
    collision: object
    diagonal: Graph
    verified: bool

    def to_json(self) -> dict:
        return {"f": value_to_json(self.f), "g": value_to_json(self.g),
                "collisionPoint": value_to_json(self.collision),
                "diagonal": value_to_json(self.diagonal), "verified": self.verified}


def cantor_refute(frame: Frame, a: Type, iota: Graph) -> RefutationWitness:
    """Extract a non-injectivity witness for ``iota`` from the diagonal."""
    check_iota(frame, a, iota)
    d = diagonal(frame, a, iota)
    y = iota(d)
    # d(y) = 0 would make d itself a witness for d(y) = 1
    assert d(y) == ONE_V
    f = next(f for f in frame.materialize(Fun(a, T)) if iota(f) == y and f(y) == ZERO_V)
    assert f != d
    iv, fv, gv, yv, dv, _, _ = _vars(a)
    claim = conj(Not(Eq(fv, gv)), Eq(EApp(iv, fv), EApp(iv, gv)), Eq(EApp(iv, dv), yv),
                 Eq(gv, dv), diagonal_formula(a))
    env = {"iota": iota, "f": f, "g": d, "y": y, "d": d}
    return RefutationWitness(f, d, y, d, eval_formula(frame, env, claim))


def iota_from_indices(frame: Frame, a: Type, table) -> Graph:
    """Build ``iota`` from a list of indices into ``D_a``, one per concept."""
    concepts = frame.materialize(Fun(a, T))
    points = frame.materialize(a)
    if len(table) != len(concepts):
        raise PreconditionError(f"iota table needs {len(concepts)} entries, got {len(table)}")
    return Graph(zip(concepts, (points[int(i)] for i in table)))


def all_iotas(frame: Frame, a: Type) -> Iterator[Graph]:
    concepts = frame.materialize(Fun(a, T))
    points = frame.materialize(a)
    for vals in itertools.product(points, repeat=len(concepts)):
        yield Graph._trusted(tuple(zip(concepts, vals)))


def constant_iota(frame: Frame, a: Type, point=None) -> Graph:
    point = point if point is not None else frame.least(a)
    return graph_of(lambda _: point, frame.materialize(Fun(a, T)))


# -- parameter smuggling ---------------------------------------------------

@dataclass(frozen=True)
class SmuggleResult:
    builder: Graph      # C : a(aa), q -> constant map at q
    higher: Graph       # D : (aa)t
    d_tilde: Graph      # d~ : at, d~(q) = D(C(q))
    diagonal: Graph
    verified: bool

    def to_json(self) -> dict:
        return {"C": value_to_json(self.builder), "D": value_to_json(self.higher),
                "dTilde": value_to_json(self.d_tilde), "diagonal": value_to_json(self.diagonal),
                "verified": self.verified}


def smuggle(frame: Frame, a: Type, iota: Graph) -> SmuggleResult:
    """Recover the diagonal through a higher-order detour via constant maps."""
    check_iota(frame, a, iota)
    points = frame.materialize(a)
    concepts = frame.materialize(Fun(a, T))
    builder = graph_of(lambda q: graph_of(lambda _: q, points), points)
    maps = frame.materialize(Fun(a, a))
    consts = {builder(q): q for q in points}

    def high(alpha):
        q = consts.get(alpha)
        if q is None:
            return ZERO_V
        y = alpha(q)
        hit = any(iota(f) == y and f(y) == ZERO_V for f in concepts)
        return ONE_V if hit else ZERO_V

    higher = graph_of(high, maps)
    d_tilde = graph_of(lambda q: higher(builder(q)), points)
    d = diagonal(frame, a, iota)
    brute = all((d_tilde(q) == ONE_V) == any(iota(f) == q and f(q) == ZERO_V for f in concepts)
                for q in points)

    iv, fv, _, _, _, xv, _ = _vars(a)
    aa = Fun(a, a)
    cv, dv, dt = Var("C", Fun(a, aa)), Var("D", Fun(aa, T)), Var("dt", Fun(a, T))
    alpha, q = Var("alpha", aa), Var("q", a)
    # D(alpha)=1 <-> exists q. alpha = C(q) & exists f. iota(f)=alpha(q) & f(alpha(q))=0
    aq = EApp(alpha, q)
    d_def = Forall(alpha, iff(Eq(EApp(dv, alpha), ONE), Exists(q, And(
        Eq(alpha, EApp(cv, q)), Exists(fv, And(Eq(EApp(iv, fv), aq), Eq(EApp(fv, aq), ZERO)))))))
    c_def = Forall(q, Forall(xv, Eq(EApp(EApp(cv, q), xv), q)))
    dt_def = Forall(q, iff(Eq(EApp(dt, q), ONE), Eq(EApp(dv, EApp(cv, q)), ONE)))
    target = Forall(q, iff(Eq(EApp(dt, q), ONE),
                           Exists(fv, And(Eq(EApp(iv, fv), q), Eq(EApp(fv, q), ZERO)))))
    env = {"iota": iota, "C": builder, "D": higher, "dt": d_tilde}
    by_eval = eval_formula(frame, env, conj(c_def, d_def, dt_def, target))
    return SmuggleResult(builder, higher, d_tilde, d, brute and by_eval and d_tilde == d)


# -- the pipeline from the four axioms to a contradiction ------------------

COLLECTION = Fun(PROP, T)


@dataclass
class AxiomFailure:
    axiom: str
    types: tuple
    witness: dict | None
    note: str = ""

    def to_json(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = {k: (v if isinstance(v, (int, str)) else value_to_json(v))
                   for k, v in self.witness.items()}
        return {"outcome": "AxiomFailure", "axiom": self.axiom,
                "types": [str(t) for t in self.types], "witness": wit, "note": self.note}


@dataclass
class Contradiction:
    refutation: RefutationWitness
    iota: Graph
    delta_choice: Graph   # collection -> least presenting sense
    chi: Graph
    injective_by_sdr: bool
    iota_injective: bool
    sdr_witness: dict | None = None

    def to_json(self) -> dict:
        sdr = None
        if self.sdr_witness is not None:
            sdr = {k: value_to_json(v) for k, v in self.sdr_witness.items()}
        return {"outcome": "Contradiction", "refutation": self.refutation.to_json(),
                "iota": value_to_json(self.iota), "delta": value_to_json(self.delta_choice),
                "chi": value_to_json(self.chi), "injectiveBySdr": self.injective_by_sdr,
                "iotaInjective": self.iota_injective, "sdrWitness": sdr}


def rm_pipeline(frame: Frame):
    """Walk the axioms behind the proposition paradox and report where it stops.

    Surjectivity and senses-are-objects are checked at the type of
    collections of propositions.  Fine-grainedness is checked before
    senses-are-objects so that Kaplan frames land on the branch their
    cardinalities predict.
    """
    tau = COLLECTION
    for axiom, types in (("surjectivity", (tau,)), ("fine-grained", ()),
                         ("senses-are-objects", (tau,))):
        v = check_axiom(frame, axiom, types)
        if not v.holds:
            return AxiomFailure(axiom, types, v.witness, v.note)

    senses = frame.materialize(Sense(tau))
    collections = frame.materialize(tau)
    choice = {}
    for c in collections:
        s = next(s for s in senses if c in frame.present(tau, s))
        assert isinstance(s, Atom) and s.kind == "obj"
        choice[c] = s
    chi = Graph(canonical_injection(frame))
    iota = graph_of(lambda c: chi(choice[c]), collections)
    sdr = check_axiom(frame, "sdr", (tau,))
    injective = len(set(iota(c) for c in collections)) == len(collections)
    ref = cantor_refute(frame, PROP, iota)
    if not ref.verified:
        raise AssertionError("refutation witness failed re-verification")
    return Contradiction(ref, iota, graph_of(lambda c: choice[c], collections), chi,
                         sdr.holds, injective, sdr.witness)


def contradiction_frame() -> Frame:
    """Two objects double as propositions and as senses of collections.

    Each sense of a collection presents two collections, so sense does not
    determine reference there, and the pipeline reaches the diagonal.
    """
    o0, o1 = Atom("obj", 0), Atom("obj", 1)
    props = [o0, o1]
    cols = [Graph(zip(props, (Truth(b0), Truth(b1))))
            for b0, b1 in itertools.product((0, 1), repeat=2)]
    delta = {T: {o0: [ZERO_V], o1: [ONE_V]}, COLLECTION: {o0: cols[:2], o1: cols[2:]}}
    domains = {PROP: props, Sense(COLLECTION): props}
    return Frame("custom", 2, domains=domains, delta=delta)


# -- extension operators ---------------------------------------------------

@dataclass
class ExtensionStep:
    partial: dict           # concept -> object
    gamma: Graph
    h: Graph
    g_h: Graph
    h_tilde: Graph | None
    status: str             # "Verified" or "UndefinedExtension"
    selected: object = None  # the object d(g_h), when defined
    verified: bool = True

    def to_json(self) -> dict:
        return {"status": self.status, "h": value_to_json(self.h),
                "gH": value_to_json(self.g_h),
                "selected": value_to_json(self.selected) if self.selected is not None else None,
                "hTilde": value_to_json(self.h_tilde) if self.h_tilde is not None else None,
                "members": [str(x) for x in support(self.h_tilde)] if self.h_tilde else None,
                "verified": self.verified}


def default_gamma(frame: Frame, partial: dict) -> Graph:
    """Inverse of the partial operator, sending objects outside its range to the empty concept."""
    inverse = {x: g for g, x in partial.items()}
    empty = frame.least(Fun(E, T))
    return graph_of(lambda x: inverse.get(x, empty), frame.materialize(E))


def check_partial(frame: Frame, partial: dict) -> None:
    seen = {}
    concepts = set(frame.materialize(Fun(E, T)))
    for g, x in partial.items():
        if g not in concepts or not frame.in_domain(E, x):
            raise PreconditionError(f"{g} -> {x} is not a concept-to-object pair", g)
        if x in seen:
            raise PreconditionError(f"not injective: {seen[x]} and {g} both go to {x}", g)
        seen[x] = g


def _g_h_definition():
    et = Fun(E, T)
    gv, hv, cv, xv = Var("gh", et), Var("h", et), Var("gamma", Fun(E, et)), Var("x", E)
    return Forall(xv, iff(Eq(EApp(gv, xv), ONE),
                          And(Eq(EApp(hv, xv), ONE), Eq(EApp(EApp(cv, xv), xv), ZERO))))


_G_H_DEFINITION = _g_h_definition()


def extension_step(frame: Frame, partial: dict, gamma: Graph | None, h: Graph) -> ExtensionStep:
    """One application of the diagonal extension to the concept ``h``."""
    check_partial(frame, partial)
    gamma = gamma if gamma is not None else default_gamma(frame, partial)
    rng = set(partial.values())
    for x in support(h):
        if x not in rng:
            raise PreconditionError(f"h is not inside the range: {x} has no concept", x)
    for g, x in partial.items():
        if h(x) == ONE_V and gamma(x) != g:
            raise PreconditionError(f"gamma does not invert the operator at {x}", g)

    g_h = graph_of(lambda x: ONE_V if h(x) == ONE_V and gamma(x)(x) == ZERO_V else ZERO_V,
                   frame.materialize(E))
    ok = eval_formula(frame, {"gh": g_h, "h": h, "gamma": gamma}, _G_H_DEFINITION)

    y = partial.get(g_h)
    if y is None:
        return ExtensionStep(partial, gamma, h, g_h, None, "UndefinedExtension", None, ok)
    if h(y) == ONE_V:
        raise AssertionError(f"h already contains the selected object {y}")
    h_tilde = graph_of(lambda x: ONE_V if x == y or h(x) == ONE_V else ZERO_V, frame.materialize(E))
    grown = set(support(h)) < set(support(h_tilde)) <= rng | {y}
    return ExtensionStep(partial, gamma, h, g_h, h_tilde, "Verified", y, ok and grown)


@dataclass
class ProbeResult:
    chain: list
    steps: list = field(default_factory=list)
    stopped: str = ""   # "undefined" or "budget"

    def to_json(self) -> dict:
        return {"chain": [[str(x) for x in support(h)] for h in self.chain],
                "length": len(self.chain), "stopped": self.stopped,
                "steps": [s.to_json() for s in self.steps]}


def indefinite_extensibility_probe(frame: Frame, partial: dict, gamma: Graph | None = None,
                                   budget: int = 100) -> ProbeResult:
    """Iterate the extension from the empty concept until it escapes the table."""
    h = frame.least(Fun(E, T))
    out = ProbeResult([h])
    for _ in range(budget):
        step = extension_step(frame, partial, gamma, h)
        out.steps.append(step)
        if step.status != "Verified":
            out.stopped = "undefined"
            return out
        h = step.h_tilde
        out.chain.append(h)
    out.stopped = "budget"
    return out


def concept(frame: Frame, members) -> Graph:
    ms = {m if isinstance(m, Atom) else Atom("obj", int(m)) for m in members}
    return graph_of(lambda x: ONE_V if x in ms else ZERO_V, frame.materialize(E))


def partial_from_pairs(frame: Frame, pairs) -> dict:
    """``[[concept index, object index], ...]`` over canonical orderings."""
    concepts = frame.materialize(Fun(E, T))
    objs = frame.materialize(E)
    return {concepts[int(i)]: objs[int(j)] for i, j in pairs}


def all_partial_injections(frame: Frame, max_size: int) -> Iterator[dict]:
    concepts = frame.materialize(Fun(E, T))
    objs = frame.materialize(E)
    for k in range(0, max_size + 1):
        for dom in itertools.combinations(concepts, k):
            for img in itertools.permutations(objs, k):
                yield dict(zip(dom, img))


def subsets_of_range(frame: Frame, partial: dict) -> Iterator[Graph]:
    rng = sorted(set(partial.values()), key=lambda v: v.key)
    for k in range(len(rng) + 1):
        for ms in itertools.combinations(rng, k):
            yield concept(frame, ms)


def worked_extension_example() -> tuple[Frame, dict, Graph]:
    """Three objects; the empty concept, {o0}, and {o0, o1} select o0, o1, o2."""
    frame = Frame.standard(3)
    partial = {concept(frame, []): Atom("obj", 0), concept(frame, [0]): Atom("obj", 1),
               concept(frame, [0, 1]): Atom("obj", 2)}
    return frame, partial, concept(frame, [0])
