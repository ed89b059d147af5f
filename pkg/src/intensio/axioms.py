"""Axiom instances checked exhaustively on finite frames.

Each axiom has two routes.  ``check_axiom`` runs a direct search in Python
and returns a counterexample on failure.  ``axiom_formula`` gives the same
axiom as an object-language sentence ``forall outer. body``; every failure
witness is an assignment to ``outer`` and is re-checked by evaluating
``body`` under it, which must come out false.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lang import (And, EApp, Eq, Exists, Forall, IApp, Implies, Not, Pres, Rep, Var, conj,
                   exists, forall, iff)
from .models import Atom, Frame, Graph, Uninterpreted, eval_formula, value_to_json
from .types import E, Fun, Sense, T, Type

PROP = Sense(T)

# axiom id -> number of type arguments
AXIOMS = {
    "sdr": 1,
    "composition": 2,
    "surjectivity": 1,
    "senses-are-objects": 1,
    "fine-grained": 0,
    "extensional-identity": 2,
    "iterative": 2,
    "church16": 2,
    "representation": 1,
    "iapp-characterization": 2,
    "injectivity": 2,
    "gallin-a2": 2,
    "gallin-a3": 2,
    "gallin-as6": 1,
}

GALLIN = ("gallin-a2", "gallin-a3", "gallin-as6")


@dataclass
class AxiomVerdict:
    axiom: str
    types: tuple
    holds: bool
    witness: dict | None = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = {k: (value_to_json(v) if not isinstance(v, (int, str)) else v)
                   for k, v in self.witness.items()}
        out = {"axiom": self.axiom, "types": [str(t) for t in self.types],
               "holds": self.holds, "witness": wit}
        if self.note:
            out["note"] = self.note
        if self.extra:
            out.update(self.extra)
        return out


def _v(name: str, tp: Type) -> Var:
    return Var(name, tp)


def _defined(tp: Type, sense, name: str) -> "Exists":
    """``Δ_tp(sense)↓`` as ``exists d. pres``."""
    d = _v(name, tp)
    return Exists(d, Pres(tp, sense, d))


def axiom_formula(axiom: str, types: tuple) -> tuple[list, object]:
    """``(outer variables, body)`` such that the axiom is ``forall outer. body``."""
    if axiom not in AXIOMS:
        raise KeyError(f"unknown axiom {axiom!r}")
    if len(types) != AXIOMS[axiom]:
        raise ValueError(f"{axiom} takes {AXIOMS[axiom]} type argument(s)")
    if AXIOMS[axiom] == 1:
        (tau,) = types
    elif AXIOMS[axiom] == 2:
        a, b = types
        ab = Fun(a, b)

    if axiom == "sdr":
        s, d0, d1 = _v("s", Sense(tau)), _v("d0", tau), _v("d1", tau)
        return [s, d0, d1], Implies(And(Pres(tau, s, d0), Pres(tau, s, d1)), Eq(d0, d1))
    if axiom == "surjectivity":
        f, fp = _v("f", tau), _v("f'", Sense(tau))
        return [f], Exists(fp, Pres(tau, fp, f))
    if axiom == "senses-are-objects":
        fp, x = _v("f'", Sense(tau)), _v("x", E)
        return [fp], Exists(x, Eq(fp, x))
    if axiom == "fine-grained":
        chi, x, y = _v("chi", Fun(E, PROP)), _v("x", E), _v("y", E)
        inj = forall([x, y], Implies(Eq(EApp(chi, x), EApp(chi, y)), Eq(x, y)))
        return [], Exists(chi, inj)
    if axiom == "representation":
        f = _v("f", tau)
        return [f], Pres(tau, Rep(f), f)
    if axiom == "gallin-as6":
        f, d = _v("f", tau), _v("d", tau)
        return [f], And(Pres(tau, Rep(f), f), Forall(d, Implies(Pres(tau, Rep(f), d), Eq(d, f))))

    fp, xp, rp = _v("f'", Sense(ab)), _v("x'", Sense(a)), _v("r'", Sense(b))
    f, g, x, y = _v("f", ab), _v("g", ab), _v("x", a), _v("y", a)
    if axiom == "composition":
        body = Implies(And(Pres(ab, fp, f), Pres(a, xp, x)),
                       And(Exists(rp, IApp(a, b, fp, xp, rp)),
                           Forall(rp, Implies(IApp(a, b, fp, xp, rp), Pres(b, rp, EApp(f, x))))))
        return [fp, xp, f, x], body
    if axiom == "extensional-identity":
        return [f, g], Implies(Forall(x, Eq(EApp(f, x), EApp(g, x))), Eq(f, g))
    if axiom == "iterative":
        gp = _v("g'", Sense(ab))
        r1, r2 = _v("r1", Sense(b)), _v("r2", Sense(b))
        u1, u2 = _v("u1", b), _v("u2", b)
        differ = exists([f, g], conj(Pres(ab, fp, f), Pres(ab, gp, g), Not(Eq(f, g))))
        witness = exists([xp, x, r1, r2, u1, u2], conj(
            Pres(a, xp, x), IApp(a, b, fp, xp, r1), IApp(a, b, gp, xp, r2),
            Pres(b, r1, u1), Pres(b, r2, u2), Not(Eq(u1, u2))))
        return [fp, gp], Implies(differ, witness)
    if axiom == "church16":
        u = _v("u", b)
        agrees = forall([xp, x], Implies(Pres(a, xp, x), exists([rp, u], conj(
            IApp(a, b, fp, xp, rp), Pres(b, rp, u), Eq(u, EApp(f, x))))))
        return [fp, f], Implies(And(agrees, _defined(ab, fp, "F")), Pres(ab, fp, f))
    if axiom == "iapp-characterization":
        F = _v("F", ab)
        rhs = exists([F, x], conj(Pres(ab, fp, F), Pres(a, xp, x), Eq(rp, Rep(EApp(F, x)))))
        return [fp, xp, rp], iff(IApp(a, b, fp, xp, rp), rhs)
    if axiom == "injectivity":
        yp, u = _v("y'", Sense(a)), _v("u", a)
        injective = forall([x, y], Implies(Eq(EApp(f, x), EApp(f, y)), Eq(x, y)))
        intensional = Forall(fp, Implies(Pres(ab, fp, f), forall([xp, yp, rp], Implies(
            And(IApp(a, b, fp, xp, rp), IApp(a, b, fp, yp, rp)),
            Exists(u, And(Pres(a, xp, u), Pres(a, yp, u)))))))
        return [f], iff(injective, intensional)
    if axiom == "gallin-a2":
        return [f, x, y], Implies(Eq(Rep(x), Rep(y)), Eq(Rep(EApp(f, x)), Rep(EApp(f, y))))
    if axiom == "gallin-a3":
        return [f, g], Implies(Forall(x, Eq(Rep(EApp(f, x)), Rep(EApp(g, x)))), Eq(Rep(f), Rep(g)))
    raise KeyError(axiom)


def sentence(axiom: str, types: tuple):
    outer, body = axiom_formula(axiom, types)
    return forall(outer, body)


def verify_witness(frame: Frame, axiom: str, types: tuple, witness: dict) -> bool:
    """True when the witness falsifies the axiom body."""
    outer, body = axiom_formula(axiom, types)
    env = {v.name: witness[v.name] for v in outer}
    return not eval_formula(frame, env, body)


# -- direct checks ---------------------------------------------------------

def _fail(axiom, types, frame, witness, note="") -> AxiomVerdict:
    if not verify_witness(frame, axiom, types, witness):
        raise AssertionError(f"{axiom} witness {witness} does not falsify the axiom")
    return AxiomVerdict(axiom, types, False, witness, note)


def _ok(axiom, types, note="", **extra) -> AxiomVerdict:
    return AxiomVerdict(axiom, types, True, None, note, dict(extra))


def _nabla_or_none(frame, tp, v):
    try:
        return frame.nabla(tp, v)
    except Uninterpreted:
        return None


def _iapp_result_values(frame, a, b, fp, xp) -> set:
    return {u for r in frame.iapp(a, b, fp, xp) for u in frame.present(b, r)}


def check_axiom(frame: Frame, axiom: str, types: tuple = ()) -> AxiomVerdict:
    """Exhaustively check one axiom instance; failures carry a verified witness."""
    types = tuple(types)
    if axiom not in AXIOMS:
        raise KeyError(f"unknown axiom {axiom!r}; known: {', '.join(AXIOMS)}")
    if len(types) != AXIOMS[axiom]:
        raise ValueError(f"{axiom} takes {AXIOMS[axiom]} type argument(s)")
    fn = _CHECKS[axiom]
    return fn(frame, types)


def _sdr(frame, types):
    (tau,) = types
    for s in frame.scan(Sense(tau)):
        refs = frame.present(tau, s)
        if len(refs) > 1:
            return _fail("sdr", types, frame, {"s": s, "d0": refs[0], "d1": refs[1]})
    return _ok("sdr", types)


def _surjectivity(frame, types):
    (tau,) = types
    image = None
    for f in frame.scan(tau):
        if frame.has_nabla(tau):
            s = _nabla_or_none(frame, tau, f)
            if s is not None and f in frame.present(tau, s):
                continue
        if image is None:
            image = {r for s in frame.scan(Sense(tau)) for r in frame.present(tau, s)}
        if f not in image:
            return _fail("surjectivity", types, frame, {"f": f})
    return _ok("surjectivity", types)


def _senses_are_objects(frame, types):
    (tau,) = types
    for s in frame.scan(Sense(tau)):
        if not (isinstance(s, Atom) and s.kind == "obj" and s.id < frame.n_objects):
            return _fail("senses-are-objects", types, frame, {"f'": s})
    return _ok("senses-are-objects", types)


def canonical_injection(frame: Frame):
    """Least injection from objects into propositions, as a list of pairs, or None."""
    n = frame.n_objects
    props = []
    for p in frame.scan(PROP):
        if len(props) == n:
            break
        props.append(p)
    if len(props) < n:
        return None
    return list(zip(frame.objects, props))


def _fine_grained(frame, types):
    n_e, n_p = frame.cardinality(E), frame.cardinality(PROP)
    if n_p < n_e:
        note = f"|D_t'| = {n_p} < {n_e} = |D_e|, so no injection exists"
        return AxiomVerdict("fine-grained", types, False, {"|D_e|": n_e, "|D_t'|": n_p}, note)
    chi = canonical_injection(frame)
    g = Graph(chi)
    _, body = axiom_formula("fine-grained", ())
    inj = body.body  # strip the existential over chi
    assert eval_formula(frame, {"chi": g}, inj), "canonical injection is not injective"
    return _ok("fine-grained", types, f"|D_e| = {n_e} <= {n_p} = |D_t'|", chi=value_to_json(g))


def _extensional_identity(frame, types):
    a, b = types
    ab = Fun(a, b)
    seen = {}
    dom = frame.materialize(a)
    for f in frame.scan(ab):
        sig = tuple(f(x) for x in dom)
        other = seen.get(sig)
        if other is not None and other != f:
            return _fail("extensional-identity", types, frame, {"f": other, "g": f})
        seen[sig] = f
    return _ok("extensional-identity", types)


def _composition(frame, types):
    a, b = types
    ab = Fun(a, b)
    senses_a = frame.materialize(Sense(a))
    for fp in frame.scan(Sense(ab)):
        Fs = frame.present(ab, fp)
        if not Fs:
            continue
        for xp in senses_a:
            Xs = frame.present(a, xp)
            if not Xs:
                continue
            results = frame.iapp(a, b, fp, xp)
            for F in Fs:
                for X in Xs:
                    want = F(X)
                    if not results or any(want not in frame.present(b, r) for r in results):
                        return _fail("composition", types, frame,
                                     {"f'": fp, "x'": xp, "f": F, "x": X})
    return _ok("composition", types)


def _iterative(frame, types):
    a, b = types
    ab = Fun(a, b)
    presented = [(fp, frame.present(ab, fp)) for fp in frame.scan(Sense(ab))]
    presented = [(fp, Fs) for fp, Fs in presented if Fs]
    pairs_a = [(xp, x) for xp in frame.materialize(Sense(a)) for x in frame.present(a, xp)]
    for fp, Fs in presented:
        for gp, Gs in presented:
            if not any(F != G for F in Fs for G in Gs):
                continue
            found = False
            for xp, _ in pairs_a:
                u1 = _iapp_result_values(frame, a, b, fp, xp)
                u2 = _iapp_result_values(frame, a, b, gp, xp)
                if any(p != q for p in u1 for q in u2):
                    found = True
                    break
            if not found:
                return _fail("iterative", types, frame, {"f'": fp, "g'": gp})
    return _ok("iterative", types)


def _church16(frame, types):
    a, b = types
    ab = Fun(a, b)
    pairs_a = [(xp, x) for xp in frame.materialize(Sense(a)) for x in frame.present(a, xp)]
    funcs = frame.materialize(ab)
    for fp in frame.scan(Sense(ab)):
        Fs = frame.present(ab, fp)
        if not Fs:
            continue
        outs = [(x, _iapp_result_values(frame, a, b, fp, xp)) for xp, x in pairs_a]
        for f in funcs:
            if f in Fs:
                continue
            if all(f(x) in us for x, us in outs):
                return _fail("church16", types, frame, {"f'": fp, "f": f})
    return _ok("church16", types)


def _representation(frame, types):
    (tau,) = types
    for f in frame.scan(tau):
        s = _nabla_or_none(frame, tau, f)
        if s is None:
            return AxiomVerdict("representation", types, False, {"f": f},
                                f"no representation is given for {f}")
        if f not in frame.present(tau, s):
            return _fail("representation", types, frame, {"f": f})
    return _ok("representation", types)


def _as6(frame, types):
    (tau,) = types
    for f in frame.scan(tau):
        s = _nabla_or_none(frame, tau, f)
        if s is None:
            return AxiomVerdict("gallin-as6", types, False, {"f": f},
                                f"no representation is given for {f}")
        if frame.present(tau, s) != (f,):
            return _fail("gallin-as6", types, frame, {"f": f})
    return _ok("gallin-as6", types)


def _iapp_char(frame, types):
    a, b = types
    ab = Fun(a, b)
    senses_a = frame.materialize(Sense(a))
    for fp in frame.scan(Sense(ab)):
        Fs = frame.present(ab, fp)
        for xp in senses_a:
            want = set()
            for F in Fs:
                for X in frame.present(a, xp):
                    s = _nabla_or_none(frame, b, F(X))
                    if s is None:
                        raise Uninterpreted(f"no representation of {F(X)} at type {b}")
                    want.add(s)
            got = set(frame.iapp(a, b, fp, xp))
            if got != want:
                bad = next(iter(sorted(got ^ want, key=lambda v: v.key)))
                return _fail("iapp-characterization", types, frame, {"f'": fp, "x'": xp, "r'": bad})
    return _ok("iapp-characterization", types)


def _injectivity(frame, types):
    a, b = types
    ab = Fun(a, b)
    senses_a = frame.materialize(Sense(a))
    presenters: dict = {}
    for fp in frame.scan(Sense(ab)):
        for F in frame.present(ab, fp):
            presenters.setdefault(F, []).append(fp)
    for f in frame.materialize(ab):
        vals = [v for _, v in f.pairs]
        injective = len(set(vals)) == len(vals)
        intensional = True
        for fp in presenters.get(f, ()):
            by_result: dict = {}
            for xp in senses_a:
                for r in frame.iapp(a, b, fp, xp):
                    by_result.setdefault(r, []).append(xp)
            for xps in by_result.values():
                for xp in xps:
                    for yp in xps:
                        if not set(frame.present(a, xp)) & set(frame.present(a, yp)):
                            intensional = False
        if injective != intensional:
            return _fail("injectivity", types, frame, {"f": f})
    return _ok("injectivity", types)


def _presupposition(axiom, types, exc) -> AxiomVerdict:
    return AxiomVerdict(axiom, types, False, None, f"presupposes representation: {exc}")


def _a2(frame, types):
    try:
        return _a2_core(frame, types)
    except Uninterpreted as exc:
        return _presupposition("gallin-a2", types, exc)


def _a3(frame, types):
    try:
        return _a3_core(frame, types)
    except Uninterpreted as exc:
        return _presupposition("gallin-a3", types, exc)


def _a2_core(frame, types):
    a, b = types
    dom = frame.materialize(a)
    reps = {x: frame.nabla(a, x) for x in dom}
    for f in frame.scan(Fun(a, b)):
        for x in dom:
            for y in dom:
                if reps[x] == reps[y] and frame.nabla(b, f(x)) != frame.nabla(b, f(y)):
                    return _fail("gallin-a2", types, frame, {"f": f, "x": x, "y": y})
    return _ok("gallin-a2", types)


def _a3_core(frame, types):
    a, b = types
    ab = Fun(a, b)
    dom = frame.materialize(a)
    by_sig: dict = {}
    for f in frame.scan(ab):
        sig = tuple(frame.nabla(b, f(x)) for x in dom)
        by_sig.setdefault(sig, []).append(f)
    for fs in by_sig.values():
        rep0 = frame.nabla(ab, fs[0])
        for g in fs[1:]:
            if frame.nabla(ab, g) != rep0:
                return _fail("gallin-a3", types, frame, {"f": fs[0], "g": g})
    return _ok("gallin-a3", types)


_CHECKS = {
    "sdr": _sdr,
    "composition": _composition,
    "surjectivity": _surjectivity,
    "senses-are-objects": _senses_are_objects,
    "fine-grained": _fine_grained,
    "extensional-identity": _extensional_identity,
    "iterative": _iterative,
    "church16": _church16,
    "representation": _representation,
    "iapp-characterization": _iapp_char,
    "injectivity": _injectivity,
    "gallin-a2": _a2,
    "gallin-a3": _a3,
    "gallin-as6": _as6,
}


def check_by_evaluation(frame: Frame, axiom: str, types: tuple = ()) -> bool:
    """Truth of the axiom sentence by plain evaluation; slow, used as a cross-check."""
    return eval_formula(frame, {}, sentence(axiom, tuple(types)))


def gallin_report(frame: Frame, tau: Type, b: Type | None = None) -> list[AxiomVerdict]:
    b = b if b is not None else tau
    return [check_axiom(frame, "gallin-a2", (tau, b)),
            check_axiom(frame, "gallin-a3", (tau, b)),
            check_axiom(frame, "gallin-as6", (tau,))]


__all__ = ["AXIOMS", "AxiomVerdict", "GALLIN", "axiom_formula", "canonical_injection",
           "check_axiom", "check_by_evaluation", "gallin_report", "sentence", "verify_witness"]
