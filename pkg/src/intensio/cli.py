"""Command-line entry point.

Exit status: 0 when a verdict is produced (including a failing axiom),
1 when a self-check or claimed property is violated, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import axioms, definability as dfn, models, paradox, schema
from .lang import Context, parse_document, print_formula, typecheck_formula
from .models import Frame, TooLarge, Unpopulated, frame_from_json, load_frame, render_count
from .sexpr import ParseError
from .types import E, Fun, T, degree, parse_type, reduce_type


class PropertyViolation(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _json_file(path: str):
    return json.loads(_read(path))


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, ensure_ascii=False)
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _frame(args) -> Frame:
    if getattr(args, "frame", None):
        return load_frame(args.frame, cap=args.cap)
    kind = getattr(args, "kind", None) or "standard"
    if kind == "kaplan":
        return Frame.kaplan(args.E, args.W, cap=args.cap)
    if kind == "standard":
        return Frame.standard(args.E, cap=args.cap)
    raise ValueError("custom frames need --frame FILE")


def _iota(frame, a, path):
    data = _json_file(path)
    table = data["iota"] if isinstance(data, dict) else data
    return paradox.iota_from_indices(frame, a, table)


# -- commands --------------------------------------------------------------

def cmd_degree(args):
    tp = parse_type(args.type)
    if args.json:
        return {"type": str(tp), "degree": degree(tp)}
    return str(degree(tp))


def cmd_reduce_type(args):
    tp = parse_type(args.type)
    red = reduce_type(tp)
    return {"type": str(tp), "reduced": str(red), "changed": red != tp}


def cmd_parse(args):
    text = args.text if args.text is not None else _read(args.file)
    ctx, f = parse_document(text)
    return {"canonical": print_formula(f), "free": sorted(v.name for v in _free(f))}


def _free(f):
    from .lang import free_vars
    return free_vars(f)


def cmd_typecheck(args):
    text = args.text if args.text is not None else _read(args.file)
    ctx, f = parse_document(text)
    diags = typecheck_formula(ctx, f)
    return {"wellTyped": not diags,
            "diagnostics": [{"path": [str(p) for p in d.path], "message": d.message} for d in diags]}


def cmd_classify(args):
    from .walkthrough import STOCK_INSTANCES
    if args.instance in STOCK_INSTANCES:
        inst = STOCK_INSTANCES[args.instance]()
    else:
        inst = schema.parse_instance(_read(args.instance))
    verdict = schema.classify(inst)
    if args.explain:
        return schema.explain(verdict)
    return verdict.to_json()


def cmd_frame(args):
    frame = _frame(args)
    out = {"frame": frame.to_json(), "sizes": {}}
    for t in args.type or ["e", "t", "(e t)", "t'", "(t' t)", "(t' t)'"]:
        tp = parse_type(t)
        try:
            out["sizes"][str(tp)] = render_count(frame.cardinality(tp))
        except models.CardinalityOverflow:
            out["sizes"][str(tp)] = "overflow"
    return out


def cmd_cardinality(args):
    tp = parse_type(args.type) if args.type else None
    out = {"kind": args.kind, "E": args.E, "W": args.W}
    if tp is not None:
        out["type"] = str(tp)
        out["cardinality"] = render_count(models.count(args.kind, args.E, args.W, tp))
    if args.kind == "kaplan":
        out["report"] = models.kaplan_report(args.E, args.W).to_json()
    return out


def cmd_check_axiom(args):
    frame = _frame(args)
    types = tuple(parse_type(t) for t in (args.type or []))
    return axioms.check_axiom(frame, args.axiom, types).to_json()


def cmd_cantor(args):
    frame = _frame(args)
    a = parse_type(args.type)
    if args.all:
        results = [paradox.cantor_refute(frame, a, i) for i in paradox.all_iotas(frame, a)]
        bad = [i for i, r in enumerate(results) if not r.verified]
        if bad:
            raise PropertyViolation(f"unverified witnesses at iota #{bad[0]}")
        return {"type": str(a), "count": len(results), "allVerified": True}
    iota = _iota(frame, a, args.iota) if args.iota else paradox.constant_iota(frame, a)
    w = paradox.cantor_refute(frame, a, iota)
    if not w.verified:
        raise PropertyViolation("cantor witness failed re-verification")
    return {"type": str(a), "iota": models.value_to_json(iota), "witness": w.to_json()}


def cmd_smuggle(args):
    frame = _frame(args)
    a = parse_type(args.type)
    if args.random:
        rng = random.Random(args.seed)
        points = frame.materialize(a)
        n = len(frame.materialize(Fun(a, T)))
        runs = []
        for _ in range(args.random):
            iota = paradox.iota_from_indices(frame, a, [rng.randrange(len(points)) for _ in range(n)])
            runs.append(paradox.smuggle(frame, a, iota).verified)
        if not all(runs):
            raise PropertyViolation("smuggled diagonal disagrees with the direct one")
        return {"type": str(a), "count": len(runs), "allVerified": True, "seed": args.seed}
    iota = _iota(frame, a, args.iota) if args.iota else paradox.constant_iota(frame, a)
    res = paradox.smuggle(frame, a, iota)
    if not res.verified:
        raise PropertyViolation("smuggled diagonal disagrees with the direct one")
    return {"type": str(a), **res.to_json()}


def cmd_rm_pipeline(args):
    frame = _frame(args)
    return paradox.rm_pipeline(frame).to_json()


def cmd_gallin(args):
    frame = _frame(args)
    ts = [parse_type(t) for t in (args.type or ["e"])]
    a = ts[0]
    b = ts[1] if len(ts) > 1 else a
    return [v.to_json() for v in axioms.gallin_report(frame, a, b)]


def _partial(args):
    data = _json_file(args.partial)
    frame = Frame.standard(int(data.get("E", 3)), cap=args.cap)
    partial = paradox.partial_from_pairs(frame, data.get("partial", []))
    gamma = None
    if data.get("gamma") is not None:
        concepts = frame.materialize(Fun(E, T))
        gamma = models.graph_of(lambda x: concepts[int(data["gamma"][x.id])], frame.materialize(E))
    return frame, partial, gamma


def _concept_from(frame, data):
    if isinstance(data, dict):
        if "members" in data:
            return paradox.concept(frame, [int(str(m).lstrip("o")) for m in data["members"]])
        data = data["h"]
    if isinstance(data, int):
        return frame.materialize(Fun(E, T))[data]
    return models.value_from_json(data)


def cmd_extension(args):
    frame, partial, gamma = _partial(args)
    h = _concept_from(frame, _json_file(args.h))
    try:
        step = paradox.extension_step(frame, partial, gamma, h)
    except AssertionError as exc:
        raise PropertyViolation(str(exc)) from exc
    if not step.verified:
        raise PropertyViolation("extension step failed re-verification")
    return step.to_json()


def cmd_probe(args):
    frame, partial, gamma = _partial(args)
    return paradox.indefinite_extensibility_probe(frame, partial, gamma, args.budget).to_json()


def cmd_defn(args):
    data = _json_file(args.structure)
    codes = data["universe"] if isinstance(data, dict) else data
    X = dfn.EStructure.of(codes)
    policy = dfn.parse_policy(args.policy)
    fam = dfn.defn(X, policy, budget=args.budget)
    ordered = sorted((sorted(s) for s in fam), key=lambda s: (len(s), s))
    return {"universe": list(X.universe), "policy": str(policy), "count": len(fam),
            "family": ordered, "isPowerset": fam == dfn.powerset(X)}


def cmd_hierarchy(args):
    levels = dfn.hierarchy(args.kind, args.steps, budget=args.budget)
    return {"kind": args.kind.upper(), "steps": args.steps,
            "levels": [{"index": i, "size": len(X), "universe": list(X.universe), "text": str(X)}
                       for i, X in enumerate(levels)]}


def cmd_sigma(args):
    text = args.text if args.text is not None else _read(args.formula)
    f = dfn.parse_set_formula(text)
    p = f if dfn.is_prenex(f) else dfn.prenex(f)
    return {"prenex": dfn.print_set_formula(p), **dfn.sigma_classify(p).to_json()}


def cmd_walkthrough(args):
    from .walkthrough import report
    return report(args.seed)


COMMANDS = {
    "degree": cmd_degree, "reduce-type": cmd_reduce_type, "parse": cmd_parse,
    "typecheck": cmd_typecheck, "classify": cmd_classify, "frame": cmd_frame,
    "cardinality": cmd_cardinality, "check-axiom": cmd_check_axiom, "cantor": cmd_cantor,
    "smuggle": cmd_smuggle, "rm-pipeline": cmd_rm_pipeline, "gallin": cmd_gallin,
    "extension": cmd_extension, "probe": cmd_probe, "defn": cmd_defn,
    "hierarchy": cmd_hierarchy, "sigma": cmd_sigma, "walkthrough": cmd_walkthrough,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intensio", description="Intensional type theory toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="domain cap (default 10^6 or INTENSIO_CAP)")
    common.add_argument("--out", help="write output here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    def frame_args(sp):
        sp.add_argument("--frame", help="frame JSON file")
        sp.add_argument("--kind", choices=["standard", "kaplan", "custom"])
        sp.add_argument("--E", type=int, default=2)
        sp.add_argument("--W", type=int, default=1)

    def text_or_file(sp, flag="file"):
        sp.add_argument(flag, nargs="?", default="-")
        sp.add_argument("--text")

    sp = add("degree", "degree of a type")
    sp.add_argument("type")
    sp.add_argument("--json", action="store_true")
    sp = add("reduce-type", "normal form under the rejected type-reduction rewrite")
    sp.add_argument("type")
    text_or_file(add("parse", "parse and print a formula"))
    text_or_file(add("typecheck", "type-check a formula"))
    sp = add("classify", "classify a schema instance")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--explain", action="store_true")
    sp = add("frame", "describe a frame")
    frame_args(sp)
    sp.add_argument("--type", action="append")
    sp = add("cardinality", "exact domain sizes")
    sp.add_argument("--kind", choices=["standard", "kaplan"], default="kaplan")
    sp.add_argument("--E", type=int, required=True)
    sp.add_argument("--W", type=int, default=1)
    sp.add_argument("--type")
    sp = add("check-axiom", "check one axiom instance")
    frame_args(sp)
    sp.add_argument("--axiom", required=True, choices=sorted(axioms.AXIOMS))
    sp.add_argument("--type", action="append")
    for name, help_ in (("cantor", "diagonal refutation of an injection"),
                        ("smuggle", "diagonal via constant-map detour")):
        sp = add(name, help_)
        frame_args(sp)
        sp.add_argument("--type", default="e")
        sp.add_argument("--iota", help="JSON list of indices into D_a, one per concept")
        if name == "cantor":
            sp.add_argument("--all", action="store_true")
        else:
            sp.add_argument("--random", type=int, default=0)
            sp.add_argument("--seed", type=int, default=0)
    frame_args(add("rm-pipeline", "walk the proposition paradox on a frame"))
    sp = add("gallin", "Gallin axioms via representation")
    frame_args(sp)
    sp.add_argument("--type", action="append")
    sp = add("extension", "one extension step")
    sp.add_argument("--partial", required=True)
    sp.add_argument("--h", required=True)
    sp = add("probe", "iterate extension steps from the empty concept")
    sp.add_argument("--partial", required=True)
    sp.add_argument("--budget", type=int, default=100)
    sp = add("defn", "definable subsets of a finite structure")
    sp.add_argument("--structure", required=True)
    sp.add_argument("--policy", default="with-params")
    sp.add_argument("--budget", type=int, default=dfn.DEFAULT_BUDGET)
    sp = add("hierarchy", "finite stages of L or V")
    sp.add_argument("--kind", default="L")
    sp.add_argument("--steps", type=int, default=3)
    sp.add_argument("--budget", type=int, default=dfn.DEFAULT_BUDGET)
    sp = add("sigma", "quantifier-block classification")
    sp.add_argument("--formula", default="-")
    sp.add_argument("--text")
    sp = add("walkthrough", "Markdown report of the worked derivations")
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        result = COMMANDS[args.command](args)
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError, KeyError, OSError, TooLarge, Unpopulated,
            models.ModelError, schema.MalformedInstance, dfn.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
