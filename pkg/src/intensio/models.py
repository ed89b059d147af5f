"""Finite frames: value universe, domains, cardinalities, and evaluation.

One universe of values serves every type, so identity between entities of
different types is ordinary structural equality.  Three frame kinds exist:

* ``standard`` -- objects, truth values, full function spaces; no senses.
* ``kaplan``   -- senses of type ``a'`` are graphs from worlds into ``D_a``;
  presentation evaluates at the designated world ``w0``.
* ``custom``   -- sense domains, presentation, representation, and
  intensional application given by explicit tables.
"""

from __future__ import annotations

import itertools
import json
import os
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .lang import (And, Const, EApp, Eq, Exists, Forall, Formula, IApp, Implies, Not,
                   Or, Pres, Rep, Term, Var, type_of)
from .types import Base, E, Fun, Sense, T, Type, parse_type

DEFAULT_CAP = 10 ** 6
MAX_BITS = 1 << 32


def default_cap() -> int:
    env = os.environ.get("INTENSIO_CAP")
    return int(env) if env else DEFAULT_CAP


# -- errors ----------------------------------------------------------------

class ModelError(Exception):
    pass


class TooLarge(ModelError):
    def __init__(self, tp: Type, size):
        shown = render_count(size) if isinstance(size, int) else size
        super().__init__(f"domain of {tp} has {shown} values, over the cap")
        self.type = tp
        self.size = size


class Unpopulated(ModelError):
    def __init__(self, tp: Type):
        super().__init__(f"type {tp} has no domain in this frame")
        self.type = tp


class Uninterpreted(ModelError):
    pass


class FrameError(ModelError):
    pass


class CardinalityOverflow(OverflowError):
    pass


# -- values ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Truth:
    bit: int

    def __post_init__(self):
        object.__setattr__(self, "_h", hash((0, self.bit)))

    def __eq__(self, other) -> bool:
        return other.__class__ is Truth and other.bit == self.bit

    def __hash__(self) -> int:
        return self._h

    @property
    def key(self):
        return (0, self.bit)

    def __str__(self) -> str:
        return str(self.bit)


@dataclass(frozen=True, eq=False)
class Atom:
    kind: str  # "obj" or "world"
    id: int

    def __post_init__(self):
        object.__setattr__(self, "_h", hash((self.kind, self.id)))

    def __eq__(self, other) -> bool:
        return other.__class__ is Atom and other.id == self.id and other.kind == self.kind

    def __hash__(self) -> int:
        return self._h

    @property
    def key(self):
        return (1 if self.kind == "obj" else 2, self.id)

    def __str__(self) -> str:
        return f"{'o' if self.kind == 'obj' else 'w'}{self.id}"


class Graph:
    """Finite function graph; pairs are kept sorted by argument."""

    __slots__ = ("pairs", "_hash", "_map", "_key")

    def __init__(self, pairs: Iterable):
        ps = tuple(sorted(pairs, key=lambda p: p[0].key))
        self.pairs = ps
        self._map = dict(ps)
        if len(self._map) != len(ps):
            raise ValueError("graph has a repeated argument")
        self._hash = hash(ps)
        self._key = None

    @classmethod
    def _trusted(cls, pairs: tuple) -> "Graph":
        g = cls.__new__(cls)
        g.pairs = pairs
        g._map = dict(pairs)
        g._hash = hash(pairs)
        g._key = None
        return g

    @property
    def key(self):
        if self._key is None:
            self._key = (3, tuple((a.key, b.key) for a, b in self.pairs))
        return self._key

    def __call__(self, arg):
        try:
            return self._map[arg]
        except KeyError:
            raise ModelError(f"{arg} is outside the domain of {self}") from None

    def get(self, arg, default=None):
        return self._map.get(arg, default)

    def __contains__(self, arg) -> bool:
        return arg in self._map

    def args(self) -> tuple:
        return tuple(a for a, _ in self.pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._hash == other._hash and self.pairs == other.pairs

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        return f"Graph({self})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{a}↦{b}" for a, b in self.pairs) + "}"


Value = Union[Truth, Atom, Graph]
ZERO_V = Truth(0)
ONE_V = Truth(1)


def obj(i: int) -> Atom:
    return Atom("obj", i)


def world(i: int) -> Atom:
    return Atom("world", i)


def vkey(v: Value):
    return v.key


def graph_of(fn, domain: Iterable[Value]) -> Graph:
    return Graph._trusted(tuple((x, fn(x)) for x in domain))


def characteristic(domain: Iterable[Value], members: Iterable[Value]) -> Graph:
    ms = set(members)
    return graph_of(lambda x: ONE_V if x in ms else ZERO_V, domain)


def support(g: Graph) -> list:
    """Arguments a concept maps to 1."""
    return [a for a, b in g.pairs if b == ONE_V]


def value_to_json(v: Value):
    if isinstance(v, Truth):
        return v.bit
    if isinstance(v, Atom):
        return str(v)
    return [[value_to_json(a), value_to_json(b)] for a, b in v.pairs]


def value_from_json(x) -> Value:
    if isinstance(x, bool) or x in (0, 1) and isinstance(x, int):
        return Truth(int(x))
    if isinstance(x, str) and len(x) > 1 and x[0] in "ow" and x[1:].isdigit():
        return Atom("obj" if x[0] == "o" else "world", int(x[1:]))
    if isinstance(x, list):
        return Graph((value_from_json(a), value_from_json(b)) for a, b in x)
    raise ValueError(f"cannot read a value from {x!r}")


# -- exact cardinalities ---------------------------------------------------

def power(base: int, exp: int) -> int:
    if base <= 1 or exp == 0:
        return 1 if exp == 0 else base
    if base.bit_length() * exp > MAX_BITS:
        raise CardinalityOverflow(f"{render_count(base)}^{render_count(exp)} is too large to represent")
    if base & (base - 1) == 0:
        return 1 << ((base.bit_length() - 1) * exp)
    return base ** exp


def count(kind: str, n_objects: int, n_worlds: int, tp: Type, sense_sizes=None) -> int:
    """Exact ``|D_tp|`` from the frame shape alone, without enumeration."""
    if isinstance(tp, Base):
        return n_objects if tp == E else 2
    if isinstance(tp, Fun):
        return power(count(kind, n_objects, n_worlds, tp.codomain, sense_sizes),
                     count(kind, n_objects, n_worlds, tp.domain, sense_sizes))
    if kind == "kaplan":
        return power(count(kind, n_objects, n_worlds, tp.inner, sense_sizes), n_worlds)
    if kind == "custom":
        return (sense_sizes or {}).get(tp, 0)
    return 0


def render_count(n: int):
    """JSON-friendly rendering: plain int when small, else ``"2^k"`` or decimal text."""
    if n < (1 << 53):
        return n
    if n & (n - 1) == 0:
        return f"2^{n.bit_length() - 1}"
    if n.bit_length() > 10000:
        return f"~2^{n.bit_length() - 1}"
    return str(n)


@dataclass(frozen=True)
class CardinalityReport:
    n_objects: int
    n_worlds: int
    sizes: dict  # type string -> exact int
    fine_grained_possible: bool  # |D_e| <= |D_t'|
    verdict: str
    chain_holds: bool

    def to_json(self) -> dict:
        return {
            "E": self.n_objects,
            "W": self.n_worlds,
            "sizes": {k: render_count(v) for k, v in self.sizes.items()},
            "fineGrainedPossible": self.fine_grained_possible,
            "verdict": self.verdict,
            "chainHolds": self.chain_holds,
        }


PROP = Sense(T)
PROP_COLLECTION = Fun(PROP, T)


def kaplan_report(n_objects: int, n_worlds: int) -> CardinalityReport:
    """Which of the two cardinality branches a Kaplan frame falls into.

    If ``|D_t'| < |D_e|`` there is no injection from objects into
    propositions.  Otherwise the chain
    ``|D_(t't)'| >= |D_t't| > |D_t'| >= |D_e|`` leaves too many senses of
    proposition collections for them all to be objects.
    """
    ts = [E, PROP, PROP_COLLECTION, Sense(PROP_COLLECTION)]
    sizes = {str(tp): count("kaplan", n_objects, n_worlds, tp) for tp in ts}
    de, dp, dc, dcs = (sizes[str(tp)] for tp in ts)
    chain = dcs >= dc > dp >= de
    if dp < de:
        verdict = f"fine-grained fails: |D_t'| = {dp} < {de} = |D_e|"
    else:
        verdict = (f"senses-are-objects fails: |D_(t' t)'| = {render_count(dcs)} "
                   f"> {de} = |D_e|")
    return CardinalityReport(n_objects, n_worlds, sizes, dp >= de, verdict, chain)


# -- frames ----------------------------------------------------------------

def _sorted(vals: Iterable[Value]) -> tuple:
    return tuple(sorted(set(vals), key=vkey))


class Frame:
    """A finite frame.  Treat instances as immutable once built."""

    def __init__(self, kind: str, n_objects: int, n_worlds: int = 0, w0: int = 0,
                 cap: int | None = None, domains=None, delta=None, nabla=None, iapp=None):
        if kind not in ("standard", "kaplan", "custom"):
            raise FrameError(f"unknown frame kind {kind!r}")
        if n_objects < 0:
            raise FrameError("E must be non-negative")
        if kind == "kaplan":
            if n_worlds < 1:
                raise FrameError("a kaplan frame needs at least one world")
            if not 0 <= w0 < n_worlds:
                raise FrameError("w0 must index a declared world")
        self.kind = kind
        self.n_objects = n_objects
        self.n_worlds = n_worlds if kind == "kaplan" else 0
        self.w0 = w0 if kind == "kaplan" else 0
        self.cap = cap if cap is not None else default_cap()
        self.objects = tuple(obj(i) for i in range(n_objects))
        self.worlds = tuple(world(i) for i in range(self.n_worlds))
        self.sense_domains = {tp: _sorted(vs) for tp, vs in (domains or {}).items()}
        self.delta = {tp: {s: _sorted(rs) for s, rs in m.items()} for tp, m in (delta or {}).items()}
        self.nabla_tables = {tp: dict(m) for tp, m in (nabla or {}).items()}
        self.iapp_tables = {ab: {k: _sorted(rs) for k, rs in m.items()} for ab, m in (iapp or {}).items()}
        self._memo: dict = {}
        self._lock = threading.RLock()
        if kind != "custom" and (domains or delta or nabla or iapp):
            raise FrameError("tables are only allowed in custom frames")
        if kind == "custom":
            self._validate()

    # construction helpers
    @classmethod
    def standard(cls, n_objects: int, cap: int | None = None) -> "Frame":
        return cls("standard", n_objects, cap=cap)

    @classmethod
    def kaplan(cls, n_objects: int, n_worlds: int, w0: int = 0, cap: int | None = None) -> "Frame":
        return cls("kaplan", n_objects, n_worlds, w0, cap=cap)

    def _validate(self) -> None:
        for tp in self.sense_domains:
            if not isinstance(tp, Sense):
                raise FrameError(f"custom domains are given for sense types only, not {tp}")
        for tp, m in self.delta.items():
            dom = set(self.sense_domains.get(Sense(tp), ()))
            for s, refs in m.items():
                if s not in dom:
                    raise FrameError(f"delta at {tp}: {s} is not in D_{Sense(tp)}")
                for r in refs:
                    if not self.in_domain(tp, r):
                        raise FrameError(f"delta at {tp}: {r} is not in D_{tp}")
        for tp, m in self.nabla_tables.items():
            dom = set(self.sense_domains.get(Sense(tp), ()))
            for f, s in m.items():
                if s not in dom:
                    raise FrameError(f"nabla at {tp}: {s} is not in D_{Sense(tp)}")
                if self.present(tp, s) != (f,):
                    raise FrameError(f"nabla at {tp}: delta of nabla({f}) is not exactly {f}")
        for (a, b), m in self.iapp_tables.items():
            for (f, x), rs in m.items():
                for r in rs:
                    if r not in set(self.sense_domains.get(Sense(b), ())):
                        raise FrameError(f"iapp at ({a} {b}): {r} is not in D_{Sense(b)}")

    # domains
    def cardinality(self, tp: Type) -> int:
        sizes = {t: len(v) for t, v in self.sense_domains.items()}
        return count(self.kind, self.n_objects, self.n_worlds, tp, sizes)

    def _iter(self, tp: Type) -> Iterator[Value]:
        if tp == E:
            yield from self.objects
        elif tp == T:
            yield ZERO_V
            yield ONE_V
        elif isinstance(tp, Fun):
            dom = self.materialize(tp.domain)
            cod = self.materialize(tp.codomain)
            for vals in itertools.product(cod, repeat=len(dom)):
                yield Graph._trusted(tuple(zip(dom, vals)))
        elif self.kind == "kaplan":
            inner = self.materialize(tp.inner)
            for vals in itertools.product(inner, repeat=len(self.worlds)):
                yield Graph._trusted(tuple(zip(self.worlds, vals)))
        elif self.kind == "custom":
            yield from self.sense_domains.get(tp, ())
        else:
            raise Unpopulated(tp)

    def materialize(self, tp: Type) -> tuple:
        """All of ``D_tp`` in canonical order; memoized."""
        hit = self._memo.get(tp)
        if hit is not None:
            return hit
        if isinstance(tp, Sense) and self.kind == "standard":
            raise Unpopulated(tp)
        try:
            size = self.cardinality(tp)
        except CardinalityOverflow:
            raise TooLarge(tp, "astronomically many") from None
        if size > self.cap:
            raise TooLarge(tp, size)
        with self._lock:
            hit = self._memo.get(tp)
            if hit is None:
                hit = tuple(self._iter(tp))
                self._memo[tp] = hit
        return hit

    def scan(self, tp: Type) -> Iterator[Value]:
        """Iterate ``D_tp`` lazily; raise TooLarge only after ``cap`` values."""
        if isinstance(tp, Sense) and self.kind == "standard":
            raise Unpopulated(tp)
        try:
            size = self.cardinality(tp)
        except CardinalityOverflow:
            size = None
        if size is not None and size <= self.cap:
            yield from self.materialize(tp)
            return
        for i, v in enumerate(self._iter(tp)):
            if i >= self.cap:
                raise TooLarge(tp, size if size is not None else "astronomically many")
            yield v

    def least(self, tp: Type) -> Value:
        """Canonically least member of ``D_tp`` without enumerating it."""
        if tp == E:
            if not self.objects:
                raise Unpopulated(tp)
            return self.objects[0]
        if tp == T:
            return ZERO_V
        if isinstance(tp, Fun):
            low = self.least(tp.codomain)
            return Graph._trusted(tuple((x, low) for x in self.materialize(tp.domain)))
        if self.kind == "kaplan":
            low = self.least(tp.inner)
            return Graph._trusted(tuple((w, low) for w in self.worlds))
        dom = self.sense_domains.get(tp, ()) if self.kind == "custom" else ()
        if not dom:
            raise Unpopulated(tp)
        return dom[0]

    def in_domain(self, tp: Type, v: Value) -> bool:
        if tp == E:
            return isinstance(v, Atom) and v.kind == "obj" and v.id < self.n_objects
        if tp == T:
            return isinstance(v, Truth)
        if isinstance(tp, Fun):
            if not isinstance(v, Graph):
                return False
            dom = self.materialize(tp.domain)
            return (len(v) == len(dom) and all(a in v for a in dom)
                    and all(self.in_domain(tp.codomain, b) for _, b in v.pairs))
        if self.kind == "kaplan":
            return (isinstance(v, Graph) and v.args() == self.worlds
                    and all(self.in_domain(tp.inner, b) for _, b in v.pairs))
        if self.kind == "custom":
            return v in set(self.sense_domains.get(tp, ()))
        return False

    # intensional primitives
    def present(self, tp: Type, sense: Value) -> tuple:
        """Everything the sense presents at type ``tp`` (empty when undefined)."""
        if self.kind == "kaplan":
            if isinstance(sense, Graph) and len(sense.pairs) == self.n_worlds:
                hit = sense._map.get(self.worlds[self.w0])
                if hit is not None:
                    return (hit,)
            return ()
        if self.kind == "custom":
            return self.delta.get(tp, {}).get(sense, ())
        return ()

    def nabla(self, tp: Type, v: Value) -> Value:
        if self.kind == "kaplan":
            return Graph._trusted(tuple((w, v) for w in self.worlds))
        if self.kind == "custom":
            table = self.nabla_tables.get(tp)
            if table is not None and v in table:
                return table[v]
        raise Uninterpreted(f"no representation of {v} at type {tp}")

    def has_nabla(self, tp: Type) -> bool:
        return self.kind == "kaplan" or (self.kind == "custom" and tp in self.nabla_tables)

    def iapp(self, a: Type, b: Type, f: Value, x: Value) -> tuple:
        """All results of intensionally applying ``f`` to ``x``."""
        if self.kind == "kaplan":
            if not (isinstance(f, Graph) and isinstance(x, Graph)):
                return ()
            fm, xm = f._map, x._map
            out = []
            for w in self.worlds:
                fw = fm.get(w)
                if not isinstance(fw, Graph):
                    return ()
                r = fw._map.get(xm.get(w))
                if r is None:
                    return ()
                out.append((w, r))
            return (Graph._trusted(tuple(out)),)
        if self.kind != "custom":
            return ()
        table = self.iapp_tables.get((a, b))
        if table is not None:
            return table.get((f, x), ())
        return self.derived_iapp(a, b, f, x)

    def derived_iapp(self, a: Type, b: Type, f: Value, x: Value) -> tuple:
        """Intensional application read off presentation and representation."""
        if not self.has_nabla(b):
            return ()
        out = set()
        for F in self.present(Fun(a, b), f):
            for X in self.present(a, x):
                if isinstance(F, Graph) and X in F:
                    try:
                        out.add(self.nabla(b, F(X)))
                    except Uninterpreted:
                        pass
        return _sorted(out)

    # serialization
    def to_json(self) -> dict:
        out = {"kind": self.kind, "E": self.n_objects, "W": self.n_worlds,
               "w0": self.w0, "domainCap": self.cap}
        if self.kind == "custom":
            out["custom"] = {
                "domains": {str(tp): [value_to_json(v) for v in vs]
                            for tp, vs in self.sense_domains.items()},
                "delta": {str(tp): [[value_to_json(s), value_to_json(r)]
                                    for s, rs in m.items() for r in rs]
                          for tp, m in self.delta.items()},
                "nabla": {str(tp): [[value_to_json(f), value_to_json(s)] for f, s in m.items()]
                          for tp, m in self.nabla_tables.items()},
                "iapp": {str(Fun(a, b)): [[value_to_json(f), value_to_json(x), value_to_json(r)]
                                          for (f, x), rs in m.items() for r in rs]
                         for (a, b), m in self.iapp_tables.items()},
            }
        return out

    def describe(self) -> str:
        if self.kind == "kaplan":
            return f"kaplan |E|={self.n_objects} |W|={self.n_worlds}"
        return f"{self.kind} |E|={self.n_objects}"


def frame_from_json(data: dict, cap: int | None = None) -> Frame:
    kind = data.get("kind")
    if kind is None or "E" not in data:
        raise FrameError("frame needs 'kind' and 'E'")
    if cap is None:
        cap = data.get("domainCap")
        if "INTENSIO_CAP" in os.environ:
            cap = default_cap()
    custom = data.get("custom") or {}
    domains, delta, nabla, iapp = {}, {}, {}, {}
    for k, vs in custom.get("domains", {}).items():
        domains[parse_type(k)] = [value_from_json(v) for v in vs]
    for k, pairs in custom.get("delta", {}).items():
        m: dict = {}
        for s, r in pairs:
            m.setdefault(value_from_json(s), []).append(value_from_json(r))
        delta[parse_type(k)] = m
    for k, pairs in custom.get("nabla", {}).items():
        nabla[parse_type(k)] = {value_from_json(f): value_from_json(s) for f, s in pairs}
    for k, triples in custom.get("iapp", {}).items():
        tp = parse_type(k)
        if not isinstance(tp, Fun):
            raise FrameError(f"iapp tables are keyed by function types, not {k}")
        m = {}
        for f, x, r in triples:
            m.setdefault((value_from_json(f), value_from_json(x)), []).append(value_from_json(r))
        iapp[(tp.domain, tp.codomain)] = m
    return Frame(kind, int(data["E"]), int(data.get("W", 0)), int(data.get("w0", 0)),
                 cap=cap, domains=domains, delta=delta, nabla=nabla, iapp=iapp)


def load_frame(path: str, cap: int | None = None) -> Frame:
    with open(path, encoding="utf-8") as fh:
        return frame_from_json(json.load(fh), cap)


# -- evaluation ------------------------------------------------------------

class EvalError(ModelError):
    pass


def eval_term(frame: Frame, env: dict, term: Term) -> Value:
    kind = type(term)
    if kind is Var:
        try:
            return env[term.name]
        except KeyError:
            raise EvalError(f"no value for {term.name}") from None
    if kind is EApp:
        f = eval_term(frame, env, term.fun)
        x = eval_term(frame, env, term.arg)
        if type(f) is not Graph:
            raise EvalError(f"cannot apply {f} to {x}")
        try:
            return f._map[x]
        except KeyError:
            raise EvalError(f"cannot apply {f} to {x}") from None
    if kind is Const:
        return ONE_V if term.bit else ZERO_V
    return frame.nabla(type_of(term.arg), eval_term(frame, env, term.arg))


def eval_formula(frame: Frame, env: dict, f: Formula) -> bool:
    """Classical satisfaction; quantifiers range over materialized domains."""
    kind = type(f)
    if kind is Eq:
        return eval_term(frame, env, f.lhs) == eval_term(frame, env, f.rhs)
    if kind is And:
        return eval_formula(frame, env, f.lhs) and eval_formula(frame, env, f.rhs)
    if kind is Not:
        return not eval_formula(frame, env, f.body)
    if kind is Or:
        return eval_formula(frame, env, f.lhs) or eval_formula(frame, env, f.rhs)
    if kind is Implies:
        return (not eval_formula(frame, env, f.lhs)) or eval_formula(frame, env, f.rhs)
    if kind is Pres:
        return eval_term(frame, env, f.denot) in frame.present(f.type, eval_term(frame, env, f.sense))
    if kind is IApp:
        fv, xv, rv = (eval_term(frame, env, t) for t in (f.fun, f.arg, f.result))
        return rv in frame.iapp(f.a, f.b, fv, xv)
    if kind not in (Forall, Exists):
        raise TypeError(f"not a formula: {f!r}")
    dom = frame.materialize(f.var.type)
    name = f.var.name
    inner = dict(env)
    body = f.body
    if kind is Forall:
        for v in dom:
            inner[name] = v
            if not eval_formula(frame, inner, body):
                return False
        return True
    for v in dom:
        inner[name] = v
        if eval_formula(frame, inner, body):
            return True
    return False


def random_custom_frame(rng, types: Iterable[Type] | None = None, max_objects: int = 3,
                        max_extra: int = 2, cap: int | None = None) -> Frame:
    """A custom frame with representation tables and derived intensional application.

    Every type in ``types`` gets a sense domain of fresh atoms, at least as
    large as its own domain.  Representation is a random injection into it,
    presentation inverts representation, and the spare senses either present
    a random referent or nothing at all.
    """
    types = list(types) if types is not None else list(CUSTOM_TYPES)
    n = rng.randint(1, max_objects)
    base = Frame.standard(n, cap=cap)
    next_id = n
    domains, delta, nabla = {}, {}, {}
    for tp in types:
        refs = base.materialize(tp)
        size = len(refs) + rng.randint(0, max_extra)
        senses = [obj(next_id + i) for i in range(size)]
        next_id += size
        rng.shuffle(senses)
        rep = dict(zip(refs, senses[:len(refs)]))
        pres = {s: [f] for f, s in rep.items()}
        for s in senses[len(refs):]:
            if rng.random() < 0.5:
                pres[s] = [rng.choice(refs)]
        domains[Sense(tp)] = senses
        delta[tp] = pres
        nabla[tp] = rep
    return Frame("custom", n, cap=cap, domains=domains, delta=delta, nabla=nabla)


CUSTOM_PAIRS = ((E, T), (T, T), (E, E), (T, E))
CUSTOM_TYPES = (E, T) + tuple(Fun(a, b) for a, b in CUSTOM_PAIRS)


def holds_in(frame: Frame, f: Formula, env: dict | None = None) -> bool:
    return eval_formula(frame, env or {}, f)


__all__ = [
    "Atom", "CardinalityOverflow", "CardinalityReport", "EvalError", "Frame", "FrameError",
    "Graph", "ModelError", "ONE_V", "PROP", "PROP_COLLECTION", "TooLarge", "Truth",
    "Uninterpreted", "Unpopulated", "Value", "ZERO_V", "characteristic", "count",
    "eval_formula", "eval_term", "frame_from_json", "graph_of", "holds_in", "kaplan_report",
    "load_frame", "obj", "random_custom_frame", "CUSTOM_PAIRS", "CUSTOM_TYPES", "power", "render_count", "support", "value_from_json",
    "value_to_json", "vkey", "world",
]
