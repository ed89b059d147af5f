"""Typed terms and formulas of the object language.

Terms are closed under extensional application and the representation
operator ``rep``.  Presentation (``pres``) and intensional application
(``iapp``) are partial, so they appear only as relation atoms.  Identity
(``=``) is untyped: it may relate terms of different types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .sexpr import ParseError, Scanner
from .types import Fun, Sense, T, Type, degree, read_type


# -- terms -----------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    bit: int

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise ValueError("truth constants are 0 and 1")


@dataclass(frozen=True)
class Var:
    name: str
    type: Type


@dataclass(frozen=True)
class EApp:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Rep:
    arg: "Term"


Term = Union[Const, Var, EApp, Rep]
ZERO = Const(0)
ONE = Const(1)


# -- formulas --------------------------------------------------------------

@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Pres:
    """``Δ_τ(sense) = denot``."""
    type: Type
    sense: Term
    denot: Term


@dataclass(frozen=True)
class IApp:
    """``fun⟨arg⟩ = result`` with ``fun: (a b)'``, ``arg: a'``, ``result: b'``."""
    a: Type
    b: Type
    fun: Term
    arg: Term
    result: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Or:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Implies:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Forall:
    var: Var
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: Var
    body: "Formula"


Formula = Union[Eq, Pres, IApp, Not, And, Or, Implies, Forall, Exists]
Atom = (Eq, Pres, IApp)
Binary = (And, Or, Implies)
Quant = (Forall, Exists)


def conj(*parts: Formula) -> Formula:
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(*parts: Formula) -> Formula:
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def iff(lhs: Formula, rhs: Formula) -> Formula:
    return And(Implies(lhs, rhs), Implies(rhs, lhs))


def forall(vs: Iterable[Var], body: Formula) -> Formula:
    for v in reversed(list(vs)):
        body = Forall(v, body)
    return body


def exists(vs: Iterable[Var], body: Formula) -> Formula:
    for v in reversed(list(vs)):
        body = Exists(v, body)
    return body


def app(f: Term, *args: Term) -> Term:
    for a in args:
        f = EApp(f, a)
    return f


# -- typing ----------------------------------------------------------------

class TypeCheckError(TypeError):
    def __init__(self, message: str, path: tuple = ()):
        where = "/".join(str(p) for p in path)
        super().__init__(f"{message} (at {where or 'root'})")
        self.message = message
        self.path = path


@dataclass
class Context:
    """Ordered variable declarations with unique names."""
    decls: list = field(default_factory=list)

    def __post_init__(self):
        names = [n for n, _ in self.decls]
        if len(set(names)) != len(names):
            raise ValueError("duplicate declaration in context")
        self._map = dict(self.decls)

    @classmethod
    def of(cls, *vs: Var) -> "Context":
        return cls([(v.name, v.type) for v in vs])

    def lookup(self, name: str):
        return self._map.get(name)

    def extend(self, v: Var) -> "Context":
        decls = [(n, t) for n, t in self.decls if n != v.name]
        return Context(decls + [(v.name, v.type)])

    def __contains__(self, name: str) -> bool:
        return name in self._map


def type_of(term: Term) -> Type:
    """Type of a term from its own annotations; raises on ill-typed application."""
    return _type_of(term, ())


def _type_of(term: Term, path: tuple) -> Type:
    if isinstance(term, Const):
        return T
    if isinstance(term, Var):
        return term.type
    if isinstance(term, Rep):
        return Sense(_type_of(term.arg, path + ("rep",)))
    ft = _type_of(term.fun, path + ("fun",))
    at = _type_of(term.arg, path + ("arg",))
    if not isinstance(ft, Fun):
        raise TypeCheckError(f"cannot apply a term of type {ft}", path)
    if ft.domain != at:
        raise TypeCheckError(f"expected {ft.domain}, got {at}", path + ("arg",))
    return ft.codomain


def typecheck_term(ctx: Context, term: Term, path: tuple = ()) -> Type:
    for v in term_vars(term):
        declared = ctx.lookup(v.name)
        if declared is None:
            raise TypeCheckError(f"unbound variable {v.name}", path)
        if declared != v.type:
            raise TypeCheckError(f"variable {v.name} declared {declared}, used at {v.type}", path)
    tp = _type_of(term, path)
    bound = max((degree(v.type) for v in term_vars(term)), default=1)
    assert degree(tp) <= max(bound, 1), "term raised degree"
    return tp


@dataclass(frozen=True)
class Diagnostic:
    path: tuple
    message: str

    def __str__(self) -> str:
        return f"{'/'.join(map(str, self.path)) or 'root'}: {self.message}"


def typecheck_formula(ctx: Context, f: Formula) -> list[Diagnostic]:
    """All typing problems in ``f``; an empty list means well-typed."""
    out: list[Diagnostic] = []
    _check(ctx, f, (), out)
    return out


def well_typed(ctx: Context, f: Formula) -> bool:
    return not typecheck_formula(ctx, f)


def _slot(ctx, term, want, label, path, out):
    try:
        got = typecheck_term(ctx, term, path + (label,))
    except TypeCheckError as exc:
        out.append(Diagnostic(exc.path, exc.message))
        return
    if want is not None and got != want:
        out.append(Diagnostic(path + (label,), f"{label} slot needs type {want}, got {got}"))


def _check(ctx: Context, f: Formula, path: tuple, out: list) -> None:
    if isinstance(f, Eq):
        _slot(ctx, f.lhs, None, "lhs", path, out)
        _slot(ctx, f.rhs, None, "rhs", path, out)
    elif isinstance(f, Pres):
        _slot(ctx, f.sense, Sense(f.type), "sense", path, out)
        _slot(ctx, f.denot, f.type, "denot", path, out)
    elif isinstance(f, IApp):
        _slot(ctx, f.fun, Sense(Fun(f.a, f.b)), "fun", path, out)
        _slot(ctx, f.arg, Sense(f.a), "arg", path, out)
        _slot(ctx, f.result, Sense(f.b), "result", path, out)
    elif isinstance(f, Not):
        _check(ctx, f.body, path + ("not",), out)
    elif isinstance(f, Binary):
        tag = type(f).__name__.lower()
        _check(ctx, f.lhs, path + (tag, 0), out)
        _check(ctx, f.rhs, path + (tag, 1), out)
    elif isinstance(f, Quant):
        tag = type(f).__name__.lower()
        _check(ctx.extend(f.var), f.body, path + (f"{tag} {f.var.name}",), out)
    else:
        raise TypeError(f"not a formula: {f!r}")


# -- variables and substitution --------------------------------------------

def term_vars(term: Term) -> Iterator[Var]:
    if isinstance(term, Var):
        yield term
    elif isinstance(term, EApp):
        yield from term_vars(term.fun)
        yield from term_vars(term.arg)
    elif isinstance(term, Rep):
        yield from term_vars(term.arg)


def _atom_terms(f) -> tuple:
    if isinstance(f, Eq):
        return (f.lhs, f.rhs)
    if isinstance(f, Pres):
        return (f.sense, f.denot)
    return (f.fun, f.arg, f.result)


def free_vars(x) -> frozenset:
    """Free variables of a term or formula, as ``Var`` objects."""
    if isinstance(x, (Const, Var, EApp, Rep)):
        return frozenset(term_vars(x))
    if isinstance(x, Atom):
        return frozenset(v for t in _atom_terms(x) for v in term_vars(t))
    if isinstance(x, Not):
        return free_vars(x.body)
    if isinstance(x, Binary):
        return free_vars(x.lhs) | free_vars(x.rhs)
    return frozenset(v for v in free_vars(x.body) if v.name != x.var.name)


def bound_vars(f: Formula) -> list[Var]:
    """Quantified variables in pre-order."""
    if isinstance(f, Atom):
        return []
    if isinstance(f, Not):
        return bound_vars(f.body)
    if isinstance(f, Binary):
        return bound_vars(f.lhs) + bound_vars(f.rhs)
    return [f.var] + bound_vars(f.body)


def subterms(f: Formula) -> Iterator:
    """Every atom term and subterm in the formula."""
    def walk(t):
        yield t
        if isinstance(t, EApp):
            yield from walk(t.fun)
            yield from walk(t.arg)
        elif isinstance(t, Rep):
            yield from walk(t.arg)

    if isinstance(f, Atom):
        for t in _atom_terms(f):
            yield from walk(t)
    elif isinstance(f, Not):
        yield from subterms(f.body)
    elif isinstance(f, Binary):
        yield from subterms(f.lhs)
        yield from subterms(f.rhs)
    else:
        yield from subterms(f.body)


def atoms(f: Formula) -> Iterator:
    if isinstance(f, Atom):
        yield f
    elif isinstance(f, Not):
        yield from atoms(f.body)
    elif isinstance(f, Binary):
        yield from atoms(f.lhs)
        yield from atoms(f.rhs)
    else:
        yield from atoms(f.body)


def subst_term(t: Term, v: Var, r: Term) -> Term:
    if isinstance(t, Var):
        return r if t == v else t
    if isinstance(t, EApp):
        return EApp(subst_term(t.fun, v, r), subst_term(t.arg, v, r))
    if isinstance(t, Rep):
        return Rep(subst_term(t.arg, v, r))
    return t


def _fresh(base: str, taken: set) -> str:
    for i in itertools.count(1):
        name = f"{base}_{i}"
        if name not in taken:
            return name


def substitute(f: Formula, v: Var, r: Term) -> Formula:
    """Capture-avoiding substitution of ``r`` for free occurrences of ``v``."""
    rt = type_of(r)
    if rt != v.type:
        raise TypeCheckError(f"cannot substitute a {rt} term for {v.name}: {v.type}")
    return _subst(f, v, r, {w.name for w in free_vars(r)})


def _subst(f, v, r, rnames):
    if isinstance(f, Eq):
        return Eq(subst_term(f.lhs, v, r), subst_term(f.rhs, v, r))
    if isinstance(f, Pres):
        return Pres(f.type, subst_term(f.sense, v, r), subst_term(f.denot, v, r))
    if isinstance(f, IApp):
        return IApp(f.a, f.b, *(subst_term(t, v, r) for t in (f.fun, f.arg, f.result)))
    if isinstance(f, Not):
        return Not(_subst(f.body, v, r, rnames))
    if isinstance(f, Binary):
        return type(f)(_subst(f.lhs, v, r, rnames), _subst(f.rhs, v, r, rnames))
    if f.var.name == v.name:
        return f
    if v not in free_vars(f.body):
        return f
    var, body = f.var, f.body
    if var.name in rnames:
        taken = rnames | {w.name for w in free_vars(body)} | {w.name for w in bound_vars(body)}
        renamed = Var(_fresh(var.name, taken), var.type)
        body = _subst(body, var, renamed, {renamed.name})
        var = renamed
    return type(f)(var, _subst(body, v, r, rnames))


def rename_bound(f: Formula, mapping: dict) -> Formula:
    """Rename bound variables by ``mapping`` (old name -> new name)."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Not(rename_bound(f.body, mapping))
    if isinstance(f, Binary):
        return type(f)(rename_bound(f.lhs, mapping), rename_bound(f.rhs, mapping))
    new = mapping.get(f.var.name)
    if new is None:
        return type(f)(f.var, rename_bound(f.body, mapping))
    nv = Var(new, f.var.type)
    body = _subst(f.body, f.var, nv, {new})
    return type(f)(nv, rename_bound(body, mapping))


# -- concrete syntax -------------------------------------------------------

_RESERVED = {"0", "1", "app", "rep", "=", "pres", "iapp", "not", "and", "or",
             "implies", "forall", "exists", "decl"}


def print_term(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.bit)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, EApp):
        return f"(app {print_term(t.fun)} {print_term(t.arg)})"
    return f"(rep {print_term(t.arg)})"


def _print(f: Formula) -> str:
    if isinstance(f, Eq):
        return f"(= {print_term(f.lhs)} {print_term(f.rhs)})"
    if isinstance(f, Pres):
        return f"(pres {f.type} {print_term(f.sense)} {print_term(f.denot)})"
    if isinstance(f, IApp):
        return (f"(iapp {f.a} {f.b} {print_term(f.fun)} "
                f"{print_term(f.arg)} {print_term(f.result)})")
    if isinstance(f, Not):
        return f"(not {_print(f.body)})"
    if isinstance(f, Binary):
        return f"({type(f).__name__.lower()} {_print(f.lhs)} {_print(f.rhs)})"
    return f"({type(f).__name__.lower()} ({f.var.name} {f.var.type}) {_print(f.body)})"


def print_formula(f: Formula, decl: bool = True) -> str:
    """Canonical text; free variables are declared in a leading ``decl`` block."""
    body = _print(f)
    fv = sorted(free_vars(f), key=lambda v: (v.name, str(v.type)))
    if decl and fv:
        head = " ".join(f"({v.name} {v.type})" for v in fv)
        return f"(decl {head} {body})"
    return body


def read_term(sc: Scanner, scope: dict) -> Term:
    if sc.peek() == "(":
        start = sc.pos
        sc.pos += 1
        head = sc.keyword("app", "rep")
        if head == "app":
            f = read_term(sc, scope)
            a = read_term(sc, scope)
            sc.expect(")")
            return EApp(f, a)
        t = read_term(sc, scope)
        sc.expect(")")
        return Rep(t)
    start = sc.pos
    name = sc.symbol()
    if name == "0":
        return ZERO
    if name == "1":
        return ONE
    if name in _RESERVED:
        sc.pos = start
        raise sc.error(f"unexpected keyword {name!r}")
    tp = scope.get(name)
    if tp is None:
        sc.pos = start
        sc.skip_ws()
        raise sc.error(f"undeclared variable {name!r}")
    return Var(name, tp)


def read_binding(sc: Scanner) -> Var:
    sc.expect("(")
    start = sc.pos
    name = sc.symbol()
    if name in _RESERVED:
        sc.pos = start
        sc.skip_ws()
        raise sc.error(f"{name!r} cannot be a variable name")
    tp = read_type(sc)
    sc.expect(")")
    return Var(name, tp)


def read_formula(sc: Scanner, scope: dict) -> Formula:
    sc.expect("(")
    head = sc.keyword("=", "pres", "iapp", "not", "and", "or", "implies", "forall", "exists")
    if head == "=":
        out: Formula = Eq(read_term(sc, scope), read_term(sc, scope))
    elif head == "pres":
        tp = read_type(sc)
        out = Pres(tp, read_term(sc, scope), read_term(sc, scope))
    elif head == "iapp":
        a = read_type(sc)
        b = read_type(sc)
        out = IApp(a, b, read_term(sc, scope), read_term(sc, scope), read_term(sc, scope))
    elif head == "not":
        out = Not(read_formula(sc, scope))
    elif head in ("and", "or", "implies"):
        cls = {"and": And, "or": Or, "implies": Implies}[head]
        out = cls(read_formula(sc, scope), read_formula(sc, scope))
    else:
        v = read_binding(sc)
        inner = dict(scope)
        inner[v.name] = v.type
        body = read_formula(sc, inner)
        out = Forall(v, body) if head == "forall" else Exists(v, body)
    sc.expect(")")
    return out


def read_document(sc: Scanner, scope: dict | None = None) -> tuple[Context, Formula]:
    scope = dict(scope or {})
    decls: list = []
    save = sc.pos
    if sc.accept("("):
        is_decl = sc.peek() != "(" and sc.symbol() == "decl"
        if not is_decl:
            sc.pos = save
    else:
        is_decl = False
    if is_decl:
        while sc.peek() == "(":
            mark = sc.pos
            sc.pos += 1
            word_start = sc.pos
            try:
                first = sc.symbol()
            except ParseError:
                first = ""
            sc.pos = mark
            if first in _RESERVED:
                break
            v = read_binding(sc)
            if any(n == v.name for n, _ in decls):
                raise sc.error(f"duplicate declaration of {v.name!r}")
            decls.append((v.name, v.type))
            scope[v.name] = v.type
        body = read_formula(sc, scope)
        sc.expect(")")
    else:
        body = read_formula(sc, scope)
    return Context(decls), body


def parse_document(text: str, scope: dict | None = None) -> tuple[Context, Formula]:
    sc = Scanner(text)
    out = read_document(sc, scope)
    sc.finish()
    return out


def parse_formula(text: str, scope: dict | None = None) -> Formula:
    """Parse a formula, optionally wrapped in ``(decl (x TYPE) ... BODY)``.

    ``scope`` maps extra free-variable names to their types.
    """
    return parse_document(text, scope)[1]


def parse_term(text: str, scope: dict) -> Term:
    sc = Scanner(text)
    t = read_term(sc, scope)
    sc.finish()
    return t
