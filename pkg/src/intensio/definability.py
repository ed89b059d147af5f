"""Definable subsets of finite membership structures.

Hereditarily finite sets are coded by Ackermann's bijection with the
naturals: ``code(S) = sum(2**code(x) for x in S)``, so ``x in y`` iff bit
``x`` of ``y`` is set.  A structure is a finite set of codes with the
membership relation restricted to it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .sexpr import Scanner

DEFAULT_BUDGET = 6


class BudgetExceeded(RuntimeError):
    pass


class ArityError(ValueError):
    pass


# -- hereditarily finite sets ----------------------------------------------

def members(code: int) -> list[int]:
    out, i = [], 0
    while code:
        if code & 1:
            out.append(i)
        code >>= 1
        i += 1
    return out


def encode(elems: Iterable[int]) -> int:
    out = 0
    for c in set(elems):
        out |= 1 << c
    return out


def is_member(x: int, y: int) -> bool:
    return (y >> x) & 1 == 1


@lru_cache(maxsize=None)
def rank(code: int) -> int:
    return max((rank(m) + 1 for m in members(code)), default=0)


def show(code: int) -> str:
    """Brace notation, e.g. ``{∅, {∅}}``."""
    if code == 0:
        return "∅"
    return "{" + ", ".join(show(m) for m in members(code)) + "}"


@dataclass(frozen=True)
class EStructure:
    universe: tuple  # sorted codes

    @classmethod
    def of(cls, codes: Iterable[int]) -> "EStructure":
        cs = sorted(set(int(c) for c in codes))
        if any(c < 0 for c in cs):
            raise ValueError("codes are non-negative")
        return cls(tuple(cs))

    def __len__(self) -> int:
        return len(self.universe)

    def __contains__(self, c: int) -> bool:
        return c in self.universe

    def code(self) -> int:
        return encode(self.universe)

    def is_transitive(self) -> bool:
        s = set(self.universe)
        return all(m in s for c in self.universe for m in members(c))

    def __str__(self) -> str:
        return "{" + ", ".join(show(c) for c in self.universe) + "}"


# -- set formulas ----------------------------------------------------------

@dataclass(frozen=True)
class SIn:
    left: str
    right: str


@dataclass(frozen=True)
class SEq:
    left: str
    right: str


@dataclass(frozen=True)
class SNot:
    body: "SetFormula"


@dataclass(frozen=True)
class SAnd:
    left: "SetFormula"
    right: "SetFormula"


@dataclass(frozen=True)
class SOr:
    left: "SetFormula"
    right: "SetFormula"


@dataclass(frozen=True)
class SImplies:
    left: "SetFormula"
    right: "SetFormula"


@dataclass(frozen=True)
class SExists:
    var: str
    body: "SetFormula"


@dataclass(frozen=True)
class SForall:
    var: str
    body: "SetFormula"


SetFormula = Union[SIn, SEq, SNot, SAnd, SOr, SImplies, SExists, SForall]
_BIN = (SAnd, SOr, SImplies)
_Q = (SExists, SForall)
_TAGS = {SAnd: "and", SOr: "or", SImplies: "implies", SExists: "exists", SForall: "forall"}


def set_free_vars(f: SetFormula) -> set:
    if isinstance(f, (SIn, SEq)):
        return {f.left, f.right}
    if isinstance(f, SNot):
        return set_free_vars(f.body)
    if isinstance(f, _BIN):
        return set_free_vars(f.left) | set_free_vars(f.right)
    return set_free_vars(f.body) - {f.var}


def big_or(parts: list) -> SetFormula:
    if not parts:
        return SNot(SEq("x", "x"))
    out = parts[0]
    for p in parts[1:]:
        out = SOr(out, p)
    return out


def big_and(parts: list) -> SetFormula:
    if not parts:
        return SEq("x", "x")
    out = parts[0]
    for p in parts[1:]:
        out = SAnd(out, p)
    return out


def read_set_formula(sc: Scanner) -> SetFormula:
    sc.expect("(")
    head = sc.keyword("in", "=", "not", "and", "or", "implies", "exists", "forall")
    if head in ("in", "="):
        a, b = sc.symbol(), sc.symbol()
        out: SetFormula = SIn(a, b) if head == "in" else SEq(a, b)
    elif head == "not":
        out = SNot(read_set_formula(sc))
    elif head in ("and", "or", "implies"):
        cls = {"and": SAnd, "or": SOr, "implies": SImplies}[head]
        out = cls(read_set_formula(sc), read_set_formula(sc))
    else:
        v = sc.symbol()
        body = read_set_formula(sc)
        out = SExists(v, body) if head == "exists" else SForall(v, body)
    sc.expect(")")
    return out


def parse_set_formula(text: str) -> SetFormula:
    sc = Scanner(text)
    f = read_set_formula(sc)
    sc.finish()
    return f


def print_set_formula(f: SetFormula) -> str:
    if isinstance(f, SIn):
        return f"(in {f.left} {f.right})"
    if isinstance(f, SEq):
        return f"(= {f.left} {f.right})"
    if isinstance(f, SNot):
        return f"(not {print_set_formula(f.body)})"
    if isinstance(f, _BIN):
        return f"({_TAGS[type(f)]} {print_set_formula(f.left)} {print_set_formula(f.right)})"
    return f"({_TAGS[type(f)]} {f.var} {print_set_formula(f.body)})"


# -- satisfaction ----------------------------------------------------------

def sat(X: EStructure, f: SetFormula, env: dict) -> bool:
    """``(X, in) |= f[env]`` with quantifiers ranging over ``X``."""
    missing = set_free_vars(f) - set(env)
    if missing:
        raise ArityError(f"no value for {', '.join(sorted(missing))}")
    for k, v in env.items():
        if v not in X:
            raise ArityError(f"{k} = {v} is not in the structure")
    return _sat(X.universe, f, dict(env))


def _sat(U: tuple, f, env: dict) -> bool:
    if isinstance(f, SIn):
        return is_member(env[f.left], env[f.right])
    if isinstance(f, SEq):
        return env[f.left] == env[f.right]
    if isinstance(f, SNot):
        return not _sat(U, f.body, env)
    if isinstance(f, SAnd):
        return _sat(U, f.left, env) and _sat(U, f.right, env)
    if isinstance(f, SOr):
        return _sat(U, f.left, env) or _sat(U, f.right, env)
    if isinstance(f, SImplies):
        return (not _sat(U, f.left, env)) or _sat(U, f.right, env)
    saved = env.get(f.var, None)
    had = f.var in env
    try:
        for c in U:
            env[f.var] = c
            r = _sat(U, f.body, env)
            if isinstance(f, SExists) and r:
                return True
            if isinstance(f, SForall) and not r:
                return False
        return isinstance(f, SForall)
    finally:
        if had:
            env[f.var] = saved
        else:
            env.pop(f.var, None)


def extension(X: EStructure, f: SetFormula, var: str = "x", params: dict | None = None) -> frozenset:
    """``{x in X : X |= f(x, params)}``."""
    params = dict(params or {})
    return frozenset(c for c in X.universe if sat(X, f, {**params, var: c}))


# -- definable families ----------------------------------------------------

@dataclass(frozen=True)
class Policy:
    kind: str              # "with-params", "no-params", "rank-at-most"
    k: int | None = None

    def __str__(self) -> str:
        return f"rank<={self.k}" if self.kind == "rank-at-most" else self.kind


WITH_PARAMS = Policy("with-params")
NO_PARAMS = Policy("no-params")


def rank_at_most(k: int) -> Policy:
    return Policy("rank-at-most", k)


def parse_policy(text: str) -> Policy:
    t = text.strip().lower()
    if t in ("with-params", "withparams"):
        return WITH_PARAMS
    if t in ("no-params", "noparams"):
        return NO_PARAMS
    for prefix in ("rank-at-most:", "rank<=", "rankatmost:", "rank:"):
        if t.startswith(prefix):
            return rank_at_most(int(t[len(prefix):]))
    raise ValueError(f"unknown policy {text!r}")


def automorphisms(X: EStructure, fixed: Iterable[int] = ()) -> list[dict]:
    """Permutations of ``X`` preserving membership and fixing ``fixed`` pointwise."""
    U = X.universe
    fixed = set(fixed)
    out = []
    for perm in itertools.permutations(U):
        pi = dict(zip(U, perm))
        if any(pi[c] != c for c in fixed):
            continue
        if all(is_member(pi[a], pi[b]) == is_member(a, b) for a in U for b in U):
            out.append(pi)
    return out


def orbits(X: EStructure, fixed: Iterable[int] = ()) -> list[frozenset]:
    autos = automorphisms(X, fixed)
    seen, out = set(), []
    for c in X.universe:
        if c in seen:
            continue
        orb = frozenset(pi[c] for pi in autos)
        seen |= orb
        out.append(orb)
    return out


def unions(parts: list[frozenset]) -> set:
    fam = set()
    for k in range(len(parts) + 1):
        for combo in itertools.combinations(parts, k):
            fam.add(frozenset().union(*combo))
    return fam


def singleton_formulas(X: EStructure) -> dict:
    """For each subset, a defining formula with parameters ``q0, q1, ...``."""
    out = {}
    U = X.universe
    for k in range(len(U) + 1):
        for combo in itertools.combinations(U, k):
            names = [f"q{i}" for i in range(k)]
            out[frozenset(combo)] = (big_or([SEq("x", n) for n in names]), dict(zip(names, combo)))
    return out


def diagram_formula(X: EStructure, point: int) -> SetFormula:
    """Parameter-free formula isolating the orbit of ``point``.

    Says there are distinct ``y_i`` exhausting the universe with exactly the
    membership pattern of ``X`` and ``x`` in the position of ``point``.
    """
    U = X.universe
    ys = [f"y{i}" for i in range(len(U))]
    parts = [SNot(SEq(ys[i], ys[j])) for i in range(len(U)) for j in range(i + 1, len(U))]
    for i, a in enumerate(U):
        for j, b in enumerate(U):
            atom = SIn(ys[i], ys[j])
            parts.append(atom if is_member(a, b) else SNot(atom))
    parts.append(SForall("z", big_or([SEq("z", y) for y in ys]) if ys else SNot(SEq("z", "z"))))
    parts.append(SEq("x", ys[U.index(point)]))
    body = big_and(parts)
    for y in reversed(ys):
        body = SExists(y, body)
    return body


def defn(X: EStructure, policy: Policy = WITH_PARAMS, budget: int = DEFAULT_BUDGET,
         verify: bool = True) -> set:
    """The family of definable subsets of ``X`` under the parameter policy."""
    if len(X) > budget:
        raise BudgetExceeded(f"|X| = {len(X)} exceeds the budget {budget}")
    if policy.kind == "with-params":
        forms = singleton_formulas(X)
        if verify:
            for subset, (phi, params) in forms.items():
                assert extension(X, phi, "x", params) == subset
        return set(forms)
    fixed = () if policy.kind == "no-params" else [c for c in X.universe if rank(c) <= policy.k]
    if policy.kind not in ("no-params", "rank-at-most"):
        raise ValueError(f"unknown policy {policy}")
    return unions(orbits(X, fixed))


def powerset(X: EStructure) -> set:
    U = X.universe
    return {frozenset(c) for k in range(len(U) + 1) for c in itertools.combinations(U, k)}


# -- hierarchies -----------------------------------------------------------

def hierarchy(kind: str, steps: int, budget: int = DEFAULT_BUDGET) -> list[EStructure]:
    """``[H_0, ..., H_steps]`` with ``H_0`` empty and ``H_{k+1}`` = Defn or P of ``H_k``."""
    kind = kind.upper()
    if kind not in ("L", "V"):
        raise ValueError("kind is L or V")
    out = [EStructure(())]
    for _ in range(steps):
        cur = out[-1]
        if kind == "L":
            fam = defn(cur, WITH_PARAMS, budget)
        else:
            if len(cur) > 2 ** budget:
                raise BudgetExceeded(f"|V_k| = {len(cur)} is too large to take a power set")
            fam = powerset(cur)
        out.append(EStructure.of(encode(s) for s in fam))
    return out


def transitive_sets(max_size: int) -> list[EStructure]:
    """All transitive hereditarily finite sets with at most ``max_size`` elements."""
    # a transitive set of size n only has members of rank < n, i.e. codes below |V_n|
    size = 0
    for _ in range(max_size):
        size = 1 << size
        if size > 1 << 16:
            raise BudgetExceeded("transitive sets are only enumerated up to size 4")
    pool = list(range(size))
    out = []
    for k in range(max_size + 1):
        for combo in itertools.combinations(pool, k):
            X = EStructure(combo)
            if X.is_transitive():
                out.append(X)
    return out


# -- prenex form and the arithmetic-style classification --------------------

def _nnf(f: SetFormula, neg: bool = False) -> SetFormula:
    if isinstance(f, (SIn, SEq)):
        return SNot(f) if neg else f
    if isinstance(f, SNot):
        return _nnf(f.body, not neg)
    if isinstance(f, SImplies):
        return _nnf(SOr(SNot(f.left), f.right), neg)
    if isinstance(f, SAnd):
        cls = SOr if neg else SAnd
        return cls(_nnf(f.left, neg), _nnf(f.right, neg))
    if isinstance(f, SOr):
        cls = SAnd if neg else SOr
        return cls(_nnf(f.left, neg), _nnf(f.right, neg))
    cls = {SExists: SForall, SForall: SExists}[type(f)] if neg else type(f)
    return cls(f.var, _nnf(f.body, neg))


def _rename(f: SetFormula, old: str, new: str) -> SetFormula:
    if isinstance(f, SIn):
        return SIn(new if f.left == old else f.left, new if f.right == old else f.right)
    if isinstance(f, SEq):
        return SEq(new if f.left == old else f.left, new if f.right == old else f.right)
    if isinstance(f, SNot):
        return SNot(_rename(f.body, old, new))
    if isinstance(f, _BIN):
        return type(f)(_rename(f.left, old, new), _rename(f.right, old, new))
    if f.var == old:
        return f
    return type(f)(f.var, _rename(f.body, old, new))


def _all_names(f: SetFormula) -> set:
    if isinstance(f, (SIn, SEq)):
        return {f.left, f.right}
    if isinstance(f, SNot):
        return _all_names(f.body)
    if isinstance(f, _BIN):
        return _all_names(f.left) | _all_names(f.right)
    return {f.var} | _all_names(f.body)


def _split(f):
    prefix = []
    while isinstance(f, _Q):
        prefix.append((type(f), f.var))
        f = f.body
    return prefix, f


def prenex(f: SetFormula) -> SetFormula:
    """Equivalent prenex formula; bound variables are renamed apart first."""
    f = _nnf(f)
    counter = itertools.count()
    taken = set(_all_names(f))

    def fresh(base):
        while True:
            name = f"{base}_{next(counter)}"
            if name not in taken:
                taken.add(name)
                return name

    def go(g):
        if isinstance(g, (SIn, SEq, SNot)):
            return [], g
        if isinstance(g, _Q):
            new = fresh(g.var)
            prefix, matrix = go(_rename(g.body, g.var, new))
            return [(type(g), new)] + prefix, matrix
        lp, lm = go(g.left)
        rp, rm = go(g.right)
        return lp + rp, type(g)(lm, rm)

    prefix, matrix = go(f)
    for q, v in reversed(prefix):
        matrix = q(v, matrix)
    return matrix


def is_prenex(f: SetFormula) -> bool:
    _, matrix = _split(f)

    def qf(g):
        if isinstance(g, (SIn, SEq)):
            return True
        if isinstance(g, SNot):
            return qf(g.body)
        if isinstance(g, _BIN):
            return qf(g.left) and qf(g.right)
        return False

    return qf(matrix)


@dataclass(frozen=True)
class SigmaClass:
    n: int
    shape: str  # "Sigma" or "Pi"
    delta_candidate: bool

    def __str__(self) -> str:
        return f"{'Σ' if self.shape == 'Sigma' else 'Π'}_{self.n}"

    def to_json(self) -> dict:
        return {"n": self.n, "shape": self.shape, "deltaCandidate": self.delta_candidate,
                "label": str(self)}


def sigma_classify(f: SetFormula) -> SigmaClass:
    """Count alternating quantifier blocks of the prenex prefix."""
    if not is_prenex(f):
        f = prenex(f)
    prefix, _ = _split(f)
    if not prefix:
        return SigmaClass(0, "Sigma", True)
    blocks = 1 + sum(1 for (a, _), (b, _) in zip(prefix, prefix[1:]) if a is not b)
    shape = "Sigma" if prefix[0][0] is SExists else "Pi"
    return SigmaClass(blocks, shape, False)


__all__ = [
    "ArityError", "BudgetExceeded", "EStructure", "NO_PARAMS", "Policy", "SAnd", "SEq", "SExists",
    "SForall", "SIn", "SImplies", "SNot", "SOr", "SigmaClass", "WITH_PARAMS", "automorphisms",
    "defn", "diagram_formula", "encode", "extension", "hierarchy", "is_member", "is_prenex",
    "members", "orbits", "parse_policy", "parse_set_formula", "powerset", "prenex",
    "print_set_formula", "rank", "rank_at_most", "sat", "set_free_vars", "show",
    "sigma_classify", "transitive_sets",
]
