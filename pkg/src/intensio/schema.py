"""Predicativity of comprehension and choice instances.

An instance is given structurally: a kind, the matrix, the declared
variables ``x`` (and ``y``), and its parameters.  It is predicative when
every parameter has degree at most the target bound and every bound
variable of the matrix has degree strictly below it.  The target bound is
``||a b||`` for typed schemata and ``||a|| + 1`` for concept comprehension.

Presentation, intensional application, and representation nodes carry type
indices that are not variables.  They are counted as implicit parameters
and held to the parameter bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lang import (And, Context, Eq, Formula, IApp, Not, ONE, Or, Pres, Rep, Var, ZERO, atoms,
                   bound_vars, free_vars, print_formula, read_binding, read_formula,
                   substitute, subterms, type_of, typecheck_formula)
from .sexpr import Scanner
from .types import Fun, T, Type, degree

TYPED_COMPREHENSION = "typed-comprehension"
CONCEPT_COMPREHENSION = "concept-comprehension"
TYPED_CHOICE = "typed-choice"
KINDS = (TYPED_COMPREHENSION, CONCEPT_COMPREHENSION, TYPED_CHOICE)


class MalformedInstance(ValueError):
    pass


@dataclass(frozen=True)
class SchemaInstance:
    kind: str
    matrix: Formula
    x: Var
    y: Var | None
    params: tuple
    target: str = "h"

    @property
    def target_type(self) -> Type:
        cod = T if self.kind == CONCEPT_COMPREHENSION else self.y.type
        return Fun(self.x.type, cod)

    @property
    def bound(self) -> int:
        if self.kind == CONCEPT_COMPREHENSION:
            return degree(self.x.type) + 1
        return degree(self.target_type)


@dataclass(frozen=True)
class Violation:
    variable: str
    role: str       # "bound", "parameter", or "implicit"
    degree: int
    bound: int

    @property
    def relation(self) -> str:
        return "<" if self.role == "bound" else "<="

    def to_json(self) -> dict:
        return {"variable": self.variable, "role": self.role, "degree": self.degree,
                "bound": self.bound, "relation": self.relation}

    def __str__(self) -> str:
        if self.role == "bound":
            return f"bound variable {self.variable} has degree {self.degree}, not < {self.bound}"
        return f"{self.role} {self.variable} has degree {self.degree} > {self.bound}"


@dataclass(frozen=True)
class SchemaVerdict:
    kind: str
    target_degree: int
    violations: tuple
    configuration: str  # "First", "Second", or "NotApplicable"
    split: dict = field(default_factory=dict)

    @property
    def predicative(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"kind": self.kind, "predicative": self.predicative,
                "targetDegree": self.target_degree,
                "violations": [v.to_json() for v in self.violations],
                "configuration": self.configuration, "split": self.split}


def validate(inst: SchemaInstance) -> None:
    if inst.kind not in KINDS:
        raise MalformedInstance(f"unknown schema kind {inst.kind!r}")
    if (inst.y is None) != (inst.kind == CONCEPT_COMPREHENSION):
        raise MalformedInstance("typed schemata need (y TYPE); concept comprehension must not have it")
    declared = [inst.x] + ([inst.y] if inst.y else []) + list(inst.params)
    names = [v.name for v in declared]
    if len(set(names)) != len(names):
        raise MalformedInstance("declared variables must have distinct names")
    if inst.target in names:
        raise MalformedInstance(f"the target {inst.target} cannot also be declared")
    for v in free_vars(inst.matrix):
        if v.name == inst.target:
            raise MalformedInstance(f"the target {inst.target} occurs free in the matrix")
        if v not in declared:
            raise MalformedInstance(f"stray free variable {v.name}: {v.type}")
    problems = typecheck_formula(Context.of(*declared), inst.matrix)
    if problems:
        raise MalformedInstance("matrix is ill-typed: " + "; ".join(map(str, problems)))


def implicit_indices(f: Formula) -> list[tuple[str, int]]:
    """Type indices of presentation, i-app, and representation nodes, in order."""
    out: list = []
    seen = set()

    def add(label, deg):
        if label not in seen:
            seen.add(label)
            out.append((label, deg))

    for at in atoms(f):
        if isinstance(at, Pres):
            add(f"pres[{at.type}]", degree(at.type))
        elif isinstance(at, IApp):
            add(f"iapp[{Fun(at.a, at.b)}]", degree(Fun(at.a, at.b)))
    for t in subterms(f):
        if isinstance(t, Rep):
            tp = type_of(t.arg)
            add(f"rep[{tp}]", degree(tp))
    return out


def classify(inst: SchemaInstance) -> SchemaVerdict:
    validate(inst)
    n1 = inst.bound
    violations = []
    for v in bound_vars(inst.matrix):
        if degree(v.type) >= n1:
            violations.append(Violation(v.name, "bound", degree(v.type), n1))
    for p in inst.params:
        if degree(p.type) > n1:
            violations.append(Violation(p.name, "parameter", degree(p.type), n1))
    for label, deg in implicit_indices(inst.matrix):
        if deg > n1:
            violations.append(Violation(label, "implicit", deg, n1))

    config, split = "NotApplicable", {}
    if not violations and inst.kind != CONCEPT_COMPREHENSION:
        da, db = degree(inst.x.type), degree(inst.y.type)
        config = "First" if da >= db else "Second"
        n = n1 - 1
        split = {"n": n,
                 "low": [p.name for p in inst.params if degree(p.type) <= n],
                 "top": [p.name for p in inst.params if degree(p.type) == n + 1]}
    return SchemaVerdict(inst.kind, n1, tuple(violations), config, split)


def explain(verdict: SchemaVerdict) -> str:
    lines = [f"{verdict.kind}: target degree {verdict.target_degree}"]
    if verdict.predicative:
        lines.append("predicative")
    else:
        lines.append("impredicative:")
        lines += [f"  - {v}" for v in verdict.violations]
        lines.append(f"  (parameters need degree <= {verdict.target_degree}, "
                     f"bound variables degree < {verdict.target_degree})")
    if verdict.configuration == "NotApplicable":
        why = ("concept comprehension" if verdict.kind == CONCEPT_COMPREHENSION
               else "the instance is impredicative")
        lines.append(f"configuration: not applicable ({why})")
    else:
        n = verdict.split["n"]
        lines.append(f"configuration: {verdict.configuration} (n = {n}; "
                     f"parameters of degree <= {n}: {', '.join(verdict.split['low']) or 'none'}; "
                     f"of degree {n + 1}: {', '.join(verdict.split['top']) or 'none'})")
    return "\n".join(lines)


def _fresh_name(base: str, taken: set) -> str:
    name, i = base, 0
    while name in taken:
        i += 1
        name = f"{base}{i}"
    return name


def concept_to_typed(inst: SchemaInstance) -> SchemaInstance:
    """Rewrite concept comprehension as typed comprehension into ``t``.

    The matrix becomes ``(psi & y=1) | (~psi & y=0)`` for a fresh ``y``.
    """
    if inst.kind != CONCEPT_COMPREHENSION:
        raise MalformedInstance("only concept comprehension instances can be rewritten")
    taken = {inst.x.name, inst.target} | {p.name for p in inst.params}
    taken |= {v.name for v in bound_vars(inst.matrix)}
    y = Var(_fresh_name("y", taken), T)
    psi = inst.matrix
    matrix = Or(And(psi, Eq(y, ONE)), And(Not(psi), Eq(y, ZERO)))
    return SchemaInstance(TYPED_COMPREHENSION, matrix, inst.x, y, inst.params, inst.target)


def typed_to_concept(inst: SchemaInstance) -> SchemaInstance:
    """Read a typed instance into ``t`` as a concept: ``psi(x) := phi(x, 1)``."""
    if inst.kind == CONCEPT_COMPREHENSION or inst.y.type != T:
        raise MalformedInstance("need a typed instance whose y has type t")
    matrix = substitute(inst.matrix, inst.y, ONE)
    return SchemaInstance(CONCEPT_COMPREHENSION, matrix, inst.x, None, inst.params, inst.target)


def choice_to_comprehension(inst: SchemaInstance) -> SchemaInstance:
    if inst.kind != TYPED_CHOICE:
        raise MalformedInstance("not a choice instance")
    return SchemaInstance(TYPED_COMPREHENSION, inst.matrix, inst.x, inst.y, inst.params, inst.target)


# -- instance files --------------------------------------------------------

def parse_instance(text: str) -> SchemaInstance:
    """Read ``(instance KIND (x T) [(y T)] (params (z T)...))`` followed by the matrix."""
    sc = Scanner(text)
    sc.expect("(")
    sc.keyword("instance")
    kind = sc.keyword(*KINDS)
    x = read_binding(sc)
    y = None
    save = sc.pos
    sc.expect("(")
    head = sc.symbol()
    sc.pos = save
    if head != "params":
        y = read_binding(sc)
    sc.expect("(")
    sc.keyword("params")
    params = []
    while sc.peek() == "(":
        params.append(read_binding(sc))
    sc.expect(")")
    sc.expect(")")
    scope = {v.name: v.type for v in [x] + ([y] if y else []) + params}
    matrix = read_formula(sc, scope)
    sc.finish()
    return SchemaInstance(kind, matrix, x, y, tuple(params))


def print_instance(inst: SchemaInstance) -> str:
    head = f"(instance {inst.kind} ({inst.x.name} {inst.x.type})"
    if inst.y is not None:
        head += f" ({inst.y.name} {inst.y.type})"
    ps = " ".join(f"({p.name} {p.type})" for p in inst.params)
    head += f" (params{' ' + ps if ps else ''}))"
    return head + "\n" + print_formula(inst.matrix, decl=False) + "\n"


__all__ = [
    "CONCEPT_COMPREHENSION", "KINDS", "MalformedInstance", "SchemaInstance", "SchemaVerdict",
    "TYPED_CHOICE", "TYPED_COMPREHENSION", "Violation", "choice_to_comprehension", "classify",
    "concept_to_typed", "explain", "implicit_indices", "parse_instance", "print_instance",
    "typed_to_concept", "validate",
]
