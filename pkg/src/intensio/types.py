"""Church types ``e | t | (a b) | a'`` with the degree function.

Surface syntax: ``type := "e" | "t" | "(" type type ")" | type "'"``.
The prime binds tighter than application and whitespace is ignored, so
``((e t)' t)`` is the type of functions from senses of concepts to truth
values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .sexpr import PRIMES, ParseError, Scanner


@dataclass(frozen=True)
class Base:
    name: str  # "e" or "t"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Fun:
    domain: "Type"
    codomain: "Type"

    def __str__(self) -> str:
        return f"({self.domain} {self.codomain})"


@dataclass(frozen=True)
class Sense:
    inner: "Type"

    def __str__(self) -> str:
        return f"{self.inner}'"


Type = Union[Base, Fun, Sense]

E = Base("e")
T = Base("t")


@lru_cache(maxsize=None)
def degree(tp: Type) -> int:
    if isinstance(tp, Base):
        return 1
    if isinstance(tp, Sense):
        return degree(tp.inner)
    a, b = degree(tp.domain), degree(tp.codomain)
    return a + 1 if a >= b else b


def reduce_type(tp: Type) -> Type:
    """Normal form under ``(a b)' -> (a' b')``.

    Only for showing what the rejected type-reduction axiom would identify;
    nothing else in the package calls this.
    """
    if isinstance(tp, Base):
        return tp
    if isinstance(tp, Fun):
        return Fun(reduce_type(tp.domain), reduce_type(tp.codomain))
    inner = reduce_type(tp.inner)
    if isinstance(inner, Fun):
        return Fun(reduce_type(Sense(inner.domain)), reduce_type(Sense(inner.codomain)))
    return Sense(inner)


def is_reduced(tp: Type) -> bool:
    if isinstance(tp, Base):
        return True
    if isinstance(tp, Fun):
        return is_reduced(tp.domain) and is_reduced(tp.codomain)
    return not isinstance(tp.inner, Fun) and is_reduced(tp.inner)


def depth(tp: Type) -> int:
    if isinstance(tp, Base):
        return 0
    if isinstance(tp, Sense):
        return 1 + depth(tp.inner)
    return 1 + max(depth(tp.domain), depth(tp.codomain))


def fun(*types: Type) -> Type:
    """Right-nested function type: ``fun(a, b, c) == (a (b c))``."""
    if len(types) < 2:
        raise ValueError("fun() needs at least two types")
    out = types[-1]
    for tp in reversed(types[:-1]):
        out = Fun(tp, out)
    return out


def small_types(size: int) -> list:
    """Every type built with at most ``size`` constructors, in a fixed order."""
    by_size = {0: [E, T]}
    for n in range(1, size + 1):
        out = [Sense(a) for a in by_size[n - 1]]
        for i in range(n):
            out += [Fun(a, b) for a in by_size[i] for b in by_size[n - 1 - i]]
        by_size[n] = out
    return [tp for n in range(size + 1) for tp in by_size[n]]


def read_type(sc: Scanner) -> Type:
    ch = sc.peek()
    if ch == "(":
        sc.pos += 1
        dom = read_type(sc)
        cod = read_type(sc)
        sc.expect(")")
        tp: Type = Fun(dom, cod)
    elif ch in ("e", "t"):
        sc.pos += 1
        tp = E if ch == "e" else T
    elif ch == "":
        raise sc.error("unexpected end of input")
    else:
        raise sc.error(f"unexpected character {ch!r}")
    while sc.peek() in PRIMES:
        sc.pos += 1
        tp = Sense(tp)
    return tp


def parse_type(text: str) -> Type:
    sc = Scanner(text)
    tp = read_type(sc)
    sc.finish()
    return tp


def print_type(tp: Type) -> str:
    return str(tp)


__all__ = [
    "Base", "Fun", "Sense", "Type", "E", "T", "degree", "reduce_type", "is_reduced",
    "depth", "fun", "small_types", "parse_type", "print_type", "read_type", "ParseError",
]
