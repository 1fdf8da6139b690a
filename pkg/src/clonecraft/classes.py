"""Composition of function classes, stability tests and clone generation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernel
from .core import FiniteFunction, FunctionClass, _check_size, all_points, canonical_order
from .errors import DomainMismatch, ShapeError

__all__ = [
    "ArityCaps",
    "Budgets",
    "CloneSpec",
    "projections",
    "compose",
    "is_stable_right",
    "is_stable_left",
    "generate_clone_level",
    "clone_levels",
    "clone_member",
    "stability_closure",
]


@dataclass(frozen=True)
class ArityCaps:
    """Truncation of every enumeration: function arities and relation arities."""

    fn_arity_cap: int = 3
    rel_arity_cap: int = 4

    def __post_init__(self):
        _check_size(self.fn_arity_cap, "fn_arity_cap")
        _check_size(self.rel_arity_cap, "rel_arity_cap")


@dataclass(frozen=True)
class Budgets:
    """Upper bounds on brute-force enumerations (subsets, tables, Skolem maps)."""

    max_subsets: int = 2**16
    max_skolem: int = 3**6


DEFAULT_CAPS = ArityCaps()
DEFAULT_BUDGETS = Budgets()


@dataclass(frozen=True)
class CloneSpec:
    """The clone on ``dom`` generated by ``generators`` (projections implicit)."""

    dom: int
    generators: FunctionClass

    def __post_init__(self):
        _check_size(self.dom)
        g = self.generators
        if (g.dom, g.cod) != (self.dom, self.dom):
            raise DomainMismatch(f"clone generators must be operations on a {self.dom}-element set")

    @classmethod
    def of(cls, generators=(), dom=2):
        return cls(dom, FunctionClass(dom, dom, frozenset(generators)))

    @classmethod
    def projections(cls, dom=2):
        return cls.of((), dom)

    def ordered_generators(self):
        return [f for f in canonical_order(self.generators) if not f.is_projection()]

    def __str__(self):
        return f"Clone[{self.dom}]{self.generators}"


def projections(dom: int, arity: int) -> FunctionClass:
    return FunctionClass(
        dom, dom, frozenset(FiniteFunction.projection(arity, k, dom) for k in range(arity))
    )


def _from_rows(rows, arity, dom, cod):
    return [FiniteFunction(arity, dom, cod, tuple(r)) for r in rows.tolist()]


def compose(I: FunctionClass, J: FunctionClass) -> FunctionClass:
    """The class ``IJ`` of all ``f(g_1, .., g_n)`` with equal-arity ``g_i`` in ``J``."""
    if I.dom != J.cod:
        raise DomainMismatch(
            f"composition undefined: outer class reads a {I.dom}-set, inner class maps into a {J.cod}-set"
        )
    out = set()
    for m in J.arities():
        inner = J.tables(m)
        for f in canonical_order(I):
            if f.is_projection():
                out.update(J.at_arity(m))
                continue
            rows = _kernel.combine(f.table, I.dom, [inner] * f.arity, I.cod)
            out.update(_from_rows(rows, m, J.dom, I.cod))
    return FunctionClass(J.dom, I.cod, frozenset(out))


def is_stable_right(I: FunctionClass, J: FunctionClass, caps: ArityCaps = DEFAULT_CAPS) -> bool:
    """``IJ ⊆ I`` with ``J`` truncated at ``caps.fn_arity_cap``."""
    return compose(I, J.upto(caps.fn_arity_cap)).members <= I.members


def is_stable_left(I: FunctionClass, J: FunctionClass, caps: ArityCaps = DEFAULT_CAPS) -> bool:
    """``JI ⊆ I`` with ``J`` truncated at ``caps.fn_arity_cap``."""
    if J.dom != I.cod:
        raise DomainMismatch("composition undefined: J must read the codomain of I")
    return compose(J.upto(caps.fn_arity_cap), I).members <= I.members


def _left_closure(start: np.ndarray, generators, base: int) -> np.ndarray:
    # Semi-naive fixpoint: each round only tries argument tuples touching a new row.
    width = start.shape[1]
    known = set(_kernel.row_codes(start, base).tolist()) if _kernel.can_code(base, width) else None
    if known is None:
        return _left_closure_rows(start, generators, base)
    known_rows = _kernel.unique_rows(start, base)
    old = np.zeros((0, width), dtype=np.int64)
    frontier = known_rows
    while frontier.shape[0]:
        fresh = set()
        for f in generators:
            n = f.arity
            for t in range(n):
                parts = [old] * t + [frontier] + [known_rows] * (n - t - 1)
                codes = _kernel.combine_codes(f.table, base, parts, base)
                fresh.update(codes.tolist())
        fresh -= known
        old = known_rows
        frontier = _kernel.rows_from_codes(np.array(sorted(fresh), dtype=np.int64), base, width)
        known |= fresh
        known_rows = _kernel.rows_from_codes(np.array(sorted(known), dtype=np.int64), base, width)
    return known_rows


def _left_closure_rows(start, generators, base):
    known = {tuple(r) for r in start.tolist()}
    while True:
        arr = np.array(sorted(known), dtype=np.int64)
        fresh = set()
        for f in generators:
            rows = _kernel.combine(f.table, base, [arr] * f.arity, base)
            fresh.update(map(tuple, rows.tolist()))
        if fresh <= known:
            return np.array(sorted(known), dtype=np.int64)
        known |= fresh


@lru_cache(maxsize=256)
def generate_clone_level(spec: CloneSpec, m: int) -> FunctionClass:
    """All ``m``-ary members of the clone generated by ``spec``."""
    _check_size(m, "arity")
    pts = all_points(m, spec.dom)
    start = np.ascontiguousarray(pts.T)
    rows = _left_closure(start, spec.ordered_generators(), spec.dom)
    return FunctionClass(spec.dom, spec.dom, frozenset(_from_rows(rows, m, spec.dom, spec.dom)))


def clone_levels(spec: CloneSpec, cap: int) -> FunctionClass:
    """Union of the clone levels at arities ``1..cap``."""
    out = frozenset()
    for m in range(1, cap + 1):
        out |= generate_clone_level(spec, m).members
    return FunctionClass(spec.dom, spec.dom, out)


def clone_member(spec: CloneSpec, f: FiniteFunction) -> bool:
    if (f.dom, f.cod) != (spec.dom, spec.dom):
        raise DomainMismatch(f"{f!r} is not an operation on the clone's {spec.dom}-set")
    return f in generate_clone_level(spec, f.arity).members


def stability_closure(
    K: FunctionClass, c1: CloneSpec, c2: CloneSpec, caps: ArityCaps = DEFAULT_CAPS
) -> FunctionClass:
    """Least class above ``K`` (arities within cap) stable under ``K C1`` and ``C2 K``.

    Right composition uses the levels of ``c1`` up to the cap.  Left
    composition is closed under the generators of ``c2`` directly; as it
    never changes arity this is the truncation of the untruncated closure
    ``C2 (K C1)``, and one right pass followed by one left pass suffices.
    """
    cap = caps.fn_arity_cap
    if c1.dom != K.dom or c2.dom != K.cod:
        raise DomainMismatch("clone domains must match the class domains")
    if any(f.arity > cap for f in K.members):
        raise ShapeError(f"class has members above the arity cap {cap}")
    if not K.members:
        return K
    right = compose(K, clone_levels(c1, cap)) | K
    gens = c2.ordered_generators()
    out = set()
    for m in right.arities():
        rows = _left_closure(right.tables(m), gens, K.cod)
        out.update(_from_rows(rows, m, K.dom, K.cod))
    return FunctionClass(K.dom, K.cod, frozenset(out))
