"""Finite-domain kernel: points, function tables, relations and classes.

Elements of a domain of size ``a`` are the integers ``0..a-1``.  Points of
``A^n`` are plain tuples and are numbered big-endian, so the table of a
function reads as a truth table in the usual textbook order::

    >>> conj = FiniteFunction.from_string(2, "0001")
    >>> conj((1, 1))
    1
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DomainMismatch, ShapeError

Point = tuple

__all__ = [
    "Point",
    "FiniteFunction",
    "Relation",
    "FunctionClass",
    "encode_point",
    "decode_point",
    "apply",
    "apply_componentwise",
    "canonical_order",
    "all_points",
    "relation_key",
]


def _check_size(size, what="domain size"):
    if isinstance(size, bool) or not isinstance(size, (int, np.integer)) or size < 1:
        raise ShapeError(f"{what} must be a positive integer, got {size!r}")
    return int(size)


def _check_arity(arity):
    return _check_size(arity, "arity")


def encode_point(point: Sequence[int], base: int) -> int:
    """Big-endian mixed-radix index of ``point`` in ``A^len(point)``."""
    index = 0
    for x in point:
        index = index * base + x
    return index


def decode_point(index: int, arity: int, base: int) -> Point:
    _check_arity(arity)
    _check_size(base)
    if not 0 <= index < base**arity:
        raise IndexError(f"index {index} out of range for {base}^{arity}")
    digits = []
    for _ in range(arity):
        index, r = divmod(index, base)
        digits.append(r)
    return tuple(reversed(digits))


@lru_cache(maxsize=None)
def _all_points(arity: int, base: int) -> np.ndarray:
    grid = np.indices((base,) * arity).reshape(arity, -1).T
    grid = np.ascontiguousarray(grid, dtype=np.int64)
    grid.setflags(write=False)
    return grid


def all_points(arity: int, base: int) -> np.ndarray:
    """Array of shape ``(base**arity, arity)`` listing ``A^arity`` in index order."""
    return _all_points(_check_arity(arity), _check_size(base))


@dataclass(frozen=True)
class FiniteFunction:
    """An ``arity``-ary map from a domain of size ``dom`` to one of size ``cod``."""

    arity: int
    dom: int
    cod: int
    table: tuple

    def __post_init__(self):
        _check_arity(self.arity)
        _check_size(self.dom)
        _check_size(self.cod)
        table = tuple(int(v) for v in self.table)
        if len(table) != self.dom**self.arity:
            raise ShapeError(
                f"table length {len(table)} != {self.dom}^{self.arity} = {self.dom ** self.arity}"
            )
        if any(v < 0 or v >= self.cod for v in table):
            raise ShapeError(f"table entries must lie in 0..{self.cod - 1}")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_string(cls, arity, digits, dom=2, cod=None):
        """Build from a digit string such as ``"0110"``."""
        if cod is None:
            cod = dom
        return cls(arity, dom, cod, tuple(int(c) for c in digits))

    @classmethod
    def from_callable(cls, arity, fn, dom=2, cod=None):
        if cod is None:
            cod = dom
        pts = all_points(arity, dom)
        return cls(arity, dom, cod, tuple(int(fn(*p)) for p in pts.tolist()))

    @classmethod
    def projection(cls, arity, k, dom=2):
        return cls(arity, dom, dom, tuple(all_points(arity, dom)[:, k].tolist()))

    @classmethod
    def constant(cls, arity, value, dom=2, cod=None):
        if cod is None:
            cod = dom
        return cls(arity, dom, cod, (value,) * dom**arity)

    @property
    def key(self):
        return (self.arity, self.table)

    @property
    def word(self) -> str:
        if self.cod > 10:
            return ".".join(map(str, self.table))
        return "".join(map(str, self.table))

    def is_projection(self):
        pts = all_points(self.arity, self.dom)
        return self.dom == self.cod and any(
            self.table == tuple(pts[:, k].tolist()) for k in range(self.arity)
        )

    def __call__(self, *args):
        if len(args) == 1 and isinstance(args[0], (tuple, list)):
            args = tuple(args[0])
        return apply(self, args)

    def __str__(self):
        return f"{self.arity}:{self.word}"

    def __repr__(self):
        return f"FiniteFunction({self.arity}:{self.word!r}, dom={self.dom}, cod={self.cod})"

    def __lt__(self, other):
        return (self.dom, self.cod, self.arity, self.table) < (
            other.dom,
            other.cod,
            other.arity,
            other.table,
        )


def apply(f: FiniteFunction, args: Sequence[int]) -> int:
    if len(args) != f.arity:
        raise ShapeError(f"{f} expects {f.arity} arguments, got {len(args)}")
    if any(not 0 <= x < f.dom for x in args):
        raise ShapeError(f"argument outside domain of size {f.dom}")
    return f.table[encode_point(args, f.dom)]


def apply_componentwise(f: FiniteFunction, rows: Sequence[Sequence[int]]) -> Point:
    """Apply ``f`` to ``n`` equal-length tuples coordinate by coordinate."""
    if len(rows) != f.arity:
        raise ShapeError(f"{f} expects {f.arity} rows, got {len(rows)}")
    lengths = {len(r) for r in rows}
    if len(lengths) != 1:
        raise ShapeError("rows must all have the same length")
    return tuple(apply(f, column) for column in zip(*rows))


@dataclass(frozen=True)
class Relation:
    """An ``arity``-ary relation on a domain of size ``dom``."""

    arity: int
    dom: int
    tuples: frozenset

    def __post_init__(self):
        _check_arity(self.arity)
        _check_size(self.dom)
        tuples = frozenset(tuple(int(x) for x in t) for t in self.tuples)
        for t in tuples:
            if len(t) != self.arity:
                raise ShapeError(f"tuple {t} has length {len(t)}, relation arity is {self.arity}")
            if any(not 0 <= x < self.dom for x in t):
                raise ShapeError(f"tuple {t} leaves domain of size {self.dom}")
        object.__setattr__(self, "tuples", tuples)

    @classmethod
    def of(cls, arity, tuples: Iterable, dom=2):
        """Build from tuples or digit strings: ``Relation.of(2, ["00", "01"])``."""
        rows = []
        for t in tuples:
            if isinstance(t, str):
                t = tuple(int(c) for c in t)
            rows.append(tuple(t))
        return cls(arity, dom, frozenset(rows))

    @classmethod
    def full(cls, arity, dom=2):
        return cls(arity, dom, frozenset(map(tuple, all_points(arity, dom).tolist())))

    @classmethod
    def empty(cls, arity, dom=2):
        return cls(arity, dom, frozenset())

    @classmethod
    def equality(cls, dom=2):
        return cls(2, dom, frozenset((x, x) for x in range(dom)))

    def sorted(self):
        return sorted(self.tuples)

    def codes(self) -> np.ndarray:
        """Sorted point indices of the members."""
        return np.array(sorted(encode_point(t, self.dom) for t in self.tuples), dtype=np.int64)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.dom**self.arity, dtype=bool)
        m[self.codes()] = True
        return m

    def array(self) -> np.ndarray:
        """Members as an ``(len, arity)`` integer array in canonical order."""
        if not self.tuples:
            return np.zeros((0, self.arity), dtype=np.int64)
        return np.array(self.sorted(), dtype=np.int64)

    @classmethod
    def from_codes(cls, codes, arity, dom):
        pts = all_points(arity, dom)
        return cls(arity, dom, frozenset(map(tuple, pts[np.asarray(codes, dtype=np.int64)].tolist())))

    def _check_same(self, other):
        if (self.arity, self.dom) != (other.arity, other.dom):
            raise DomainMismatch(
                f"relations over ({self.arity}, {self.dom}) and ({other.arity}, {other.dom})"
            )

    def __le__(self, other):
        self._check_same(other)
        return self.tuples <= other.tuples

    def __ge__(self, other):
        self._check_same(other)
        return self.tuples >= other.tuples

    def __and__(self, other):
        self._check_same(other)
        return Relation(self.arity, self.dom, self.tuples & other.tuples)

    def __or__(self, other):
        self._check_same(other)
        return Relation(self.arity, self.dom, self.tuples | other.tuples)

    def __contains__(self, t):
        return tuple(t) in self.tuples

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.sorted())

    def __str__(self):
        sep = "" if self.dom <= 10 else "."
        return "{" + ",".join(sep.join(map(str, t)) for t in self.sorted()) + "}"

    def __repr__(self):
        return f"Relation({self}, arity={self.arity}, dom={self.dom})"


@dataclass(frozen=True)
class FunctionClass:
    """A finite set of functions from a domain of size ``dom`` to one of size ``cod``."""

    dom: int
    cod: int
    members: frozenset = frozenset()

    def __post_init__(self):
        _check_size(self.dom)
        _check_size(self.cod)
        members = frozenset(self.members)
        for f in members:
            if (f.dom, f.cod) != (self.dom, self.cod):
                raise DomainMismatch(f"{f!r} is not a function from {self.dom} to {self.cod}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, functions, dom=None, cod=None):
        functions = list(functions)
        if dom is None:
            if not functions:
                raise ValueError("domain sizes are required for an empty class")
            dom, cod = functions[0].dom, functions[0].cod
        if cod is None:
            cod = dom
        return cls(dom, cod, frozenset(functions))

    def arities(self):
        return sorted({f.arity for f in self.members})

    def at_arity(self, n) -> list:
        return sorted((f for f in self.members if f.arity == n), key=lambda f: f.table)

    def upto(self, cap) -> "FunctionClass":
        return FunctionClass(self.dom, self.cod, frozenset(f for f in self.members if f.arity <= cap))

    def tables(self, n) -> np.ndarray:
        """Tables of the ``n``-ary members stacked into a ``(k, dom**n)`` array."""
        rows = [f.table for f in self.at_arity(n)]
        if not rows:
            return np.zeros((0, self.dom**n), dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    def __or__(self, other):
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise DomainMismatch("cannot join classes over different domains")
        return FunctionClass(self.dom, self.cod, self.members | other.members)

    def __le__(self, other):
        return self.members <= other.members

    def __contains__(self, f):
        return f in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(canonical_order(self))

    def __str__(self):
        return "{" + ", ".join(map(str, canonical_order(self))) + "}"


def canonical_order(x: Union[Relation, FunctionClass, Iterable]) -> list:
    """Deterministic listing: tuples by point index, functions by (arity, table)."""
    if isinstance(x, Relation):
        return x.sorted()
    if isinstance(x, FunctionClass):
        return sorted(x.members, key=lambda f: (f.arity, f.table))
    items = list(x)
    if items and isinstance(items[0], FiniteFunction):
        return sorted(items, key=lambda f: (f.arity, f.table))
    return sorted(items)


def relation_key(r: Relation):
    """Sort key for relations: arity first, then the sorted member indices."""
    return (r.arity, tuple(r.codes().tolist()))
