"""Minor formation schemes and conjunctive minors of relations and constraints.

A scheme with target ``m`` and ``k`` indeterminates is a family of maps
``h_j``; position ``t`` of ``h_j`` points either at a target coordinate
(``Slot("t", i)``) or at an indeterminate (``Slot("v", i)``).  The tight
minor of relations ``R_j`` is the set of ``a`` in ``A^m`` for which some
assignment of the indeterminates puts every row ``(a + sigma) h_j`` in
``R_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .classes import DEFAULT_BUDGETS, Budgets
from .constraints import Constraint
from .core import Relation, all_points, _check_size
from .errors import BudgetExceeded, DomainMismatch, ShapeError

__all__ = [
    "Slot",
    "Scheme",
    "apply_scheme_row",
    "tight_minor",
    "is_restrictive",
    "is_extensive",
    "tight_minor_constraint",
    "is_conjunctive_minor",
]


@dataclass(frozen=True, order=True)
class Slot:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("t", "v"):
            raise ValueError(f"slot kind must be 't' or 'v', got {self.kind!r}")
        if self.index < 0:
            raise ValueError("slot index must be nonnegative")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if len(text) < 2 or text[0] not in "tv" or not text[1:].isdigit():
            raise ValueError(f"bad slot {text!r}, expected t<i> or v<i>")
        return cls(text[0], int(text[1:]))

    @property
    def is_target(self):
        return self.kind == "t"

    def __str__(self):
        return f"{self.kind}{self.index}"


def _slot(x):
    if isinstance(x, Slot):
        return x
    if isinstance(x, str):
        return Slot.parse(x)
    raise TypeError(f"cannot read {x!r} as a slot")


@dataclass(frozen=True)
class Scheme:
    """A minor formation scheme: target arity, indeterminate count and maps."""

    target: int
    n_vars: int
    maps: tuple

    def __post_init__(self):
        _check_size(self.target, "target")
        if self.n_vars < 0:
            raise ShapeError("number of indeterminates must be nonnegative")
        maps = tuple(tuple(_slot(s) for s in h) for h in self.maps)
        if not maps:
            raise ShapeError("a scheme needs a nonempty family of maps")
        for h in maps:
            if not h:
                raise ShapeError("every scheme map needs a positive source arity")
            for s in h:
                bound = self.target if s.is_target else self.n_vars
                if s.index >= bound:
                    raise ShapeError(f"slot {s} out of range (target {self.target}, vars {self.n_vars})")
        object.__setattr__(self, "maps", maps)

    @classmethod
    def parse(cls, target, n_vars, text):
        """``Scheme.parse(1, 1, "t0,v0")``; maps are separated by ``;``."""
        return cls(target, n_vars, tuple(tuple(h.split(",")) for h in text.split(";")))

    @classmethod
    def identity(cls, m, copies=1):
        h = tuple(Slot("t", i) for i in range(m))
        return cls(m, 0, (h,) * copies)

    @property
    def source_arities(self):
        return tuple(len(h) for h in self.maps)

    def __str__(self):
        body = ";".join(",".join(map(str, h)) for h in self.maps)
        return f"target={self.target} vars={self.n_vars} maps=[{body}]"


def apply_scheme_row(h: Sequence, a: Sequence[int], sigma) -> tuple:
    """The row ``(a + sigma) h``: target slots read ``a``, indeterminates read ``sigma``."""
    out = []
    for s in map(_slot, h):
        if s.is_target:
            if s.index >= len(a):
                raise ShapeError(f"slot {s} outside target of length {len(a)}")
            out.append(a[s.index])
        else:
            if isinstance(sigma, Mapping):
                value = sigma.get(s.index)
            else:
                value = sigma[s.index] if s.index < len(sigma) else None
            if value is None:
                raise ValueError(f"Skolem map undefined on indeterminate v{s.index}")
            out.append(value)
    return tuple(out)


def _check_family(family, scheme: Scheme):
    family = list(family)
    if len(family) != len(scheme.maps):
        raise ShapeError(f"family has {len(family)} members, scheme has {len(scheme.maps)} maps")
    if not family:
        raise ShapeError("family must be nonempty")
    dom = family[0].dom
    for R, n in zip(family, scheme.source_arities):
        if R.arity != n:
            raise ShapeError(f"relation of arity {R.arity} paired with a map of source arity {n}")
        if R.dom != dom:
            raise DomainMismatch("family members live on different domains")
    return family, dom


def tight_minor(family, scheme: Scheme, budgets: Budgets = DEFAULT_BUDGETS) -> Relation:
    family, dom = _check_family(family, scheme)
    m, k = scheme.target, scheme.n_vars
    skolem = dom**k
    if skolem > budgets.max_skolem:
        raise BudgetExceeded(f"Skolem maps over {k} indeterminates", skolem, budgets.max_skolem)
    # Rows of the grid are a + sigma with a most significant, so the reshape
    # below groups all Skolem maps of one target tuple together.
    grid = all_points(m + k, dom)
    ok = np.ones(grid.shape[0], dtype=bool)
    for R, h in zip(family, scheme.maps):
        cols = [s.index if s.is_target else m + s.index for s in h]
        sub = grid[:, cols]
        codes = sub @ (dom ** np.arange(len(cols) - 1, -1, -1))
        ok &= R.mask()[codes]
    hits = np.flatnonzero(ok.reshape(dom**m, skolem).any(axis=1))
    return Relation.from_codes(hits, m, dom)


def _check_target(R: Relation, scheme: Scheme, dom: int):
    if R.arity != scheme.target:
        raise ShapeError(f"relation arity {R.arity} != scheme target {scheme.target}")
    if R.dom != dom:
        raise DomainMismatch("relation and family live on different domains")


def is_restrictive(R: Relation, family, scheme: Scheme, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    tight = tight_minor(family, scheme, budgets)
    _check_target(R, scheme, tight.dom)
    return R.tuples <= tight.tuples


def is_extensive(R: Relation, family, scheme: Scheme, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    tight = tight_minor(family, scheme, budgets)
    _check_target(R, scheme, tight.dom)
    return R.tuples >= tight.tuples


def tight_minor_constraint(family, scheme: Scheme, budgets: Budgets = DEFAULT_BUDGETS) -> Constraint:
    family = list(family)
    return Constraint(
        tight_minor([c.antecedent for c in family], scheme, budgets),
        tight_minor([c.consequent for c in family], scheme, budgets),
    )


def is_conjunctive_minor(c: Constraint, family, scheme: Scheme, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    family = list(family)
    return is_restrictive(c.antecedent, [x.antecedent for x in family], scheme, budgets) and is_extensive(
        c.consequent, [x.consequent for x in family], scheme, budgets
    )
