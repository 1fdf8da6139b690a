"""Vectorised componentwise application of a table to families of rows.

Everything above the kernel (composition, clone levels, images of
relations, constraint satisfaction) reduces to one primitive: given an
``n``-ary table ``f`` over a base ``b`` and ``n`` stacks of rows
``G_0 .. G_{n-1}`` (each row a length-``p`` vector over ``b``), compute every
row ``f(G_0[i_0], .., G_{n-1}[i_{n-1}])``.  Blocks are chunked so memory
stays bounded; results are deduplicated and returned in lexicographic
(= big-endian) order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from math import prod

import numpy as np

BLOCK_LIMIT = 1 << 22
_CODE_LIMIT = 1 << 62


def threads():
    """Parallelism hint from ``CLONECRAFT_THREADS``; never affects results."""
    try:
        return max(1, int(os.environ.get("CLONECRAFT_THREADS", "1")))
    except ValueError:
        return 1


def ordered_map(fn, items):
    """``map`` that may fan out over threads but always returns input order."""
    items = list(items)
    n = threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def can_code(base, width):
    return base**width < _CODE_LIMIT


def row_codes(rows: np.ndarray, base: int) -> np.ndarray:
    """Big-endian integer code of each row (rows must fit in int64)."""
    width = rows.shape[1]
    weights = base ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return rows.astype(np.int64) @ weights


def rows_from_codes(codes: np.ndarray, base: int, width: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((codes.shape[0], width), dtype=np.int64)
    rest = codes.copy()
    for col in range(width - 1, -1, -1):
        rest, out[:, col] = np.divmod(rest, base)
    return out


def unique_rows(rows: np.ndarray, base: int) -> np.ndarray:
    if rows.shape[0] == 0:
        return rows.reshape(0, rows.shape[1])
    if can_code(base, rows.shape[1]):
        return rows_from_codes(np.unique(row_codes(rows, base)), base, rows.shape[1])
    return np.unique(rows, axis=0)


def _blocks(parts, limit):
    width = parts[0].shape[1]
    sizes = [g.shape[0] for g in parts]
    total = prod(sizes) * width
    if total <= limit:
        yield parts
        return
    t = next(i for i, k in enumerate(sizes) if k > 1)
    rest = total // sizes[t]
    step = max(1, limit // rest)
    for s in range(0, sizes[t], step):
        yield from _blocks(parts[:t] + [parts[t][s : s + step]] + parts[t + 1 :], limit)


def _apply_block(table, base, parts):
    n = len(parts)
    width = parts[0].shape[1]
    idx = np.zeros((1,) * n + (width,), dtype=np.int64)
    for t, g in enumerate(parts):
        shape = [1] * n + [width]
        shape[t] = g.shape[0]
        idx = idx * base + g.reshape(shape)
    return table[idx].reshape(-1, width)


def combine(table, base, parts, out_base, limit=BLOCK_LIMIT) -> np.ndarray:
    """Distinct rows ``f(G_0[i_0], ..)`` over all index choices, sorted.

    ``table`` is the flat table of ``f`` (length ``base**n``), ``parts`` a list
    of ``n`` integer arrays of shape ``(k_t, width)``.
    """
    table = np.asarray(table, dtype=np.int64)
    width = parts[0].shape[1]
    if any(g.shape[0] == 0 for g in parts):
        return np.zeros((0, width), dtype=np.int64)
    coded = can_code(out_base, width)
    found = []
    for block in _blocks(list(parts), limit):
        rows = _apply_block(table, base, block)
        found.append(np.unique(row_codes(rows, out_base)) if coded else unique_rows(rows, out_base))
    if coded:
        return rows_from_codes(np.unique(np.concatenate(found)), out_base, width)
    return unique_rows(np.concatenate(found), out_base)


def combine_codes(table, base, parts, out_base, limit=BLOCK_LIMIT) -> np.ndarray:
    """Like :func:`combine` but returns sorted row codes."""
    rows = combine(table, base, parts, out_base, limit)
    return row_codes(rows, out_base)
