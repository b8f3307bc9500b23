"""Isomorph-free enumeration of all bands, and all semigroups satisfying
x^r = x, of a given small order.

The search fills the Cayley table cell by cell in row-major order.
Associativity is forward-checked incrementally: a triple is tested the
moment the last cell it needs becomes determined. The exponent law is
checked by walking the power chain of an element whenever a cell in its
column is set (the chain x, x^2, ..., x^r reads only column x).

Canonical-only mode keeps exactly the tables that are lexicographically
least in their relabeling class. Pruning is sound and exact: a branch is
cut only when some permutation maps the already-determined prefix to a
strictly smaller one, which dooms every completion; surviving complete
tables pass the full minimal-image test (the row-boundary check over all
permutations). Anti-isomorphic classes are not merged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import OrderTooLargeError
from .table import MulTable

BAND_ORDER_CAP = 7
EXPONENT_ORDER_CAP = 5


@dataclass(frozen=True)
class EnumerationQuery:
    order: int
    constraint: str = "band"  # "band" or "exp:R"
    mode: str = "canonical"  # "canonical" or "labeled"


def _parse_constraint(constraint: str) -> int:
    """Return the exponent r; 'band' and 'exp:2' both mean r = 2."""
    if constraint == "band":
        return 2
    if constraint.startswith("exp:"):
        r = int(constraint[4:])
        if r < 2:
            raise ValueError(f"exponent must be >= 2, got {r}")
        return r
    raise ValueError(f"unknown constraint {constraint!r}; use 'band' or 'exp:R'")


@lru_cache(maxsize=None)
def _sym_data(n: int):
    """Per-order permutation tables for canonicity pruning.

    Returns (by_row, row0_cells): by_row[rr] holds (values, src) pairs for
    every non-identity permutation preserving the element set {0..rr}, where
    src[idx] is the flat source cell of the relabeled table's cell idx;
    row0_cells[j] holds the permutations fixing 0 and preserving {1..j},
    usable after cell (0, j) is filled.
    """
    identity = tuple(range(n))
    entries = []
    for g in itertools.permutations(range(n)):
        if g == identity:
            continue
        ginv = [0] * n
        for i, gi in enumerate(g):
            ginv[gi] = i
        src = tuple(ginv[i] * n + ginv[j] for i in range(n) for j in range(n))
        entries.append((g, tuple(ginv), src))
    by_row = []
    for rr in range(n):
        by_row.append(
            [(g, src) for g, ginv, src in entries if max(ginv[: rr + 1]) <= rr]
        )
    row0_cells: list = [None]
    for j in range(1, n - 1):
        row0_cells.append(
            [
                (g, src)
                for g, ginv, src in entries
                if ginv[0] == 0 and max(ginv[1 : j + 1]) <= j
            ]
        )
    return by_row, row0_cells


def _canonical_flats(n: int, r: int) -> list[tuple[int, ...]]:
    """All canonical tables of order n with x^r = x, as flat tuples, lex order."""
    if n == 1:
        return [(0,)]
    by_row, row0_cells = _sym_data(n)
    n2 = n * n
    flat: list = [None] * n2
    byval: list[list[int]] = [[] for _ in range(n)]
    band = r == 2
    results: list[tuple[int, ...]] = []

    def assoc_ok(a: int, b: int, v: int) -> bool:
        an = a * n
        bn = b * n
        vn = v * n
        # (a, b, z): (ab)z = a(bz)
        for z in range(n):
            bz = flat[bn + z]
            if bz is None:
                continue
            vz = flat[vn + z]
            if vz is None:
                continue
            abz = flat[an + bz]
            if abz is not None and vz != abz:
                return False
        # (x, a, b): (xa)b = x(ab)
        for x in range(n):
            xa = flat[x * n + a]
            if xa is None:
                continue
            xab = flat[xa * n + b]
            if xab is None:
                continue
            xv = flat[x * n + v]
            if xv is not None and xab != xv:
                return False
        # (x, y, b) with xy = a: the new cell is the outer-left product
        for pos in byval[a]:
            y = pos % n
            yb = flat[y * n + b]
            if yb is None:
                continue
            x = pos // n
            xyb = flat[x * n + yb]
            if xyb is not None and xyb != v:
                return False
        # (a, y, z) with yz = b: the new cell is the outer-right product
        for pos in byval[b]:
            y, z = divmod(pos, n)
            ay = flat[an + y]
            if ay is None:
                continue
            ayz = flat[ay * n + z]
            if ayz is not None and ayz != v:
                return False
        return True

    def chain_ok(b: int) -> bool:
        # power chain of b reads only column b; unknown cells defer the check
        p = flat[b * n + b]
        for _ in range(r - 1):
            if p is None:
                return True
            prev = p
            p = flat[p * n + b]
        return flat[prev * n + b] is None or p == b

    def prefix_canonical(perms, limit: int) -> bool:
        for gvals, src in perms:
            for idx in range(limit):
                val = gvals[flat[src[idx]]]
                cur = flat[idx]
                if val != cur:
                    if val < cur:
                        return False
                    break
        return True

    def fill(pos: int):
        if pos == n2:
            results.append(tuple(flat))
            return
        a, b = divmod(pos, n)
        values = (a,) if band and a == b else range(n)
        for v in values:
            flat[pos] = v
            byval[v].append(pos)
            ok = assoc_ok(a, b, v) and (band or chain_ok(b))
            if ok and a == 0 and 1 <= b <= n - 2:
                ok = prefix_canonical(row0_cells[b], b + 1)
            if ok and b == n - 1:
                ok = prefix_canonical(by_row[a], pos + 1)
            if ok:
                fill(pos + 1)
            byval[v].pop()
            flat[pos] = None

    fill(0)
    return results


_census_cache: dict[tuple[int, int], list[tuple[int, ...]]] = {}


def _canonical_census(n: int, r: int) -> list[tuple[int, ...]]:
    key = (n, r)
    if key not in _census_cache:
        _census_cache[key] = _canonical_flats(n, r)
    return _census_cache[key]


def _relabel_flat(flat: tuple[int, ...], n: int, g: tuple[int, ...]) -> tuple[int, ...]:
    ginv = [0] * n
    for i, gi in enumerate(g):
        ginv[gi] = i
    return tuple(g[flat[ginv[i] * n + ginv[j]]] for i in range(n) for j in range(n))


def _to_table(flat: tuple[int, ...], n: int, label: str) -> MulTable:
    return MulTable(tuple(flat[i * n : (i + 1) * n] for i in range(n)), label=label)


def default_cap(constraint: str) -> int:
    return BAND_ORDER_CAP if _parse_constraint(constraint) == 2 else EXPONENT_ORDER_CAP


def enumerate_tables(order: int, constraint: str = "band", mode: str = "canonical", cap: int | None = None):
    """Yield associative tables of the given order satisfying the constraint.

    mode "canonical" gives one representative per isomorphism class, in
    lexicographic order of the flattened table; "labeled" expands every
    class to all of its distinct relabelings, also in lexicographic order.
    """
    r = _parse_constraint(constraint)
    if cap is None:
        cap = default_cap(constraint)
    if order < 1:
        raise OrderTooLargeError(f"order must be positive, got {order}")
    if order > cap:
        raise OrderTooLargeError(
            f"order {order} exceeds the {constraint} census cap {cap}"
        )
    if mode not in ("canonical", "labeled"):
        raise ValueError(f"unknown mode {mode!r}")
    canon = _canonical_census(order, r)
    if mode == "canonical":
        for i, flat in enumerate(canon):
            yield _to_table(flat, order, f"{constraint}:order{order}#{i}")
    else:
        seen = set()
        for flat in canon:
            for g in itertools.permutations(range(order)):
                seen.add(_relabel_flat(flat, order, g))
        for i, flat in enumerate(sorted(seen)):
            yield _to_table(flat, order, f"{constraint}:order{order}:labeled#{i}")


def count_tables(order: int, constraint: str = "band", mode: str = "canonical", cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_tables(order, constraint, mode, cap))


def run_query(q: EnumerationQuery, cap: int | None = None):
    return enumerate_tables(q.order, q.constraint, q.mode, cap)


# --- census manifest export --------------------------------------------------
#
# One line per table: order, the n*n flattened entries, constraint tag.


def format_manifest_line(t: MulTable, constraint: str) -> str:
    flat = " ".join(str(v) for row in t.entries for v in row)
    return f"{t.order} {flat} {constraint}"
