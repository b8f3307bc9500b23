"""Multiplication tables: representation, validation, and element powers.

A semigroup of order n is stored as an n x n Cayley table over elements
0..n-1 (entries[i][j] = i*j). Tables are immutable and safe to share;
every operation here is a pure function of its inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    ExponentNotPowerOfTwoPlusOne,
    MalformedTableError,
    NoRecurrenceError,
    ParseError,
    PreconditionError,
)

MAX_ORDER = 64  # element sets must fit one machine word


@dataclass(frozen=True)
class MulTable:
    """An order-n multiplication table; not necessarily associative until validated."""

    entries: tuple[tuple[int, ...], ...]
    label: str = ""

    def __post_init__(self):
        n = len(self.entries)
        if not 1 <= n <= MAX_ORDER:
            raise MalformedTableError(f"order must be 1..{MAX_ORDER}, got {n}")
        for row in self.entries:
            if len(row) != n:
                raise MalformedTableError(f"expected {n} columns, row has {len(row)}")
            for v in row:
                if not 0 <= v < n:
                    raise MalformedTableError(f"entry {v} out of range 0..{n - 1}")

    @property
    def order(self) -> int:
        return len(self.entries)

    def mul(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def relabeled(self, perm: tuple[int, ...]) -> "MulTable":
        """Rename element x to perm[x]; the result is isomorphic to self."""
        n = self.order
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        e = self.entries
        return MulTable(
            tuple(tuple(perm[e[inv[i]][inv[j]]] for j in range(n)) for i in range(n)),
            label=self.label,
        )


def table(rows, label: str = "") -> MulTable:
    """Build a MulTable from any nested iterable of ints."""
    return MulTable(tuple(tuple(row) for row in rows), label=label)


@dataclass
class ValidationReport:
    is_closed: bool
    is_associative: bool
    first_violation: tuple[int, int, int] | None
    is_idempotent: bool
    exponent_witness: dict[int, bool] = field(default_factory=dict)


def first_associativity_violation(t: MulTable) -> tuple[int, int, int] | None:
    """Lexicographically least triple (i,j,k) with (ij)k != i(jk), or None."""
    e = t.entries
    n = t.order
    for i in range(n):
        ei = e[i]
        for j in range(n):
            eij = e[ei[j]]
            ej = e[j]
            for k in range(n):
                if eij[k] != ei[ej[k]]:
                    return (i, j, k)
    return None


def _generating_set(t: MulTable) -> list[int]:
    """Greedy generating set: smallest elements not already generated."""
    e = t.entries
    gens: list[int] = []
    closed: set[int] = set()
    for x in range(t.order):
        if x in closed:
            continue
        gens.append(x)
        closed.add(x)
        frontier = set(closed)
        while frontier:
            new = {e[a][b] for a in frontier for b in closed} | {
                e[a][b] for a in closed for b in frontier
            }
            frontier = new - closed
            closed |= frontier
    return gens


def is_associative_light(t: MulTable) -> bool:
    """Light's test: check the middle-element law only for a generating set.

    Agrees with the naive triple loop but costs O(|gens| * n^2).
    """
    e = t.entries
    n = t.order
    for a in _generating_set(t):
        ea = e[a]
        for x in range(n):
            xa = e[x][a]
            ex = e[x]
            exa = e[xa]
            for y in range(n):
                if exa[y] != ex[ea[y]]:
                    return False
    return True


def validate_table(t: MulTable, exponents: tuple[int, ...] = (), method: str = "naive") -> ValidationReport:
    """Check associativity and idempotency; optionally record x^r = x for given r.

    method "light" uses the generator-based test and falls back to the naive
    loop only to locate the violating triple.
    """
    if method not in ("naive", "light"):
        raise ValueError(f"unknown method {method!r}")
    if method == "light":
        violation = None if is_associative_light(t) else first_associativity_violation(t)
    else:
        violation = first_associativity_violation(t)
    is_assoc = violation is None
    idem = all(t.entries[i][i] == i for i in range(t.order))
    report = ValidationReport(
        is_closed=True,
        is_associative=is_assoc,
        first_violation=violation,
        is_idempotent=idem,
    )
    for r in exponents:
        report.exponent_witness[r] = is_assoc and satisfies_exponent(t, r)
    return report


def element_power(t: MulTable, a: int, k: int) -> int:
    """a^k by binary exponentiation; bracketing is irrelevant under associativity."""
    if k < 1:
        raise PreconditionError(f"power must be >= 1, got {k}")
    e = t.entries
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else e[result][base]
        base = e[base][base]
        k >>= 1
    return result


def satisfies_exponent(t: MulTable, r: int) -> bool:
    """True iff x^r = x for every element."""
    if r < 2:
        raise PreconditionError(f"exponent must be >= 2, got {r}")
    return all(element_power(t, x, r) == x for x in range(t.order))


def local_exponent(t: MulTable, a: int) -> int:
    """Smallest u > 1 with a^u = a; exists whenever some x^r = x law holds."""
    e = t.entries
    v = a
    for u in range(2, t.order + 2):
        v = e[v][a]
        if v == a:
            return u
    raise NoRecurrenceError(f"no power of {a} up to {t.order + 1} returns to it")


def power_subsemigroup(t: MulTable, a: int, target: int):
    """The 2- or 4-element subsemigroup of powers of a, for tables where
    every local exponent is one more than a power of two.

    target 2 needs a^2 != a and returns {a^(2^(m-1)), a^(2^m)};
    target 4 needs a^3 != a and returns
    {a^(2^(m-2)), a^(2^(m-1)), a^(3*2^(m-2)), a^(2^m)},
    where 2^m + 1 is the local exponent of a.
    """
    from .closure import ElementSet

    if target not in (2, 4):
        raise PreconditionError(f"target must be 2 or 4, got {target}")
    if target == 2 and element_power(t, a, 2) == a:
        raise PreconditionError(f"element {a} is idempotent; no 2-element power set")
    if target == 4 and element_power(t, a, 3) == a:
        raise PreconditionError(f"a^3 = a for element {a}; no 4-element power set")
    k = local_exponent(t, a)
    d = k - 1
    if d & (d - 1):
        raise ExponentNotPowerOfTwoPlusOne(
            f"local exponent {k} of element {a} is not a power of two plus one"
        )
    if target == 2:
        exps = (d // 2, d)
    else:
        exps = (d // 4, d // 2, 3 * d // 4, d)
    elems = {element_power(t, a, x) for x in exps}
    return ElementSet.of(t.order, *elems)


# --- .sgt text format -------------------------------------------------------
#
# line 1: n; lines 2..n+1: n space-separated entries (row i = products i*j).
# Lines starting with '#' are comments; "# label: ..." carries the label.


def format_sgt(t: MulTable) -> str:
    lines = []
    if t.label:
        lines.append(f"# label: {t.label}")
    lines.append(str(t.order))
    lines.extend(" ".join(str(v) for v in row) for row in t.entries)
    return "\n".join(lines) + "\n"


def parse_sgt(text: str) -> MulTable:
    label = ""
    order = None
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("label:"):
                label = comment[len("label:"):].strip()
            continue
        fields = line.split()
        if order is None:
            if len(fields) != 1:
                raise ParseError("expected a single integer order", line=lineno)
            try:
                order = int(fields[0])
            except ValueError:
                raise ParseError(f"bad order {fields[0]!r}", line=lineno) from None
            if not 1 <= order <= MAX_ORDER:
                raise ParseError(f"order must be 1..{MAX_ORDER}, got {order}", line=lineno)
            continue
        if len(rows) == order:
            raise ParseError("extra data after last table row", line=lineno)
        if len(fields) != order:
            raise ParseError(f"expected {order} entries, got {len(fields)}", line=lineno)
        row = []
        for colno, f in enumerate(fields, start=1):
            try:
                v = int(f)
            except ValueError:
                raise ParseError(f"bad entry {f!r}", line=lineno, column=colno) from None
            if not 0 <= v < order:
                raise ParseError(
                    f"entry {v} out of range 0..{order - 1}", line=lineno, column=colno
                )
            row.append(v)
        rows.append(tuple(row))
    if order is None:
        raise ParseError("empty table file")
    if len(rows) != order:
        raise ParseError(f"expected {order} rows, got {len(rows)}")
    return MulTable(tuple(rows), label=label)


def to_json(t: MulTable) -> str:
    return json.dumps({"order": t.order, "entries": t.rows(), "label": t.label})


def from_json(text: str) -> MulTable:
    data = json.loads(text)
    return table(data["entries"], label=data.get("label", ""))
