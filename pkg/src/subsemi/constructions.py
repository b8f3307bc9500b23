"""Factories for the concrete semigroup families used by the verification
harness: rectangular bands, ideal-extension unions, cyclic groups and
direct products, plus the blocking-rectangle solver and counterexample
dispatchers built on them.

Indexing conventions are fixed so emitted tables are byte-stable:
rectangular-band pairs (a, b) map to index a*q + b; unions list the upper
component's elements first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import (
    NoCounterexampleExistsError,
    NoOddPrimeFactorError,
    NoSolutionError,
    NotAssociativeError,
    TooLargeError,
)
from .table import MAX_ORDER, MulTable, first_associativity_violation

# Orders for which every large-enough band has a subsemigroup of that order,
# so no idempotent counterexample exists.
FORCED_BAND_ORDERS = frozenset({1, 2, 4, 6})

# Orders with no blocking rectangle; 12 additionally has no (p, q) at all.
_NO_BLOCKING_RECTANGLE = frozenset({1, 2, 4, 6, 12})


def rectangular_band(p: int, q: int) -> MulTable:
    """Pairs (a, b) with (a1, b1)(a2, b2) = (a1, b2); every element idempotent."""
    if p < 1 or q < 1:
        raise TooLargeError(f"dimensions must be positive, got ({p}, {q})")
    if p * q > MAX_ORDER:
        raise TooLargeError(f"order {p * q} exceeds cap {MAX_ORDER}")
    n = p * q
    entries = tuple(
        tuple((i // q) * q + j % q for j in range(n)) for i in range(n)
    )
    return MulTable(entries, label=f"rect:{p}x{q}")


def union_ideal(upper: MulTable, lower: MulTable) -> MulTable:
    """Disjoint union where mixed products return the lower-component operand.

    The lower component is an ideal; the result is associative for any
    associative inputs and idempotent when both inputs are.
    """
    nu, nl = upper.order, lower.order
    if nu + nl > MAX_ORDER:
        raise TooLargeError(f"order {nu + nl} exceeds cap {MAX_ORDER}")
    n = nu + nl
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < nu and j < nu:
                row.append(upper.entries[i][j])
            elif i >= nu and j >= nu:
                row.append(nu + lower.entries[i - nu][j - nu])
            else:
                row.append(i if i >= nu else j)
        rows.append(tuple(row))
    t = MulTable(tuple(rows), label=f"union:({upper.label or nu},{lower.label or nl})")
    violation = first_associativity_violation(t)
    if violation is not None:  # cannot happen for associative inputs
        raise NotAssociativeError(violation, "union of the given tables is not associative")
    return t


def cyclic_group(q: int) -> MulTable:
    """Addition mod q."""
    if q < 1:
        raise TooLargeError(f"q must be positive, got {q}")
    if q > MAX_ORDER:
        raise TooLargeError(f"order {q} exceeds cap {MAX_ORDER}")
    entries = tuple(tuple((i + j) % q for j in range(q)) for i in range(q))
    return MulTable(entries, label=f"zq:{q}")


def direct_product(a: MulTable, b: MulTable) -> MulTable:
    """Componentwise product on pairs; (i, j) maps to index i*|b| + j."""
    na, nb = a.order, b.order
    if na * nb > MAX_ORDER:
        raise TooLargeError(f"order {na * nb} exceeds cap {MAX_ORDER}")
    n = na * nb
    ea, eb = a.entries, b.entries
    entries = tuple(
        tuple(ea[i // nb][j // nb] * nb + eb[i % nb][j % nb] for j in range(n))
        for i in range(n)
    )
    return MulTable(entries, label=f"prod:({a.label or na},{b.label or nb})")


def rectangle_dims_excluding(n: int) -> tuple[int, int]:
    """Dimensions (p, q) with max{(p-1)q, p(q-1)} < n < pq.

    A rectangular band of these dimensions has order pq > n while every
    proper subsemigroup misses a row or column and so has order < n;
    its spectrum therefore skips n. Recipe: odd n >= 3 uses (2, (n+1)/2);
    n in {8, 10, 14} uses (3, 3), (3, 4), (3, 5); even n >= 16 uses the
    smallest k <= sqrt(n+1) not dividing n with (k, floor(n/k) + 1).
    No pair exists for n in {1, 2, 4, 6, 12}.
    """
    if n < 1:
        raise NoSolutionError(f"n must be positive, got {n}")
    if n in _NO_BLOCKING_RECTANGLE:
        raise NoSolutionError(f"no (p, q) satisfies the blocking inequality for n = {n}")
    if n % 2 == 1:
        return (2, (n + 1) // 2)
    if n in (8, 10, 14):
        return {8: (3, 3), 10: (3, 4), 14: (3, 5)}[n]
    k = next(k for k in range(2, math.isqrt(n + 1) + 1) if n % k)
    return (k, n // k + 1)


def counterexample_without_subsemigroup(n: int) -> MulTable:
    """An idempotent table of order > n whose spectrum excludes n.

    For n = 12 this is the order-13 union of a 3x3 over a 2x2 rectangular
    band; every other admissible n gets a blocking rectangular band.
    Refuses n in {1, 2, 4, 6}: every band of order >= n has a subsemigroup
    of order n there.
    """
    if n in FORCED_BAND_ORDERS:
        raise NoCounterexampleExistsError(
            f"every idempotent semigroup of order >= {n} has a subsemigroup of order {n}"
        )
    if n == 12:
        t = union_ideal(rectangular_band(3, 3), rectangular_band(2, 2))
        return MulTable(t.entries, label="union:(rect:3x3,rect:2x2)")
    return rectangular_band(*rectangle_dims_excluding(n))


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def group_counterexample(r: int, blocked: int) -> MulTable:
    """An abelian group satisfying x^r = x whose spectrum excludes `blocked`.

    blocked = 6 uses Z_q^3 for the smallest prime q dividing r - 1 (subgroup
    orders divide q^3, never 6). blocked in {2, 4} uses Z_q^2 for the
    smallest odd prime q dividing r - 1; fails with NoOddPrimeFactorError
    when r - 1 is a power of two (exactly the regime where orders 2 and 4
    are forced).
    """
    if r < 3:
        raise NoSolutionError(f"r must be >= 3, got {r}")
    if blocked not in (2, 4, 6):
        raise NoSolutionError(f"blocked order must be 2, 4 or 6, got {blocked}")
    primes = _prime_factors(r - 1)
    if blocked == 6:
        q = primes[0]
        t = direct_product(direct_product(cyclic_group(q), cyclic_group(q)), cyclic_group(q))
        return MulTable(t.entries, label=f"zq:{q}^3")
    odd = [p for p in primes if p > 2]
    if not odd:
        raise NoOddPrimeFactorError(f"r - 1 = {r - 1} is a power of two")
    q = odd[0]
    t = direct_product(cyclic_group(q), cyclic_group(q))
    return MulTable(t.entries, label=f"zq:{q}^2")


# --- textual construction grammar -------------------------------------------
#
#   spec  := "rect:" P "x" Q
#          | "zq:" Q [ "^" K ]
#          | "union:(" spec "," spec ")"
#          | "prod:(" spec "," spec ")"
#
# "zq:3^2" abbreviates prod:(zq:3,zq:3). The grammar round-trips through
# parse_construction / format_construction.


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str  # "rect" | "zq" | "union" | "prod"
    p: int = 0
    q: int = 0
    power: int = 1
    parts: tuple["ConstructionSpec", ...] = ()

    def evaluate(self) -> MulTable:
        if self.kind == "rect":
            return rectangular_band(self.p, self.q)
        if self.kind == "zq":
            t = cyclic_group(self.q)
            base = t
            for _ in range(self.power - 1):
                t = direct_product(t, base)
            if self.power > 1:
                t = MulTable(t.entries, label=f"zq:{self.q}^{self.power}")
            return t
        if self.kind == "union":
            return union_ideal(self.parts[0].evaluate(), self.parts[1].evaluate())
        if self.kind == "prod":
            return direct_product(self.parts[0].evaluate(), self.parts[1].evaluate())
        raise ValueError(f"unknown construction kind {self.kind!r}")


def format_construction(spec: ConstructionSpec) -> str:
    if spec.kind == "rect":
        return f"rect:{spec.p}x{spec.q}"
    if spec.kind == "zq":
        return f"zq:{spec.q}" + (f"^{spec.power}" if spec.power != 1 else "")
    return f"{spec.kind}:({format_construction(spec.parts[0])},{format_construction(spec.parts[1])})"


def parse_construction(text: str) -> ConstructionSpec:
    spec, rest = _parse_spec(text.strip())
    if rest:
        raise ValueError(f"trailing input {rest!r} in construction {text!r}")
    return spec


def _parse_spec(text: str) -> tuple[ConstructionSpec, str]:
    m = re.match(r"rect:(\d+)x(\d+)", text)
    if m:
        return ConstructionSpec("rect", p=int(m.group(1)), q=int(m.group(2))), text[m.end():]
    m = re.match(r"zq:(\d+)(?:\^(\d+))?", text)
    if m:
        power = int(m.group(2)) if m.group(2) else 1
        return ConstructionSpec("zq", q=int(m.group(1)), power=power), text[m.end():]
    m = re.match(r"(union|prod):\(", text)
    if m:
        kind = m.group(1)
        first, rest = _parse_spec(text[m.end():])
        if not rest.startswith(","):
            raise ValueError(f"expected ',' in {text!r}")
        second, rest = _parse_spec(rest[1:])
        if not rest.startswith(")"):
            raise ValueError(f"expected ')' in {text!r}")
        return ConstructionSpec(kind, parts=(first, second)), rest[1:]
    raise ValueError(f"cannot parse construction at {text!r}")
