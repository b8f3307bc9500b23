"""Generated subsemigroups, order-k existence search, and order spectra.

Subsets are bit-vectors (Python ints), one bit per element. Two exact
search strategies are available: a full scan over all 2^n subsets (the
default, capped), and a walk of the closed-set lattice that only ever
visits subsemigroups (needed above the scan cap).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptySeedError, OrderTooLargeForExhaustive, OutOfRangeError
from .table import MulTable

SCAN_CAP = 16  # orders above this need the lattice strategy


@dataclass(frozen=True)
class ElementSet:
    """A subset of 0..order-1 as a bit-vector."""

    bits: int
    order: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise OutOfRangeError(f"bits {self.bits:#x} out of range for order {self.order}")

    @classmethod
    def of(cls, order: int, *elements: int) -> "ElementSet":
        bits = 0
        for x in elements:
            if not 0 <= x < order:
                raise OutOfRangeError(f"element {x} out of range 0..{order - 1}")
            bits |= 1 << x
        return cls(bits, order)

    @classmethod
    def full(cls, order: int) -> "ElementSet":
        return cls((1 << order) - 1, order)

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.order) if self.bits >> i & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.order and bool(self.bits >> x & 1)

    def __iter__(self):
        return iter(self.members())


def _closure_bits(entries, bits: int) -> int:
    """Least superset of bits closed under the product."""
    members = [i for i in range(len(entries)) if bits >> i & 1]
    frontier = list(members)
    while frontier:
        new: list[int] = []
        for a in frontier:
            row_a = entries[a]
            for b in members:
                for v in (row_a[b], entries[b][a]):
                    if not bits >> v & 1:
                        bits |= 1 << v
                        new.append(v)
        members.extend(new)
        frontier = new
    return bits


def _is_closed_bits(entries, bits: int) -> bool:
    members = [i for i in range(len(entries)) if bits >> i & 1]
    for a in members:
        row = entries[a]
        for b in members:
            if not bits >> row[b] & 1:
                return False
    return True


def closure(t: MulTable, seed: ElementSet) -> ElementSet:
    """Subsemigroup generated by seed (the closure fixpoint)."""
    if seed.bits == 0:
        raise EmptySeedError("closure of the empty set is undefined")
    if seed.order != t.order:
        raise OutOfRangeError(f"seed is over order {seed.order}, table has {t.order}")
    return ElementSet(_closure_bits(t.entries, seed.bits), t.order)


def _closed_sets_scan(entries):
    """All nonempty closed subsets by scanning every bitmask (order <= SCAN_CAP)."""
    n = len(entries)
    for bits in range(1, 1 << n):
        if _is_closed_bits(entries, bits):
            yield bits


def _closed_sets_lattice(entries):
    """All nonempty closed subsets via closures of grown seeds.

    Every subsemigroup is reached: add its elements one by one, closing
    after each step; the intermediate closures are themselves visited
    subsemigroups. Exact at any order, but memory scales with the count
    of subsemigroups.
    """
    n = len(entries)
    seen: set[int] = set()
    stack = []
    for x in range(n):
        c = _closure_bits(entries, 1 << x)
        if c not in seen:
            seen.add(c)
            stack.append(c)
    while stack:
        bits = stack.pop()
        for x in range(n):
            if bits >> x & 1:
                continue
            c = _closure_bits(entries, bits | 1 << x)
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return seen


def all_subsemigroups(t: MulTable, method: str = "scan"):
    """Yield every nonempty closed subset exactly once, in increasing
    (cardinality, bit-pattern) order.

    method: "scan" (exhaustive subset scan, order <= SCAN_CAP), "lattice"
    (closed-set walk, any order), or "auto".
    """
    if method == "auto":
        method = "scan" if t.order <= SCAN_CAP else "lattice"
    if method == "scan":
        if t.order > SCAN_CAP:
            raise OrderTooLargeForExhaustive(
                f"order {t.order} exceeds scan cap {SCAN_CAP}; pass method='lattice'"
            )
        found = list(_closed_sets_scan(t.entries))
    elif method == "lattice":
        found = list(_closed_sets_lattice(t.entries))
    else:
        raise ValueError(f"unknown method {method!r}")
    found.sort(key=lambda b: (b.bit_count(), b))
    for bits in found:
        yield ElementSet(bits, t.order)


def has_subsemigroup_of_order(t: MulTable, k: int) -> ElementSet | None:
    """Bit-pattern-minimal subsemigroup of cardinality exactly k, or None.

    Exhaustive: a None result proves nonexistence. Above the scan cap the
    closed-set lattice walk is used automatically.
    """
    if not 1 <= k <= t.order:
        raise OutOfRangeError(f"k must be 1..{t.order}, got {k}")
    entries = t.entries
    if t.order <= SCAN_CAP:
        for bits in range(1, 1 << t.order):
            if bits.bit_count() == k and _is_closed_bits(entries, bits):
                return ElementSet(bits, t.order)
        return None
    candidates = [b for b in _closed_sets_lattice(entries) if b.bit_count() == k]
    if not candidates:
        return None
    return ElementSet(min(candidates), t.order)


@dataclass(frozen=True)
class Spectrum:
    """Cardinalities realized by subsemigroups of a table."""

    achievable: frozenset[int]
    ambient_order: int

    def __contains__(self, k: int) -> bool:
        return k in self.achievable

    def sorted(self) -> list[int]:
        return sorted(self.achievable)


def spectrum(t: MulTable, method: str = "scan") -> Spectrum:
    """The set { |S| : S a subsemigroup of t }."""
    sizes = {s.bits.bit_count() for s in all_subsemigroups(t, method=method)}
    return Spectrum(frozenset(sizes), t.order)
