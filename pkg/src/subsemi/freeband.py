"""Free idempotent semigroups: the Green-Rees order formula, the word
problem, canonical forms, and explicit tables for up to three generators.

Words are plain strings over the alphabet 'a', 'b', 'c'. Two words are
equal in the free band iff they have the same letter set and, recursively,
the same marked prefix and suffix: the shortest prefix containing every
letter determines a (prefix-minus-last-letter, last-new-letter) pair, and
dually from the right. The canonical form realizes one representative per
class by stitching the two marked halves with maximal overlap.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import AlphabetError, TooLargeError
from .table import MulTable

ALPHABET = "abc"  # textual interface cap; raise with care, table sizes explode
TABLE_GENERATOR_CAP = 3  # free band on 4 generators already has order 332,380


def green_rees_order(n: int) -> int:
    """Order of the free idempotent semigroup on n generators (exact)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = 0
    for r in range(1, n + 1):
        prod = 1
        for i in range(1, r + 1):
            prod *= (r - i + 1) ** (2**i)
        total += math.comb(n, r) * prod
    return total


def _check_word(w: str) -> str:
    if not w:
        raise AlphabetError("words must be nonempty")
    for ch in w:
        if ch not in ALPHABET:
            raise AlphabetError(f"letter {ch!r} outside alphabet {ALPHABET!r}")
    return w


def _marks(w: str) -> tuple[str, str, str, str]:
    """(p, x, y, s): shortest all-letter prefix is p+x, shortest suffix is y+s."""
    content_size = len(set(w))
    seen: set[str] = set()
    for i, ch in enumerate(w):
        seen.add(ch)
        if len(seen) == content_size:
            p, x = w[:i], ch
            break
    seen = set()
    for i in range(len(w) - 1, -1, -1):
        seen.add(w[i])
        if len(seen) == content_size:
            y, s = w[i], w[i + 1:]
            break
    return p, x, y, s


def word_equal(u: str, v: str) -> bool:
    """True iff u and v represent the same free-band element."""
    _check_word(u)
    _check_word(v)
    return _word_equal(u, v)


def _word_equal(u: str, v: str) -> bool:
    if set(u) != set(v):
        return False
    if len(set(u)) == 1:
        return True
    pu, xu, yu, su = _marks(u)
    pv, xv, yv, sv = _marks(v)
    return (
        xu == xv
        and yu == yv
        and _word_equal(pu, pv)
        and _word_equal(su, sv)
    )


def canonical_form(w: str) -> str:
    """The unique representative of w's class; idempotent and content-preserving."""
    return _canon(_check_word(w))


@lru_cache(maxsize=None)
def _canon(w: str) -> str:
    if len(set(w)) == 1:
        return w[0]
    p, x, y, s = _marks(w)
    left = _canon(p) + x
    right = y + _canon(s)
    k = min(len(left), len(right))
    while k and left[len(left) - k:] != right[:k]:
        k -= 1
    return left + right[k:]


def multiply(u: str, v: str) -> str:
    """Product in the free band: concatenate, then normalize."""
    return _canon(_check_word(u) + _check_word(v))


def free_band_elements(k: int) -> list[str]:
    """All canonical words on the first k letters, sorted by (length, text)."""
    if not 1 <= k <= TABLE_GENERATOR_CAP:
        raise TooLargeError(
            f"explicit free-band tables are capped at {TABLE_GENERATOR_CAP} generators"
        )
    elems = set(ALPHABET[:k])
    while True:
        new = {_canon(u + v) for u in elems for v in elems} - elems
        if not new:
            break
        elems |= new
    return sorted(elems, key=lambda w: (len(w), w))


def free_band_table(k: int) -> tuple[MulTable, list[str]]:
    """Multiplication table of the free band on k generators plus the legend
    mapping each element index to its canonical word."""
    legend = free_band_elements(k)
    index = {w: i for i, w in enumerate(legend)}
    entries = tuple(
        tuple(index[_canon(u + v)] for v in legend) for u in legend
    )
    return MulTable(entries, label=f"free-band:{k}"), legend


def format_legend(legend: list[str]) -> str:
    return "".join(f"{i} {w}\n" for i, w in enumerate(legend))


def evaluate_word(t: MulTable, w: str, assignment: dict[str, int]) -> int:
    """Image of w in table t under a letters-to-elements assignment."""
    val = assignment[w[0]]
    for ch in w[1:]:
        val = t.entries[val][assignment[ch]]
    return val
