"""Ground truth by explicit construction.

Builds restricted barred preferential arrangements of small sets
outright and counts them. A structure is a tuple of sections; each
section is a tuple of disjoint nonempty blocks (frozensets) whose
order matters. Restricted sections hold at most one block, free
sections hold any ordered set partition of their elements.

Everything here is deliberately naive. These counts are the reference
that the generating-function and recurrence routes are judged against,
so no closed form from those routes may leak in.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

Block = frozenset
Section = tuple  # tuple of Blocks, order significant
Structure = tuple  # tuple of Sections

MAX_N = 9  # count grows super-exponentially past this


class SizeLimitError(ValueError):
    """Ground set too large to enumerate exhaustively."""


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > MAX_N:
        raise SizeLimitError(f"n = {n} exceeds enumeration limit {MAX_N}")


def ordered_set_partitions(elements: Sequence[int]) -> Iterator[Section]:
    """All ordered set partitions of elements into nonempty blocks.

    Recursive on the leading block, which ranges over every nonempty
    subset; block order is significant, so the leading block must NOT
    be canonicalized to contain the first element (that would collapse
    each ordering class to one representative). The empty sequence
    yields the empty partition once.
    """
    elems = tuple(elements)
    if not elems:
        yield ()
        return
    for k in range(1, len(elems) + 1):
        for chosen in itertools.combinations(elems, k):
            first = frozenset(chosen)
            remainder = tuple(e for e in elems if e not in first)
            for tail in ordered_set_partitions(remainder):
                yield (first,) + tail


@lru_cache(maxsize=None)
def _osp_count(m: int) -> int:
    return sum(1 for _ in ordered_set_partitions(range(m)))


def enumerate_preferential_arrangements(n: int) -> int:
    """Number of ordered set partitions of {1..n}, by direct generation."""
    _check_size(n)
    return sum(1 for _ in ordered_set_partitions(range(1, n + 1)))


def enumerate_rbpa(n: int, r: int, j: int) -> int:
    """Count arrangements of {1..n} into r restricted + j free sections.

    Canonical construction: a base-(r+j) counter assigns each element a
    section; a restricted section contributes one arrangement (all its
    elements in a single block), a free section contributes one per
    ordered set partition of its elements.
    """
    _check_size(n)
    if r < 0 or j < 0:
        raise ValueError("r and j must be >= 0")
    k = r + j
    total = 0
    for assignment in itertools.product(range(k), repeat=n):
        sizes = [0] * k
        for sec in assignment:
            sizes[sec] += 1
        ways = 1
        for sec in range(r, k):
            ways *= _osp_count(sizes[sec])
        total += ways
    return total


def iter_rbpa(n: int, kinds: Sequence[str]) -> Iterator[Structure]:
    """Materialize every arrangement of {1..n} over the given sections.

    kinds is a sequence of "restricted" / "free" markers, one per
    section, in section order. Exists so tests can hash structures for
    duplicates and permute the restricted-section placement.
    """
    _check_size(n)
    for kind in kinds:
        if kind not in ("restricted", "free"):
            raise ValueError(f"unknown section kind {kind!r}")
    k = len(kinds)
    elements = range(1, n + 1)
    for assignment in itertools.product(range(k), repeat=n):
        members: list[list[int]] = [[] for _ in range(k)]
        for elem, sec in zip(elements, assignment):
            members[sec].append(elem)
        per_section = []
        for sec in range(k):
            if kinds[sec] == "restricted":
                sec_forms = [()] if not members[sec] else [
                    (frozenset(members[sec]),)
                ]
            else:
                sec_forms = list(ordered_set_partitions(members[sec]))
            per_section.append(sec_forms)
        for combo in itertools.product(*per_section):
            yield tuple(combo)


def enumerate_rbpa_with_empty(n: int, bars: int, i: int, jj: int) -> int:
    """All-restricted arrangements where section i or section jj is empty.

    bars bars give bars+1 restricted sections, indexed 0..bars. Counted
    by filtering every assignment directly; with every section
    restricted an assignment IS the arrangement.
    """
    _check_size(n)
    if bars < 0:
        raise ValueError("bars must be >= 0")
    k = bars + 1
    if not (0 <= i < k and 0 <= jj < k):
        raise IndexError(f"section indices must lie in 0..{k - 1}")
    if i == jj:
        raise ValueError("section indices must differ")
    total = 0
    for assignment in itertools.product(range(k), repeat=n):
        if i not in assignment or jj not in assignment:
            total += 1
    return total


def count_some_section_at_most_one_block(n: int, j: int, marked: int) -> int:
    """Arrangements with j free sections where some marked section is small.

    Counts structures over j free sections in which at least one of the
    first `marked` sections holds at most one block. Used to pin down
    what an alternating inclusion-exclusion sum actually counts.
    """
    _check_size(n)
    if not 0 <= marked <= j:
        raise ValueError("marked must lie in 0..j")
    total = 0
    for structure in iter_rbpa(n, ("free",) * j):
        if any(len(structure[t]) <= 1 for t in range(marked)):
            total += 1
    return total
