"""Hessenberg functions, their posets and incomparability graphs.

A Hessenberg function on [n] is a weakly increasing h with i <= h(i) <= n.
All public indices are 1-based; h is stored as the value tuple
(h(1), ..., h(n)).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from collections.abc import Iterable, Iterator

from .errors import (
    BelowDiagonal,
    EmptyInput,
    NotWeaklyIncreasing,
    OutOfRange,
)


@dataclass(frozen=True)
class HessenbergFunction:
    """Validated Hessenberg function; construct through new_hessenberg."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRange(f"index {i} outside [1, {self.n}]")
        return self.values[i - 1]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "h": list(self.values)}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "HessenbergFunction":
        data = json.loads(text)
        h = new_hessenberg(data["h"])
        if data.get("n") != h.n:
            raise OutOfRange("field n disagrees with the length of h")
        return h

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


def new_hessenberg(values: Iterable[int]) -> HessenbergFunction:
    """Validate and build a Hessenberg function from its value list."""
    vals = tuple(int(v) for v in values)
    if not vals:
        raise EmptyInput("a Hessenberg function needs at least one value")
    n = len(vals)
    for i, v in enumerate(vals, start=1):
        if not 1 <= v <= n:
            raise OutOfRange(f"h({i}) = {v} outside [1, {n}]")
    if any(a > b for a, b in zip(vals, vals[1:])):
        raise NotWeaklyIncreasing(f"values {vals} decrease")
    for i, v in enumerate(vals, start=1):
        if v < i:
            raise BelowDiagonal(f"h({i}) = {v} < {i}")
    return HessenbergFunction(vals)


def transpose(h: HessenbergFunction) -> HessenbergFunction:
    """Reflect the Dyck path: h'(i) = #{j : h(j) >= n + 1 - i}.

    >>> transpose(new_hessenberg([2, 4, 4, 4])).values
    (3, 3, 4, 4)
    """
    n = h.n
    vals = tuple(sum(1 for v in h.values if v >= n + 1 - i) for i in range(1, n + 1))
    return new_hessenberg(vals)


@dataclass(frozen=True)
class FormTag:
    """Which of the two special shapes h matches (possibly both or neither).

    one_row_h1 is h(1) when h = (h(1), n, ..., n); transpose_m is m when
    h = ((n-1)^(n-m), n^m).  h = (n, ..., n) carries both tags.
    """

    one_row_h1: int | None
    transpose_m: int | None

    @property
    def is_one_row(self) -> bool:
        return self.one_row_h1 is not None

    @property
    def is_transpose(self) -> bool:
        return self.transpose_m is not None

    @property
    def is_general(self) -> bool:
        return not (self.is_one_row or self.is_transpose)

    @property
    def is_full_flag(self) -> bool:
        return self.one_row_h1 is not None and self.one_row_h1 == self.transpose_m


def classify_form(h: HessenbergFunction) -> FormTag:
    n = h.n
    one_row = h.values[0] if all(v == n for v in h.values[1:]) else None
    transpose_m: int | None = None
    if all(v >= n - 1 for v in h.values):
        transpose_m = sum(1 for v in h.values if v == n)
    return FormTag(one_row_h1=one_row, transpose_m=transpose_m)


@dataclass(frozen=True)
class PosetPh:
    """The natural-unit-interval order: i < j exactly when h(i) < j."""

    n: int
    relations: frozenset[tuple[int, int]]

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.relations

    def incomparable(self, i: int, j: int) -> bool:
        return i != j and (i, j) not in self.relations and (j, i) not in self.relations

    def sorted_relations(self) -> list[tuple[int, int]]:
        return sorted(self.relations)


def poset_of(h: HessenbergFunction) -> PosetPh:
    rels = frozenset(
        (i, j)
        for i in range(1, h.n + 1)
        for j in range(h(i) + 1, h.n + 1)
    )
    return PosetPh(h.n, rels)


@dataclass(frozen=True)
class IncGraph:
    """Incomparability graph of PosetPh; edges as sorted pairs {i < j}."""

    n: int
    edges: frozenset[tuple[int, int]]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges


def inc_graph(p: PosetPh | HessenbergFunction) -> IncGraph:
    """Incomparability graph: {i, j} is an edge iff i and j are incomparable."""
    if isinstance(p, HessenbergFunction):
        p = poset_of(p)
    edges = frozenset(
        (i, j)
        for i in range(1, p.n + 1)
        for j in range(i + 1, p.n + 1)
        if p.incomparable(i, j)
    )
    return IncGraph(p.n, edges)


def box_counts(h: HessenbergFunction) -> tuple[int, ...]:
    """The ladder of box counts (h(k) - k); their sum is the complex dimension."""
    return tuple(h(k) - k for k in range(1, h.n + 1))


def all_hessenberg_functions(n: int) -> Iterator[HessenbergFunction]:
    """All Hessenberg functions on [n], lexicographic by value tuple."""
    if n < 1:
        raise EmptyInput("n must be at least 1")

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    for vals in rec([]):
        yield HessenbergFunction(vals)
