"""Symmetric functions with polynomial-in-q coefficients, exact throughout.

A SymFn of degree n is a finite combination of basis elements indexed by
partitions of n (monomial, schur, elementary or homogeneous basis), each
coefficient a QPolynomial.  Conversions route through the monomial basis
using exact rational solves and are verified integral.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .errors import BasisMismatch, DegreeTooLarge, NotSymmetric
from .hessenberg import HessenbergFunction, IncGraph
from .linalg import fraction_solve
from .qpoly import QPolynomial
from .tableaux import Partition, conjugate, enumerate_p_tableaux, inversions

BASES = ("monomial", "schur", "elementary", "homogeneous")
DEFAULT_DEGREE_BOUND = 8


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of n in descending lexicographic order, (n) first."""

    def rec(remaining: int, limit: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(limit, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in rec(n, n))


@dataclass(frozen=True)
class SymFn:
    degree: int
    basis: str
    terms: dict[Partition, QPolynomial]

    def __post_init__(self):
        if self.basis not in BASES:
            raise BasisMismatch(f"unknown basis {self.basis!r}")
        clean = {p: c for p, c in self.terms.items() if c}
        for p in clean:
            if p.size != self.degree:
                raise BasisMismatch(f"partition {p} is not of size {self.degree}")
        object.__setattr__(self, "terms", clean)

    def coefficient(self, p: Partition) -> QPolynomial:
        return self.terms.get(p, QPolynomial.zero())

    def sorted_terms(self) -> list[tuple[Partition, QPolynomial]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def at_q(self, value: int) -> "SymFn":
        return SymFn(
            self.degree,
            self.basis,
            {p: QPolynomial.from_int(c(value)) for p, c in self.terms.items()},
        )

    def __add__(self, other: "SymFn") -> "SymFn":
        if (self.degree, self.basis) != (other.degree, other.basis):
            raise BasisMismatch("cannot add across bases or degrees")
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, QPolynomial.zero()) + c
        return SymFn(self.degree, self.basis, acc)

    def __sub__(self, other: "SymFn") -> "SymFn":
        if (self.degree, self.basis) != (other.degree, other.basis):
            raise BasisMismatch("cannot subtract across bases or degrees")
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, QPolynomial.zero()) - c
        return SymFn(self.degree, self.basis, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFn):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "degree": self.degree,
                "basis": self.basis,
                "terms": [
                    {"partition": list(p.parts), "coeff": c.pairs()}
                    for p, c in self.sorted_terms()
                ],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "SymFn":
        data = json.loads(text)
        return cls(
            data["degree"],
            data["basis"],
            {
                Partition(tuple(t["partition"])): QPolynomial.from_pairs(
                    [(e, c) for e, c in t["coeff"]]
                )
                for t in data["terms"]
            },
        )

    def pretty(self) -> str:
        letter = {"monomial": "m", "schur": "s", "elementary": "e", "homogeneous": "h"}[
            self.basis
        ]
        if not self.terms:
            return "0"
        bits = []
        for p, c in self.sorted_terms():
            bits.append(f"({c})*{letter}{p}")
        return " + ".join(bits)


# --- expansions of basis elements in the monomial basis ---------------------


def _poly_mul(a: dict[tuple[int, ...], int], b: dict[tuple[int, ...], int], nvars: int):
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _elementary_poly(k: int, nvars: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for subset in itertools.combinations(range(nvars), k):
        e = [0] * nvars
        for i in subset:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def _homogeneous_poly(k: int, nvars: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations_with_replacement(range(nvars), k):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return out


def _collect_monomial_coeffs(poly: dict[tuple[int, ...], int], n: int) -> dict[Partition, int]:
    out = {}
    for lam in partitions_of(n):
        key = tuple(lam.parts) + (0,) * (n - len(lam.parts))
        c = poly.get(key, 0)
        if c:
            out[lam] = c
    return out


@cache
def _kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    shape = lam.parts
    content = list(mu.parts) + [0] * (lam.size - len(mu.parts))
    nrows = len(shape)
    grid = [[0] * length for length in shape]
    remaining = list(content)
    count = 0

    def fill(r: int, c: int) -> None:
        nonlocal count
        if r == nrows:
            count += 1
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = grid[r][c - 1]
        if r > 0 and c < shape[r - 1]:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[r][c] = v
                fill(nr, nc)
                remaining[v - 1] += 1

    fill(0, 0)
    return count


@cache
def _monomial_expansion_matrix(n: int, basis: str) -> tuple[tuple[int, ...], ...]:
    """Row lam, column mu: coefficient of m_mu in basis element indexed by lam."""
    parts = partitions_of(n)
    index = {p: i for i, p in enumerate(parts)}
    rows = []
    for lam in parts:
        if basis == "schur":
            row = [0] * len(parts)
            for mu in parts:
                row[index[mu]] = _kostka(lam, mu)
        else:
            maker = _elementary_poly if basis == "elementary" else _homogeneous_poly
            poly: dict[tuple[int, ...], int] = {(0,) * n: 1}
            for part in lam.parts:
                poly = _poly_mul(poly, maker(part, n), n)
            coeffs = _collect_monomial_coeffs(poly, n)
            row = [coeffs.get(mu, 0) for mu in parts]
        rows.append(tuple(row))
    return tuple(rows)


def _to_monomial(f: SymFn) -> SymFn:
    if f.basis == "monomial":
        return f
    parts = partitions_of(f.degree)
    matrix = _monomial_expansion_matrix(f.degree, f.basis)
    acc: dict[Partition, QPolynomial] = {}
    for lam, c in f.terms.items():
        row = matrix[parts.index(lam)]
        for mu, k in zip(parts, row):
            if k:
                acc[mu] = acc.get(mu, QPolynomial.zero()) + c * k
    return SymFn(f.degree, "monomial", acc)


def _from_monomial(f: SymFn, basis: str) -> SymFn:
    if basis == "monomial":
        return f
    parts = partitions_of(f.degree)
    matrix = _monomial_expansion_matrix(f.degree, basis)
    # Solve transpose(matrix) * x = target for each power of q.
    exps = sorted({e for c in f.terms.values() for e in c.coeffs})
    a = [[matrix[j][i] for j in range(len(parts))] for i in range(len(parts))]
    b = []
    for i, mu in enumerate(parts):
        coeff = f.coefficient(mu)
        b.append([coeff.coefficient(e) for e in exps])
    if not exps:
        return SymFn(f.degree, basis, {})
    sol = fraction_solve(a, b)
    acc: dict[Partition, QPolynomial] = {}
    for j, lam in enumerate(parts):
        pairs = []
        for col, e in enumerate(exps):
            v = sol[j][col]
            if v:
                if v.denominator != 1:
                    raise NotSymmetric(f"non-integral coefficient {v} for {lam}")
                pairs.append((e, int(v)))
        if pairs:
            acc[lam] = QPolynomial.from_pairs(pairs)
    return SymFn(f.degree, basis, acc)


def change_basis(f: SymFn, basis: str, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    """Convert between the four supported bases through the monomial hub."""
    if basis not in BASES:
        raise BasisMismatch(f"unknown basis {basis!r}")
    if f.degree > degree_bound:
        raise DegreeTooLarge(f"degree {f.degree} exceeds bound {degree_bound}")
    if f.basis == basis:
        return f
    return _from_monomial(_to_monomial(f), basis)


# --- chromatic quasisymmetric functions --------------------------------------


def csf_by_coloring(g: IncGraph, ordered: bool = False) -> SymFn:
    """Sum over proper colorings of q^(ascents) times the color monomial.

    Ascents are counted on graph edges {i < j} with color(i) < color(j);
    with ordered=True they are counted over all vertex pairs instead (this
    variant is generally not symmetric and then raises NotSymmetric).
    Colors 1..n suffice to determine every monomial coefficient in degree n.
    """
    n = g.n
    neighbors: list[list[int]] = [[] for _ in range(n + 1)]
    for i, j in g.edges:
        neighbors[j].append(i)
    by_content: dict[tuple[int, ...], dict[int, int]] = {}
    coloring = [0] * (n + 1)

    def assign(v: int, asc: int) -> None:
        if v > n:
            counts = [0] * n
            for u in range(1, n + 1):
                counts[coloring[u] - 1] += 1
            key = tuple(counts)
            acc = by_content.setdefault(key, {})
            acc[asc] = acc.get(asc, 0) + 1
            return
        for color in range(1, n + 1):
            if any(coloring[u] == color for u in neighbors[v]):
                continue
            gained = 0
            if ordered:
                gained = sum(1 for u in range(1, v) if coloring[u] < color)
            else:
                gained = sum(1 for u in neighbors[v] if coloring[u] < color)
            coloring[v] = color
            assign(v + 1, asc + gained)
            coloring[v] = 0

    assign(1, 0)
    terms: dict[Partition, QPolynomial] = {}
    for lam in partitions_of(n):
        key = tuple(lam.parts) + (0,) * (n - len(lam.parts))
        if key in by_content:
            terms[lam] = QPolynomial(by_content[key])
    # Symmetry consistency: every rearrangement of a content vector must
    # carry the same q-polynomial as its sorted representative.
    for key, acc in by_content.items():
        lam = Partition(tuple(sorted((c for c in key if c), reverse=True)))
        expect = terms.get(lam, QPolynomial.zero())
        if QPolynomial(acc) != expect:
            raise NotSymmetric(
                f"content {key} carries {QPolynomial(acc)}, expected {expect}"
            )
    return SymFn(n, "monomial", terms)


def csf_schur_by_ptableaux(h: HessenbergFunction) -> SymFn:
    """Schur expansion: coefficient of s_lam is the inversion generating
    function over P-tableaux of shape lam."""
    terms: dict[Partition, QPolynomial] = {}
    for lam in partitions_of(h.n):
        gf = QPolynomial.zero()
        for t in enumerate_p_tableaux(h, lam):
            gf = gf + QPolynomial.q(inversions(h, t).count)
        if gf:
            terms[lam] = gf
    return SymFn(h.n, "schur", terms)


def omega(f: SymFn) -> SymFn:
    """The involution sending s_lam to s_(lam conjugate); schur basis only."""
    if f.basis != "schur":
        raise BasisMismatch("omega acts on the schur basis")
    return SymFn(f.degree, "schur", {conjugate(p): c for p, c in f.terms.items()})


def is_positive(f: SymFn, basis: str) -> tuple[bool, tuple[Partition, int, int] | None]:
    """Convert to the basis and scan for a negative coefficient.

    Returns (True, None) or (False, (partition, q_exponent, coefficient)).
    """
    g = change_basis(f, basis)
    for p, c in sorted(g.terms.items(), key=lambda kv: kv[0].parts, reverse=True):
        for e, v in c.pairs():
            if v < 0:
                return False, (p, e, v)
    return True, None


@dataclass(frozen=True)
class DecompositionCounts:
    """Multiplicities (trivial, standard) of the degree-d summands."""

    n: int
    by_degree: dict[int, tuple[int, int]]

    def total_dimension(self) -> int:
        return sum(m1 + m2 * (self.n - 1) for m1, m2 in self.by_degree.values())

    def totals(self) -> tuple[int, int]:
        m1 = sum(v[0] for v in self.by_degree.values())
        m2 = sum(v[1] for v in self.by_degree.values())
        return m1, m2


def frobenius_from_decomposition(counts: DecompositionCounts) -> SymFn:
    """Graded Frobenius characteristic: trivial -> s_(n), standard -> s_(n-1,1)."""
    n = counts.n
    triv = Partition((n,))
    terms: dict[Partition, QPolynomial] = {triv: QPolynomial.zero()}
    if n >= 2:
        std = Partition((n - 1, 1))
        terms[std] = QPolynomial.zero()
    for d, (m1, m2) in counts.by_degree.items():
        terms[triv] = terms[triv] + QPolynomial({d: m1})
        if n >= 2 and m2:
            terms[std] = terms[std] + QPolynomial({d: m2})
    return SymFn(n, "schur", terms)
