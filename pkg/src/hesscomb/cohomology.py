"""The quotient-ring model: monomial bases, normal forms, transition blocks.

Elements live in Z[x_1..x_n, y_1..y_n] modulo the graded ideal of the one-row
presentation.  Monomials carry at most one y factor (higher y-powers reduce).
Normal forms land on the union of the pure-x basis B1 and the y-sector basis
B2; the alternative y-sector basis B3 uses differences y_{k+1} - y_1.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cache

from .errors import (
    DegenerateForm,
    FormMismatch,
    HesscombError,
    NonTerminating,
    NotInBasis,
    NotSquare,
    ShapeMismatch,
)
from .gkm import GkmClass, class_t, class_x, class_y
from .hessenberg import HessenbergFunction, classify_form
from .linalg import IntEchelon, bareiss_det
from .qpoly import QPolynomial
from .symfunc import DecompositionCounts

_REWRITE_STEP_LIMIT = 5_000_000


@dataclass(frozen=True)
class XYMonomial:
    """x_1^{e_1}...x_n^{e_n} times an optional single y_k factor."""

    xexp: tuple[int, ...]
    y: int | None = None

    def __post_init__(self):
        if not self.xexp:
            raise ShapeMismatch("empty exponent vector")
        if any(e < 0 for e in self.xexp):
            raise ShapeMismatch("negative exponent")
        if self.y is not None and not 1 <= self.y <= len(self.xexp):
            raise ShapeMismatch(f"y index {self.y} outside 1..{len(self.xexp)}")

    @property
    def n(self) -> int:
        return len(self.xexp)

    def xdegree(self) -> int:
        return sum(self.xexp)

    def qdegree(self, ydeg: int) -> int:
        return self.xdegree() + (ydeg if self.y is not None else 0)

    def pretty(self) -> str:
        bits = []
        for i, e in enumerate(self.xexp, start=1):
            if e == 1:
                bits.append(f"x{i}")
            elif e > 1:
                bits.append(f"x{i}^{e}")
        if self.y is not None:
            bits.append(f"y{self.y}")
        return "*".join(bits) if bits else "1"


def _y_rank(k: int | None, n: int) -> int:
    if k is None:
        return 0
    return k if k >= 2 else n + 1


def _mono_key(m: XYMonomial, ydeg: int) -> tuple:
    return (m.qdegree(ydeg), tuple(reversed(m.xexp)), _y_rank(m.y, m.n))


@dataclass(frozen=True, eq=False)
class XYElement:
    n: int
    terms: dict[XYMonomial, int]

    def __post_init__(self):
        clean = {m: c for m, c in self.terms.items() if c}
        for m in clean:
            if m.n != self.n:
                raise ShapeMismatch("mixed variable counts")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, n: int) -> "XYElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "XYElement":
        return cls(n, {XYMonomial((0,) * n): 1})

    @classmethod
    def monomial(cls, m: XYMonomial, c: int = 1) -> "XYElement":
        return cls(m.n, {m: c})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: XYMonomial) -> int:
        return self.terms.get(m, 0)

    def __add__(self, other: "XYElement") -> "XYElement":
        if other.n != self.n:
            raise ShapeMismatch("mixed variable counts")
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return XYElement(self.n, acc)

    def __sub__(self, other: "XYElement") -> "XYElement":
        return self + (-other)

    def __neg__(self) -> "XYElement":
        return XYElement(self.n, {m: -c for m, c in self.terms.items()})

    def scale(self, c: int) -> "XYElement":
        return XYElement(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "XYElement") -> "XYElement":
        """Product when no two y factors meet; use multiply(h, a, b) otherwise."""
        if other.n != self.n:
            raise ShapeMismatch("mixed variable counts")
        acc: dict[XYMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1.y is not None and m2.y is not None:
                    raise HesscombError(
                        "product of two y-monomials depends on h; use multiply()"
                    )
                m = XYMonomial(
                    tuple(a + b for a, b in zip(m1.xexp, m2.xexp)),
                    m1.y if m1.y is not None else m2.y,
                )
                acc[m] = acc.get(m, 0) + c1 * c2
        return XYElement(self.n, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XYElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def sorted_terms(self, ydeg: int = 0) -> list[tuple[XYMonomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: _mono_key(mc[0], ydeg))

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            body = m.pretty()
            if c == 1:
                bits.append(f"+ {body}")
            elif c == -1:
                bits.append(f"- {body}")
            elif c < 0:
                bits.append(f"- {-c}*{body}")
            else:
                bits.append(f"+ {c}*{body}")
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> str:
        return json.dumps(
            {
                "terms": [
                    {"x": list(m.xexp), "y": m.y, "c": c}
                    for m, c in self.sorted_terms()
                ]
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "XYElement":
        data = json.loads(text)
        terms: dict[XYMonomial, int] = {}
        n = None
        for t in data["terms"]:
            m = XYMonomial(tuple(t["x"]), t.get("y"))
            n = m.n
            terms[m] = terms.get(m, 0) + t["c"]
        if n is None:
            raise ShapeMismatch("cannot infer variable count from an empty element")
        return cls(n, terms)


def multiply(h: HessenbergFunction, a: XYElement, b: XYElement) -> XYElement:
    """Full product in the quotient ring, reducing y*y pairs as it goes."""
    h1 = _one_row_h1(h)
    n = h.n
    acc: dict[XYMonomial, int] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            exps = list(x + y for x, y in zip(m1.xexp, m2.xexp))
            c = c1 * c2
            if m1.y is not None and m2.y is not None:
                if m1.y != m2.y:
                    continue
                # y_k^2 = y_k * prod_{l=2}^{h(1)} (-x_l)
                for l in range(2, h1 + 1):
                    exps[l - 1] += 1
                if h1 % 2 == 0:
                    c = -c
                y = m1.y
            else:
                y = m1.y if m1.y is not None else m2.y
            m = XYMonomial(tuple(exps), y)
            acc[m] = acc.get(m, 0) + c
    return XYElement(n, acc)


@dataclass(frozen=True)
class BasisSet:
    label: str
    h: HessenbergFunction
    elements: tuple[XYElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def y_degree(self) -> int:
        tag = classify_form(self.h)
        if self.label.startswith("Transpose"):
            return tag.transpose_m - 1
        if self.label == "Nh":
            return 0
        return tag.one_row_h1 - 1

    def degrees(self) -> list[int]:
        ydeg = self.y_degree()
        return [_element_degree(e, ydeg) for e in self.elements]


def _one_row_h1(h: HessenbergFunction) -> int:
    tag = classify_form(h)
    if tag.one_row_h1 is None:
        raise FormMismatch(f"h={h} is not of the form (h(1), n, ..., n)")
    return tag.one_row_h1


def _element_degree(e: XYElement, ydeg: int) -> int:
    degs = {m.qdegree(ydeg) for m in e.terms}
    if len(degs) != 1:
        raise ShapeMismatch("inhomogeneous basis element")
    return degs.pop()


def _element_key(e: XYElement, ydeg: int):
    rep = min(e.terms, key=lambda m: _y_rank(m.y, m.n))
    return (_element_degree(e, ydeg), tuple(reversed(rep.xexp)), _y_rank(rep.y, rep.n))


def _staircase_monomials(bounds: list[int]) -> list[tuple[int, ...]]:
    """All exponent vectors with 0 <= e_i <= bounds[i], in reversed-lex order."""
    ranges = [range(b + 1) for b in reversed(bounds)]
    out = [tuple(reversed(exps)) for exps in itertools.product(*ranges)]
    return out


def _divisible(exps: tuple[int, ...], positions) -> bool:
    return all(exps[p - 1] >= 1 for p in positions)


def basis_B1(h: HessenbergFunction) -> BasisSet:
    """Staircase monomials (exponent of x_j at most n-j) avoiding x_1...x_{h(1)}."""
    h1 = _one_row_h1(h)
    n = h.n
    monos = [
        XYMonomial(exps)
        for exps in _staircase_monomials([n - j for j in range(1, n + 1)])
        if not _divisible(exps, range(1, h1 + 1))
    ]
    elems = [XYElement.monomial(m) for m in monos]
    elems.sort(key=lambda e: _element_key(e, h1 - 1))
    return BasisSet("B1", h, tuple(elems))


def _y_sector_xparts(h: HessenbergFunction) -> list[tuple[int, ...]]:
    h1 = _one_row_h1(h)
    n = h.n
    bounds = [0] + [v - 2 for v in range(2, n + 1)]
    return [
        exps
        for exps in _staircase_monomials(bounds)
        if not _divisible(exps, range(h1 + 1, n + 1))
    ]


def basis_B2(h: HessenbergFunction) -> BasisSet:
    """x-parts in x_2..x_n (exponent of x_v at most v-2, avoiding the factor
    x_{h(1)+1}...x_n) times y_k for k = 1..n-1."""
    h1 = _one_row_h1(h)
    n = h.n
    elems = [
        XYElement.monomial(XYMonomial(exps, k))
        for exps in _y_sector_xparts(h)
        for k in range(1, n)
    ]
    elems.sort(key=lambda e: _element_key(e, h1 - 1))
    return BasisSet("B2", h, tuple(elems))


def basis_B3(h: HessenbergFunction) -> BasisSet:
    """Same x-parts as B2 times the differences y_{k+1} - y_1, k = 1..n-1."""
    h1 = _one_row_h1(h)
    n = h.n
    elems = []
    for exps in _y_sector_xparts(h):
        for k in range(1, n):
            elems.append(
                XYElement(
                    n,
                    {XYMonomial(exps, k + 1): 1, XYMonomial(exps, 1): -1},
                )
            )
    elems.sort(key=lambda e: _element_key(e, h1 - 1))
    return BasisSet("B3", h, tuple(elems))


def basis_nilpotent(h: HessenbergFunction) -> BasisSet:
    """Monomials with exponent of x_k at most h(k) - k; valid for every h."""
    n = h.n
    monos = _staircase_monomials([h(k) - k for k in range(1, n + 1)])
    elems = [XYElement.monomial(XYMonomial(exps)) for exps in monos]
    elems.sort(key=lambda e: _element_key(e, 0))
    return BasisSet("Nh", h, tuple(elems))


def _transpose_m(h: HessenbergFunction) -> int:
    tag = classify_form(h)
    if tag.transpose_m is None:
        raise FormMismatch(f"h={h} is not of the form ((n-1)^(n-m), n^m)")
    return tag.transpose_m


def mirror_element(e: XYElement) -> XYElement:
    """The variable relabeling x_i <-> x_{n+1-i}; y indices unchanged."""
    return XYElement(
        e.n,
        {XYMonomial(tuple(reversed(m.xexp)), m.y): c for m, c in e.terms.items()},
    )


def basis_transpose(h: HessenbergFunction) -> tuple[BasisSet, BasisSet, BasisSet]:
    """The three mirrored bases for h of transpose form."""
    m = _transpose_m(h)
    n = h.n
    ydeg = m - 1
    b1 = [
        XYElement.monomial(XYMonomial(exps))
        for exps in _staircase_monomials([j - 1 for j in range(1, n + 1)])
        if not _divisible(exps, range(n - m + 1, n + 1))
    ]
    xparts = [
        exps
        for exps in _staircase_monomials([n - 1 - u for u in range(1, n)] + [0])
        if not _divisible(exps, range(1, n - m + 1))
    ]
    b2 = [
        XYElement.monomial(XYMonomial(exps, k)) for exps in xparts for k in range(1, n)
    ]
    b3 = [
        XYElement(n, {XYMonomial(exps, k + 1): 1, XYMonomial(exps, 1): -1})
        for exps in xparts
        for k in range(1, n)
    ]
    sets = []
    for label, elems in (("TransposeB1", b1), ("TransposeB2", b2), ("TransposeB3", b3)):
        elems = sorted(elems, key=lambda e: _element_key(e, ydeg))
        sets.append(BasisSet(label, h, tuple(elems)))
    return tuple(sets)


# --- normal form --------------------------------------------------------------


@cache
def _complete_homogeneous(k: int, lo: int, hi: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the degree-k complete homogeneous sum in x_lo..x_hi."""
    out = []
    for combo in itertools.combinations_with_replacement(range(lo, hi + 1), k):
        exps = [0] * n
        for v in combo:
            exps[v - 1] += 1
        out.append(tuple(exps))
    return tuple(out)


@cache
def _x_straighten_rule(v: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Replacements for x_v^{n+1-v} from h_{n+1-v}(x_1..x_v) = 0: the stripped
    exponent vectors (with the x_v^{n+1-v} term removed), to be negated."""
    k = n + 1 - v
    lead = tuple(k if i == v - 1 else 0 for i in range(n))
    return tuple(e for e in _complete_homogeneous(k, 1, v, n) if e != lead)


@cache
def _y_straighten_rule(v: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Replacements for x_v^{v-1} from h_{v-1}(x_v..x_n) = 0 in the y sector."""
    k = v - 1
    lead = tuple(k if i == v - 1 else 0 for i in range(n))
    return tuple(e for e in _complete_homogeneous(k, v, n, n) if e != lead)


@cache
def _exclusion_rule(h1: int, n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Replacements for x_1 x_2 ... x_{h(1)} from x_1 * prod_{l=2}^{h(1)}
    (x_1 - x_l) = 0: pairs (exponent vector, coefficient)."""
    out = []
    others = list(range(2, h1 + 1))
    for size in range(len(others)):
        for subset in itertools.combinations(others, size):
            exps = [0] * n
            exps[0] = h1 - size
            for l in subset:
                exps[l - 1] = 1
            sign = 1 if (size + h1) % 2 == 0 else -1
            out.append((tuple(exps), sign))
    return tuple(out)


def _find_rewrite(
    m: XYMonomial, n: int, h1: int
) -> list[tuple[XYMonomial, int]] | None:
    """One rewriting step for a single monomial, or None when it is normal."""
    exps = m.xexp
    if m.y is not None:
        if m.y == n:
            # y_n = prod_{l=2}^{h(1)} (x_1 - x_l) - sum_{k<n} y_k
            out = []
            for size in range(h1):
                for subset in itertools.combinations(range(2, h1 + 1), size):
                    new = list(exps)
                    new[0] += h1 - 1 - size
                    for l in subset:
                        new[l - 1] += 1
                    sign = 1 if size % 2 == 0 else -1
                    out.append((XYMonomial(tuple(new)), sign))
            for k in range(1, n):
                out.append((XYMonomial(exps, k), -1))
            return out
        if exps[0] > 0:
            return []
        if _divisible(exps, range(h1 + 1, n + 1)):
            new = list(exps)
            for l in range(h1 + 1, n + 1):
                new[l - 1] -= 1
            for l in range(2, n + 1):
                new[l - 1] += 1
            sign = 1 if (h1 - 1) % 2 == 0 else -1
            return [(XYMonomial(tuple(new)), sign)]
        for v in range(2, n + 1):
            if exps[v - 1] >= v - 1 and v - 1 > 0:
                rest = list(exps)
                rest[v - 1] -= v - 1
                return [
                    (XYMonomial(tuple(r + e for r, e in zip(rest, rep)), m.y), -1)
                    for rep in _y_straighten_rule(v, n)
                ]
        return None
    for v in range(n, 0, -1):
        if exps[v - 1] >= n + 1 - v:
            rest = list(exps)
            rest[v - 1] -= n + 1 - v
            return [
                (XYMonomial(tuple(r + e for r, e in zip(rest, rep))), -1)
                for rep in _x_straighten_rule(v, n)
            ]
    if _divisible(exps, range(1, h1 + 1)):
        rest = list(exps)
        for l in range(1, h1 + 1):
            rest[l - 1] -= 1
        return [
            (XYMonomial(tuple(r + e for r, e in zip(rest, rep))), c)
            for rep, c in _exclusion_rule(h1, n)
        ]
    return None


def normal_form(e: XYElement, h: HessenbergFunction) -> XYElement:
    """Reduce modulo the one-row ideal onto the span of B1 and B2."""
    h1 = _one_row_h1(h)
    n = h.n
    pending = dict(e.terms)
    out: dict[XYMonomial, int] = {}
    steps = 0
    while pending:
        m, c = pending.popitem()
        if c == 0:
            continue
        steps += 1
        if steps > _REWRITE_STEP_LIMIT:
            raise NonTerminating("rewrite step limit exceeded")
        replacement = _find_rewrite(m, n, h1)
        if replacement is None:
            out[m] = out.get(m, 0) + c
        else:
            for m2, c2 in replacement:
                pending[m2] = pending.get(m2, 0) + c * c2
    return XYElement(n, out)


# --- transition blocks and related reports ------------------------------------


@dataclass(frozen=True)
class TransitionBlock:
    """Columns are B1 and B3 elements of one degree in B1-and-B2 coordinates."""

    degree: int
    matrix: tuple[tuple[int, ...], ...]
    row_elements: tuple[XYElement, ...]
    col_elements: tuple[XYElement, ...]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def determinant(self) -> int:
        if any(len(row) != len(self.matrix) for row in self.matrix):
            raise NotSquare("non-square transition block")
        return bareiss_det([list(row) for row in self.matrix])

    def to_csv(self) -> str:
        lines = [f"degree,{self.degree}"]
        for row in self.matrix:
            lines.append(",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


def _by_degree(basis: BasisSet) -> dict[int, list[XYElement]]:
    ydeg = basis.y_degree()
    out: dict[int, list[XYElement]] = {}
    for e in basis.elements:
        out.setdefault(_element_degree(e, ydeg), []).append(e)
    return out


def coordinates(e: XYElement, elements: list[XYElement]) -> list[int]:
    """Coordinates of a normal-form element against a list of basis monomials."""
    index: dict[XYMonomial, int] = {}
    for pos, b in enumerate(elements):
        (mono,) = b.terms.keys()
        index[mono] = pos
    vec = [0] * len(elements)
    for m, c in e.terms.items():
        if m not in index:
            raise NotInBasis(f"monomial {m.pretty()} outside the basis list")
        vec[index[m]] = c
    return vec


def transition_blocks(h: HessenbergFunction) -> list[TransitionBlock]:
    """Per degree, the matrix of B1 and B3 elements over B1 and B2 coordinates."""
    b1, b2, b3 = basis_B1(h), basis_B2(h), basis_B3(h)
    d1, d2, d3 = _by_degree(b1), _by_degree(b2), _by_degree(b3)
    blocks = []
    for d in sorted(set(d1) | set(d3)):
        rows = d1.get(d, []) + d2.get(d, [])
        cols = d1.get(d, []) + d3.get(d, [])
        columns = [coordinates(normal_form(e, h), rows) for e in cols]
        matrix = tuple(
            tuple(columns[j][i] for j in range(len(cols))) for i in range(len(rows))
        )
        blocks.append(TransitionBlock(2 * d, matrix, tuple(rows), tuple(cols)))
    return blocks


def transpose_transition_blocks(h: HessenbergFunction) -> list[TransitionBlock]:
    """Blocks for a transpose-form h via the x_i <-> x_{n+1-i} relabeling."""
    from .hessenberg import transpose

    _transpose_m(h)
    blocks = transition_blocks(transpose(h))
    return [
        TransitionBlock(
            b.degree,
            b.matrix,
            tuple(mirror_element(e) for e in b.row_elements),
            tuple(mirror_element(e) for e in b.col_elements),
        )
        for b in blocks
    ]


def check_unimodular(b: TransitionBlock) -> bool:
    """Exact determinant test |det| = 1."""
    return abs(b.determinant()) == 1


def decomposition_counts(h: HessenbergFunction) -> DecompositionCounts:
    """Per-degree multiplicities: trivial from B1, standard from B3 x-part groups."""
    n = h.n
    counts1 = _by_degree(basis_B1(h))
    counts3 = _by_degree(basis_B3(h))
    degrees = sorted(set(counts1) | set(counts3))
    by_degree = {}
    for d in degrees:
        m1 = len(counts1.get(d, []))
        m2 = len(counts3.get(d, [])) // (n - 1) if n > 1 else 0
        by_degree[d] = (m1, m2)
    return DecompositionCounts(n, by_degree)


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[tuple[XYElement, ...], ...]
    fixed: tuple[XYElement, ...]


def permutation_orbits(h: HessenbergFunction) -> OrbitPartition:
    """Orbit sets {x-part * y_k : k = 1..n} plus a greedily chosen fixed set of
    pure-x monomials making the union linearly independent."""
    h1 = _one_row_h1(h)
    n = h.n
    if h1 == n:
        raise DegenerateForm("no y-sector orbits when h(1) = n")
    b1, b2 = basis_B1(h), basis_B2(h)
    union = list(b1.elements) + list(b2.elements)
    ech = IntEchelon(len(union))
    orbits = []
    for exps in _y_sector_xparts(h):
        orbit = [XYElement.monomial(XYMonomial(exps, k)) for k in range(1, n + 1)]
        for e in orbit:
            vec = coordinates(normal_form(e, h), union)
            ech.insert({i: v for i, v in enumerate(vec) if v})
        orbits.append(tuple(orbit))
    fixed = []
    for e in b1.elements:
        vec = coordinates(e, union)
        if ech.insert({i: v for i, v in enumerate(vec) if v}):
            fixed.append(e)
    return OrbitPartition(tuple(orbits), tuple(fixed))


def degree_gf(b: BasisSet) -> QPolynomial:
    """Generating function of half cohomological degrees over basis elements."""
    acc: dict[int, int] = {}
    for d in b.degrees():
        acc[d] = acc.get(d, 0) + 1
    return QPolynomial(acc)


def monomial_to_gkm(m: XYMonomial, h: HessenbergFunction) -> GkmClass:
    """Pointwise product of the generator classes named by the monomial."""
    tag = classify_form(h)
    if tag.is_general:
        raise FormMismatch(f"h={h} matches neither special form")
    n = h.n
    acc = GkmClass.constant(n, 1)
    for k, e in enumerate(m.xexp, start=1):
        xk = class_x(n, k)
        for _ in range(e):
            acc = acc * xk
    if m.y is not None:
        acc = acc * class_y(h, m.y)
    return acc


def element_to_gkm(e: XYElement, h: HessenbergFunction) -> GkmClass:
    acc = GkmClass.zero(h.n)
    for m, c in e.terms.items():
        acc = acc + monomial_to_gkm(m, h) * c
    return acc
