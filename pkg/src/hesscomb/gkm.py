"""Moment graphs on S_n, equivariant classes, and graded ranks.

Vertices are permutations in one-line notation, edges join w to w*(ji) for
j < i <= h(j), and a class assigns an integer polynomial in t_1..t_n to every
vertex subject to the divisibility condition along edges.  Ranks of the
quotient by the positive-degree t-ideal are computed with exact integer
elimination.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cache

from .errors import FormMismatch, KOutOfRange, OddDegree, OutOfRange, ShapeMismatch
from .hessenberg import HessenbergFunction, box_counts, classify_form
from .intpoly import IntPoly, product
from .linalg import IntEchelon

Perm = tuple[int, ...]


@cache
def all_permutations(n: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse_perm(w: Perm) -> Perm:
    out = [0] * len(w)
    for pos, val in enumerate(w):
        out[val - 1] = pos + 1
    return tuple(out)


def compose(u: Perm, w: Perm) -> Perm:
    """(u o w)(i) = u(w(i))."""
    return tuple(u[w[i] - 1] for i in range(len(w)))


def swap_positions(w: Perm, j: int, i: int) -> Perm:
    out = list(w)
    out[j - 1], out[i - 1] = out[i - 1], out[j - 1]
    return tuple(out)


def one_line_str(w: Perm) -> str:
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ".".join(str(v) for v in w)


@dataclass(frozen=True)
class GkmEdge:
    """Edge {w, v} with v = w*(ji); the label is t_{w(i)} - t_{w(j)}."""

    w: Perm
    v: Perm
    j: int
    i: int

    def label(self) -> IntPoly:
        n = len(self.w)
        return IntPoly.var(n, self.w[self.i - 1]) - IntPoly.var(n, self.w[self.j - 1])

    def label_str(self) -> str:
        return f"t{self.w[self.i - 1]}-t{self.w[self.j - 1]}"


@dataclass(frozen=True)
class GkmGraph:
    h: HessenbergFunction
    vertices: tuple[Perm, ...]
    edges: tuple[GkmEdge, ...]

    @property
    def n(self) -> int:
        return self.h.n

    def degree_of(self, w: Perm) -> int:
        return sum(1 for e in self.edges if e.w == w or e.v == w)

    def to_dot(self) -> str:
        lines = ["graph gkm {", "  node [shape=plaintext];"]
        for w in self.vertices:
            lines.append(f'  "{one_line_str(w)}";')
        for e in self.edges:
            lines.append(
                f'  "{one_line_str(e.w)}" -- "{one_line_str(e.v)}" '
                f'[label="{e.label_str()}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "h": list(self.h.values),
                "vertices": [one_line_str(w) for w in self.vertices],
                "edges": [
                    {
                        "u": one_line_str(e.w),
                        "v": one_line_str(e.v),
                        "positions": [e.j, e.i],
                        "label": e.label_str(),
                    }
                    for e in self.edges
                ],
            },
            sort_keys=True,
        )


def build_gkm_graph(h: HessenbergFunction) -> GkmGraph:
    """One vertex per permutation; one edge per unordered pair {w, w*(ji)}."""
    n = h.n
    verts = all_permutations(n)
    edges = []
    for w in verts:
        for j in range(1, n + 1):
            for i in range(j + 1, h(j) + 1):
                v = swap_positions(w, j, i)
                if w < v:
                    edges.append(GkmEdge(w, v, j, i))
    edges.sort(key=lambda e: (e.w, e.v, e.j, e.i))
    return GkmGraph(h, verts, tuple(edges))


@dataclass(frozen=True, eq=False)
class GkmClass:
    """A polynomial value at every vertex of S_n."""

    n: int
    values: dict[Perm, IntPoly] = field(repr=False)

    def __post_init__(self):
        perms = all_permutations(self.n)
        if set(self.values) != set(perms):
            raise ShapeMismatch("class must assign a value to every permutation")

    @classmethod
    def constant(cls, n: int, value: IntPoly | int) -> "GkmClass":
        if isinstance(value, int):
            value = IntPoly.const(n, value)
        return cls(n, {w: value for w in all_permutations(n)})

    @classmethod
    def zero(cls, n: int) -> "GkmClass":
        return cls.constant(n, 0)

    def __getitem__(self, w: Perm) -> IntPoly:
        return self.values[w]

    def support(self) -> list[Perm]:
        return sorted(w for w, p in self.values.items() if not p.is_zero())

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.values.values())

    def degree(self) -> int:
        return max(p.total_degree() for p in self.values.values())

    def is_homogeneous(self) -> bool:
        degs = {p.total_degree() for p in self.values.values() if not p.is_zero()}
        return len(degs) <= 1 and all(p.is_homogeneous() for p in self.values.values())

    def _coerce(self, other) -> "GkmClass":
        if isinstance(other, GkmClass):
            if other.n != self.n:
                raise ShapeMismatch("mismatched n")
            return other
        if isinstance(other, (int, IntPoly)):
            return GkmClass.constant(self.n, other)
        return NotImplemented

    def __add__(self, other) -> "GkmClass":
        o = self._coerce(other)
        return GkmClass(self.n, {w: self.values[w] + o.values[w] for w in self.values})

    def __sub__(self, other) -> "GkmClass":
        o = self._coerce(other)
        return GkmClass(self.n, {w: self.values[w] - o.values[w] for w in self.values})

    def __neg__(self) -> "GkmClass":
        return GkmClass(self.n, {w: -p for w, p in self.values.items()})

    def __mul__(self, other) -> "GkmClass":
        o = self._coerce(other)
        return GkmClass(self.n, {w: self.values[w] * o.values[w] for w in self.values})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GkmClass):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "values": {
                    one_line_str(w): [
                        [list(exps), c] for exps, c in self.values[w].sorted_terms()
                    ]
                    for w in all_permutations(self.n)
                },
            },
            sort_keys=True,
        )


def class_t(n: int, k: int) -> GkmClass:
    """The constant class w -> t_k."""
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    return GkmClass.constant(n, IntPoly.var(n, k))


def class_x(n: int, k: int) -> GkmClass:
    """The class w -> t_{w(k)}."""
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    return GkmClass(n, {w: IntPoly.var(n, w[k - 1]) for w in all_permutations(n)})


def _one_row_h1(h: HessenbergFunction) -> int:
    tag = classify_form(h)
    if tag.one_row_h1 is None:
        raise FormMismatch(f"h={h} is not of the form (h(1), n, ..., n)")
    return tag.one_row_h1


def _transpose_m(h: HessenbergFunction) -> int:
    tag = classify_form(h)
    if tag.transpose_m is None:
        raise FormMismatch(f"h={h} is not of the form ((n-1)^(n-m), n^m)")
    return tag.transpose_m


def _supported_product(n: int, k: int, w: Perm, positions) -> IntPoly:
    tk = IntPoly.var(n, k)
    return product(n, (tk - IntPoly.var(n, w[p - 1]) for p in positions))


def class_y_one_row(h: HessenbergFunction, k: int) -> GkmClass:
    """Supported on w(1) = k with value prod_{l=2}^{h(1)} (t_k - t_{w(l)})."""
    n = h.n
    h1 = _one_row_h1(h)
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    vals = {}
    for w in all_permutations(n):
        if w[0] == k:
            vals[w] = _supported_product(n, k, w, range(2, h1 + 1))
        else:
            vals[w] = IntPoly.zero(n)
    return GkmClass(n, vals)


def class_y_transpose(h: HessenbergFunction, k: int) -> GkmClass:
    """Supported on w(n) = k with value prod_{l=n-m+1}^{n-1} (t_k - t_{w(l)})."""
    n = h.n
    m = _transpose_m(h)
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    vals = {}
    for w in all_permutations(n):
        if w[n - 1] == k:
            vals[w] = _supported_product(n, k, w, range(n - m + 1, n))
        else:
            vals[w] = IntPoly.zero(n)
    return GkmClass(n, vals)


def class_y(h: HessenbergFunction, k: int) -> GkmClass:
    """Dispatch on the form of h; the one-row constructor wins when both apply."""
    tag = classify_form(h)
    if tag.one_row_h1 is not None:
        return class_y_one_row(h, k)
    return class_y_transpose(h, k)


def check_gkm_condition(g: GkmGraph, c: GkmClass) -> tuple[bool, GkmEdge | None]:
    """Divisibility of value differences by edge labels; first failure returned."""
    if g.n != c.n:
        raise ShapeMismatch("graph and class sizes differ")
    for e in g.edges:
        diff = c.values[e.w] - c.values[e.v]
        a = e.w[e.i - 1]
        b = e.w[e.j - 1]
        if not diff.substitute_equal(a, b).is_zero():
            return False, e
    return True, None


def dot_action(v: Perm, c: GkmClass) -> GkmClass:
    """(v . c)(w) = c(v^{-1} w) with variables renamed t_i -> t_{v(i)}."""
    if len(v) != c.n:
        raise ShapeMismatch("permutation length differs from class size")
    vinv = inverse_perm(v)
    return GkmClass(
        c.n, {w: c.values[compose(vinv, w)].permute_vars(v) for w in c.values}
    )


def _product_class(n: int, classes) -> GkmClass:
    acc = GkmClass.constant(n, 1)
    for c in classes:
        acc = acc * c
    return acc


def verify_relations(h: HessenbergFunction) -> dict[str, bool]:
    """Exact tuple checks of the four ideal relations, per applicable form."""
    tag = classify_form(h)
    if tag.is_general:
        raise FormMismatch(f"h={h} matches neither special form")
    n = h.n
    zero = GkmClass.zero(n)
    xs = {k: class_x(n, k) for k in range(1, n + 1)}
    ts = {k: class_t(n, k) for k in range(1, n + 1)}
    report: dict[str, bool] = {}

    def run(form: str, ys: dict[int, GkmClass], pin: int, outside, full, sum_factors):
        report[f"{form}:y-products-vanish"] = all(
            (ys[k] * ys[kk]).is_zero()
            for k in range(1, n + 1)
            for kk in range(k + 1, n + 1)
        )
        report[f"{form}:pin-variable"] = all(
            ((xs[pin] - ts[k]) * ys[k]).is_zero() for k in range(1, n + 1)
        )
        report[f"{form}:complementary-factors"] = all(
            ys[k] * _product_class(n, (ts[k] - xs[l] for l in outside))
            == _product_class(n, (ts[k] - xs[l] for l in full))
            for k in range(1, n + 1)
        )
        total = zero
        for k in range(1, n + 1):
            total = total + ys[k]
        report[f"{form}:sum-identity"] = total == _product_class(
            n, (xs[pin] - xs[l] for l in sum_factors)
        )

    if tag.one_row_h1 is not None:
        h1 = tag.one_row_h1
        ys = {k: class_y_one_row(h, k) for k in range(1, n + 1)}
        run("one-row", ys, 1, range(h1 + 1, n + 1), range(2, n + 1), range(2, h1 + 1))
    if tag.transpose_m is not None:
        m = tag.transpose_m
        ys = {k: class_y_transpose(h, k) for k in range(1, n + 1)}
        run("transpose", ys, n, range(1, n - m + 1), range(1, n), range(n - m + 1, n))
    return report


# --- graded ranks modulo the torus ideal -------------------------------------


@cache
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def _form_parameters(h: HessenbergFunction) -> tuple[int, tuple[int, ...]]:
    """Pin position and factor positions of the y-classes for the form of h."""
    tag = classify_form(h)
    if tag.one_row_h1 is not None:
        return 1, tuple(range(2, tag.one_row_h1 + 1))
    if tag.transpose_m is not None:
        n = h.n
        return n, tuple(range(n - tag.transpose_m + 1, n))
    raise FormMismatch(f"h={h} matches neither special form; generators unknown")


class _DegreeContext:
    """Shared tables for rank computations in one q-degree: the column index
    over (vertex, degree-d t-monomial) pairs and the echelonized t-ideal."""

    def __init__(self, values: tuple[int, ...], d: int):
        h = HessenbergFunction(values)
        n = h.n
        pin, factors = _form_parameters(h)
        self.n = n
        self.d = d
        self.ydeg = len(factors)
        self.perms = all_permutations(n)
        self.vidx = {w: i for i, w in enumerate(self.perms)}
        self.mons = _compositions(d, n)
        self.midx = {mon: i for i, mon in enumerate(self.mons)}
        self.ncols = len(self.perms) * len(self.mons)

        self.yterms: dict[int, list[tuple[Perm, list]]] = {}
        for k in range(1, n + 1):
            rows = []
            for w in self.perms:
                if w[pin - 1] == k:
                    poly = _supported_product(n, k, w, factors)
                    rows.append((w, poly.sorted_terms()))
            self.yterms[k] = rows
        self.const_terms = [(w, [((0,) * n, 1)]) for w in self.perms]

        tideal = IntEchelon(self.ncols)
        for j in range(1, d + 1):
            rest = d - j
            for a in _compositions(j, n):
                for b in self.x_parts(rest):
                    tideal.insert(self.make_row(self.const_terms, a, b))
                if rest >= self.ydeg:
                    for b in self.x_parts(rest - self.ydeg):
                        for k in range(1, n + 1):
                            tideal.insert(self.make_row(self.yterms[k], a, b))
        self.tideal = tideal

    def make_row(self, supp, a: tuple[int, ...], b: tuple[int, ...]) -> dict[int, int]:
        entries: dict[int, int] = {}
        for w, terms in supp:
            base = list(a)
            for pos, e in enumerate(b):
                if e:
                    base[w[pos] - 1] += e
            for exps, coeff in terms:
                key = tuple(x + y for x, y in zip(base, exps))
                col = self.vidx[w] * len(self.mons) + self.midx[key]
                entries[col] = entries.get(col, 0) + coeff
        return entries

    def class_row(self, c: GkmClass) -> dict[int, int]:
        entries: dict[int, int] = {}
        for w, poly in c.values.items():
            for exps, coeff in poly.sorted_terms():
                col = self.vidx[w] * len(self.mons) + self.midx[exps]
                entries[col] = entries.get(col, 0) + coeff
        return entries

    def x_parts(self, total: int):
        # The full product x_1...x_n equals the constant t_1...t_n, so
        # exponent vectors with no zero entry are redundant here.
        for b in _compositions(total, self.n):
            if total < self.n or min(b) == 0:
                yield b


@cache
def _degree_context(values: tuple[int, ...], d: int) -> _DegreeContext:
    return _DegreeContext(values, d)


@cache
def _rank_tables(values: tuple[int, ...], d: int) -> tuple[int, int]:
    """(quotient rank, fixed-subspace rank) in q-degree d for special-form h."""
    n = len(values)
    ctx = _degree_context(values, d)
    ydeg = ctx.ydeg
    zero_a = (0,) * n

    quo = ctx.tideal.clone()
    rank = 0
    for b in ctx.x_parts(d):
        if quo.insert(ctx.make_row(ctx.const_terms, zero_a, b)):
            rank += 1
    if d >= ydeg:
        for b in ctx.x_parts(d - ydeg):
            for k in range(1, n + 1):
                if quo.insert(ctx.make_row(ctx.yterms[k], zero_a, b)):
                    rank += 1

    fix = ctx.tideal.clone()
    fixed = 0
    for b in ctx.x_parts(d):
        if fix.insert(ctx.make_row(ctx.const_terms, zero_a, b)):
            fixed += 1
    if d >= ydeg:
        all_y = [pair for k in range(1, n + 1) for pair in ctx.yterms[k]]
        for b in ctx.x_parts(d - ydeg):
            if fix.insert(ctx.make_row(all_y, zero_a, b)):
                fixed += 1
    return rank, fixed


def in_t_ideal(c: GkmClass, h: HessenbergFunction) -> bool:
    """Whether a homogeneous class lies in (t_1, ..., t_n) times the subring
    generated by the x and y classes.  Requires a special-form h."""
    _form_parameters(h)
    if c.is_zero():
        return True
    if not c.is_homogeneous():
        raise ShapeMismatch("t-ideal test needs a homogeneous class")
    ctx = _degree_context(h.values, c.degree())
    return ctx.tideal.contains(ctx.class_row(c))


def _checked_half_degree(degree_2d: int) -> int:
    if degree_2d < 0:
        raise OutOfRange(f"negative degree {degree_2d}")
    if degree_2d % 2:
        raise OddDegree(f"cohomological degree {degree_2d} is odd")
    return degree_2d // 2


def graded_quotient_rank(h: HessenbergFunction, degree_2d: int) -> int:
    """Rank of the degree-2d part of the class algebra modulo (t_1, ..., t_n)."""
    d = _checked_half_degree(degree_2d)
    return _rank_tables(h.values, d)[0]


def sn_fixed_rank(h: HessenbergFunction, degree_2d: int) -> int:
    """Rank of the dot-action-invariant subspace of the same quotient."""
    d = _checked_half_degree(degree_2d)
    return _rank_tables(h.values, d)[1]


def betti_numbers(h: HessenbergFunction) -> tuple[int, ...]:
    """Quotient ranks for q-degrees 0 through the top (sum of box counts)."""
    top = sum(box_counts(h))
    return tuple(graded_quotient_rank(h, 2 * d) for d in range(top + 1))
