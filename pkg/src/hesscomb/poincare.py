"""Poincare polynomials computed by independent routes and reconciled.

For one-row h the closed form is h(1)_q (n-1)_q! + (n-1) q^(h(1)-1)
(n-h(1))_q (n-2)_q!.  The tableau route sums inversion generating functions
against standard-tableau counts and works for every h; the basis route adds
the degree generating functions of B1 and B3; the GKM route computes graded
ranks of the quotient model (small n only).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cohomology import basis_B1, basis_B3, degree_gf
from .errors import FormMismatch, OutOfRange
from .gkm import box_counts, graded_quotient_rank
from .hessenberg import HessenbergFunction, classify_form
from .qpoly import QPolynomial, q_factorial, q_int
from .symfunc import partitions_of
from .tableaux import count_syt, enumerate_p_tableaux, inversions

GKM_MAX_N = 4


@dataclass(frozen=True)
class PoincareReport:
    h: HessenbergFunction
    closed_form: QPolynomial | None
    via_tableaux: QPolynomial
    via_basis: QPolynomial | None
    via_gkm: QPolynomial | None
    agree: bool

    def polynomial(self) -> QPolynomial:
        return self.closed_form if self.closed_form is not None else self.via_tableaux

    def to_json(self) -> str:
        poly = self.polynomial()
        return json.dumps(
            {
                "h": list(self.h.values),
                "poincare": [[e, c] for e, c in poly.pairs()],
                "methods_agree": self.agree,
            },
            sort_keys=True,
        )


def closed_form(h: HessenbergFunction) -> QPolynomial:
    """h(1)_q (n-1)_q! + (n-1) q^(h(1)-1) (n-h(1))_q (n-2)_q!."""
    tag = classify_form(h)
    if tag.one_row_h1 is None:
        raise FormMismatch(f"h={h} is not of the form (h(1), n, ..., n)")
    h1, n = tag.one_row_h1, h.n
    first = q_int(h1) * q_factorial(n - 1)
    second = (
        QPolynomial.from_int(n - 1)
        * QPolynomial.q(h1 - 1)
        * q_int(n - h1)
        * q_factorial(n - 2)
    )
    return first + second


def via_ptableaux(h: HessenbergFunction) -> QPolynomial:
    """Sum over partitions of the inversion generating function times the
    number of standard tableaux of that shape."""
    total = QPolynomial.zero()
    for shape in partitions_of(h.n):
        tabs = enumerate_p_tableaux(h, shape)
        if not tabs:
            continue
        gf = QPolynomial.zero()
        for t in tabs:
            gf = gf + QPolynomial.q(inversions(h, t).count)
        total = total + gf * QPolynomial.from_int(count_syt(shape))
    return total


def via_basis_degrees(h: HessenbergFunction) -> QPolynomial:
    """degree_gf(B1) + degree_gf(B3)."""
    return degree_gf(basis_B1(h)) + degree_gf(basis_B3(h))


def via_gkm(h: HessenbergFunction, max_n: int = GKM_MAX_N) -> QPolynomial:
    """Graded ranks of the GKM quotient model; guarded to small n."""
    if h.n > max_n:
        raise OutOfRange(f"GKM ranks guarded to n <= {max_n}, got n = {h.n}")
    top = sum(box_counts(h))
    coeffs = {}
    for d in range(top + 1):
        r = graded_quotient_rank(h, 2 * d)
        if r:
            coeffs[d] = r
    return QPolynomial(coeffs)


def reconcile(h: HessenbergFunction) -> PoincareReport:
    """Runs every applicable method and records whether they all agree."""
    tabs = via_ptableaux(h)
    try:
        closed = closed_form(h)
        basis = via_basis_degrees(h)
    except FormMismatch:
        return PoincareReport(h, None, tabs, None, None, True)
    gkm = via_gkm(h) if h.n <= GKM_MAX_N else None
    computed = [closed, tabs, basis] + ([gkm] if gkm is not None else [])
    agree = all(p == computed[0] for p in computed)
    return PoincareReport(h, closed, tabs, basis, gkm, agree)
