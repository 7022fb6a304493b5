"""Command-line front end.

Every subcommand prints a single machine-readable document (JSON by default)
with canonical ordering, so output is byte-stable for fixed inputs.  Errors
are reported as a JSON error object with exit code 2 (validation) and
verification mismatches exit with code 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import goldens
from .bijections import (
    TabPair,
    phi_b1,
    phi_b3,
    phi_nilpotent,
    psi_b1,
    psi_b3,
    psi_nilpotent,
    trace_phi_b1,
    trace_phi_b3,
    trace_phi_nilpotent,
)
from .cohomology import (
    BasisSet,
    XYElement,
    XYMonomial,
    basis_B1,
    basis_B2,
    basis_B3,
    basis_nilpotent,
    basis_transpose,
    check_unimodular,
    transition_blocks,
)
from .errors import GuardrailExceeded, HesscombError, KOutOfRange, UnsupportedFormat
from .gkm import (
    build_gkm_graph,
    check_gkm_condition,
    class_t,
    class_x,
    class_y,
    class_y_one_row,
    class_y_transpose,
    verify_relations,
)
from .hessenberg import HessenbergFunction, inc_graph, new_hessenberg
from .poincare import reconcile
from .symfunc import change_basis, csf_by_coloring, is_positive, omega
from .tableaux import Partition, PTableau, enumerate_p_tableaux, inversions, syt_with_bottom_pair

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3

DEFAULT_MAX_N = 7


@dataclass(frozen=True)
class RunConfig:
    command: str
    h: HessenbergFunction | None
    shape: Partition | None
    fmt: str
    max_n: int
    seed: int
    long_tests: bool


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise HesscombError(f"could not parse {what} {text!r} as comma-separated integers") from exc


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _json(data) -> str:
    return json.dumps(data, sort_keys=True)


def _terms_data(f) -> list[dict]:
    return json.loads(f.to_json())["terms"]


def _element_data(e: XYElement) -> dict:
    return json.loads(e.to_json())


def _require_format(fmt: str, allowed: tuple[str, ...]) -> None:
    if fmt not in allowed:
        raise UnsupportedFormat(f"format {fmt!r} not available here (choose from {', '.join(allowed)})")


def _guard(h: HessenbergFunction, max_n: int) -> None:
    if h.n > max_n:
        raise GuardrailExceeded(
            f"n = {h.n} exceeds the --max-n guardrail of {max_n}; "
            "pass a larger --max-n to run this size explicitly"
        )


def _cmd_csf(cfg: RunConfig) -> tuple[str, int]:
    h = cfg.h
    f = csf_by_coloring(inc_graph(h))
    schur = change_basis(f, "schur")
    at_one = change_basis(f.at_q(1), "elementary")
    omega_h = change_basis(omega(schur), "homogeneous")
    if cfg.fmt == "latex":
        return schur.pretty(), EXIT_OK
    _require_format(cfg.fmt, ("json", "latex"))
    data = {
        "h": list(h.values),
        "monomial": _terms_data(f),
        "schur": _terms_data(schur),
        "elementary_at_q1": _terms_data(at_one),
        "schur_positive": is_positive(schur, "schur")[0],
        "e_positive_at_q1": is_positive(at_one, "elementary")[0],
        "omega_h_positive": is_positive(omega_h, "homogeneous")[0],
    }
    return _json(data), EXIT_OK


def _cmd_poincare(cfg: RunConfig) -> tuple[str, int]:
    report = reconcile(cfg.h)
    if cfg.fmt == "latex":
        return report.polynomial().latex(), EXIT_OK
    _require_format(cfg.fmt, ("json", "latex"))
    code = EXIT_OK if report.agree else EXIT_VERIFICATION
    return report.to_json(), code


def _cmd_tableaux(cfg: RunConfig) -> tuple[str, int]:
    _require_format(cfg.fmt, ("json",))
    h = cfg.h
    if cfg.shape is None:
        raise HesscombError("tableaux requires --shape")
    if cfg.shape.size != h.n:
        raise HesscombError(f"shape {cfg.shape} has size {cfg.shape.size}, expected {h.n}")
    tabs = enumerate_p_tableaux(h, cfg.shape)
    data = {
        "h": list(h.values),
        "shape": list(cfg.shape.parts),
        "count": len(tabs),
        "tableaux": [
            {"rows": [list(r) for r in t.rows], "inversions": inversions(h, t).count}
            for t in tabs
        ],
    }
    return _json(data), EXIT_OK


def _parse_class_name(h: HessenbergFunction, name: str, variant: str):
    kind, index = name[0], name[1:]
    if kind not in ("x", "y", "t") or not index.isdigit():
        raise HesscombError(f"unknown class name {name!r}; use e.g. x2, y2, t1")
    k = int(index)
    if kind == "t":
        return class_t(h.n, k)
    if kind == "x":
        return class_x(h.n, k)
    if variant == "one-row":
        return class_y_one_row(h, k)
    if variant == "transpose":
        return class_y_transpose(h, k)
    return class_y(h, k)


def _cmd_gkm(cfg: RunConfig, args) -> tuple[str, int]:
    h = cfg.h
    if args.dump_class:
        _require_format(cfg.fmt, ("json",))
        c = _parse_class_name(h, args.dump_class, args.variant)
        holds, bad = check_gkm_condition(build_gkm_graph(h), c)
        data = {
            "h": list(h.values),
            "class": args.dump_class,
            "values": {
                "".join(str(v) for v in w): poly.pretty()
                for w, poly in sorted(c.values.items())
            },
            "gkm_condition": holds,
        }
        if bad is not None:
            data["failing_edge"] = json.loads(_json({
                "u": "".join(str(v) for v in bad.w),
                "v": "".join(str(v) for v in bad.v),
                "label": bad.label_str(),
            }))
        return _json(data), EXIT_OK
    if args.relations:
        _require_format(cfg.fmt, ("json",))
        rel = verify_relations(h)
        data = {"h": list(h.values), "relations": rel, "all_hold": all(rel.values())}
        return _json(data), EXIT_OK if data["all_hold"] else EXIT_VERIFICATION
    g = build_gkm_graph(h)
    if cfg.fmt == "dot":
        return g.to_dot(), EXIT_OK
    _require_format(cfg.fmt, ("json", "dot"))
    return g.to_json(), EXIT_OK


def _basis_payload(b: BasisSet) -> dict:
    return {
        "label": b.label,
        "count": len(b.elements),
        "degrees": b.degrees(),
        "elements": [_element_data(e) for e in b.elements],
    }


def _cmd_basis(cfg: RunConfig, args) -> tuple[str, int]:
    h = cfg.h
    if args.blocks:
        blocks = transition_blocks(h)
        if cfg.fmt == "csv":
            return "\n".join(b.to_csv() for b in blocks), EXIT_OK
        _require_format(cfg.fmt, ("json", "csv"))
        data = {
            "h": list(h.values),
            "blocks": [
                {
                    "degree": b.degree,
                    "size": b.size,
                    "determinant": b.determinant(),
                    "unimodular": check_unimodular(b),
                    "matrix": [list(row) for row in b.matrix],
                }
                for b in blocks
            ],
        }
        return _json(data), EXIT_OK
    _require_format(cfg.fmt, ("json",))
    which = args.which
    if which == "transpose":
        sets = basis_transpose(h)
        data = {"h": list(h.values), "bases": [_basis_payload(b) for b in sets]}
        return _json(data), EXIT_OK
    builder = {
        "B1": basis_B1,
        "B2": basis_B2,
        "B3": basis_B3,
        "Nh": basis_nilpotent,
    }[which]
    payload = _basis_payload(builder(h))
    payload["h"] = list(h.values)
    return _json(payload), EXIT_OK


def _parse_tableau_rows(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        rows = json.loads(text)
        return tuple(tuple(int(v) for v in row) for row in rows)
    except (ValueError, TypeError) as exc:
        raise HesscombError(f"could not parse tableau rows from {text!r}") from exc


def _bijection_forward(cfg: RunConfig, args) -> tuple[str, int]:
    h = cfg.h
    exps = _parse_int_list(args.monomial, "--monomial")
    if args.map == "b3":
        if args.k is None:
            raise HesscombError("map b3 needs --k for the y index")
        e = XYElement(h.n, {XYMonomial(exps, args.k): 1, XYMonomial(exps, 1): -1})
        if args.trace:
            return _json(trace_phi_b3(h, e)), EXIT_OK
        pair = phi_b3(h, e)
        data = {
            "map": "b3",
            "h": list(h.values),
            "input": _element_data(e),
            "output": json.loads(pair.to_json()),
        }
        return _json(data), EXIT_OK
    m = XYMonomial(exps)
    if args.map == "nilpotent":
        if args.trace:
            return _json(trace_phi_nilpotent(h, m)), EXIT_OK
        t = phi_nilpotent(h, m)
    else:
        if args.trace:
            return _json(trace_phi_b1(h, m)), EXIT_OK
        t = phi_b1(h, m)
    data = {
        "map": args.map,
        "h": list(h.values),
        "input": {"x": list(m.xexp)},
        "output": json.loads(t.to_json()),
    }
    return _json(data), EXIT_OK


def _bijection_inverse(cfg: RunConfig, args) -> tuple[str, int]:
    h = cfg.h
    rows = _parse_tableau_rows(args.tableau)
    shape = Partition(tuple(len(r) for r in rows))
    t = PTableau(shape, rows)
    if args.map == "b3":
        if args.k is None:
            raise HesscombError("map b3 needs --k to pin the standard tableau")
        pair = TabPair(syt_with_bottom_pair(h.n, args.k), t)
        e = psi_b3(h, pair)
        data = {
            "map": "b3",
            "h": list(h.values),
            "input": json.loads(pair.to_json()),
            "output": _element_data(e),
        }
        return _json(data), EXIT_OK
    reader = psi_nilpotent if args.map == "nilpotent" else psi_b1
    m = reader(h, t)
    data = {
        "map": args.map,
        "h": list(h.values),
        "input": json.loads(t.to_json()),
        "output": {"x": list(m.xexp)},
    }
    return _json(data), EXIT_OK


def _bijection_round_trip(cfg: RunConfig, args) -> tuple[str, int]:
    h = cfg.h
    if args.map == "nilpotent":
        basis = basis_nilpotent(h)
        checked = 0
        ok = True
        for el in basis.elements:
            (m,) = el.terms.keys()
            ok = ok and psi_nilpotent(h, phi_nilpotent(h, m)) == m
            checked += 1
    elif args.map == "b1":
        basis = basis_B1(h)
        checked = 0
        ok = True
        for el in basis.elements:
            (m,) = el.terms.keys()
            ok = ok and psi_b1(h, phi_b1(h, m)) == m
            checked += 1
    else:
        basis = basis_B3(h)
        checked = 0
        ok = True
        for el in basis.elements:
            ok = ok and psi_b3(h, phi_b3(h, el)) == el
            checked += 1
    data = {"map": args.map, "h": list(h.values), "count": checked, "all_ok": ok}
    return _json(data), EXIT_OK if ok else EXIT_VERIFICATION


def _cmd_bijection(cfg: RunConfig, args) -> tuple[str, int]:
    _require_format(cfg.fmt, ("json",))
    if args.round_trip:
        return _bijection_round_trip(cfg, args)
    if args.monomial is not None:
        return _bijection_forward(cfg, args)
    if args.tableau is not None:
        return _bijection_inverse(cfg, args)
    raise HesscombError("bijection needs --monomial, --tableau, or --round-trip")


def _cmd_verify_goldens(cfg: RunConfig) -> tuple[str, int]:
    _require_format(cfg.fmt, ("json",))
    results = goldens.verify_all()
    items = []
    for r in results:
        item = {"key": r.key, "ok": r.ok}
        if not r.ok:
            item["detail"] = r.detail
        items.append(item)
    all_ok = all(r.ok for r in results)
    data = {"results": items, "all_ok": all_ok}
    return _json(data), EXIT_OK if all_ok else EXIT_VERIFICATION


def _add_common(p: argparse.ArgumentParser, *, needs_h: bool) -> None:
    p.add_argument("--h", dest="h_values", required=needs_h, help="Hessenberg function as a comma list, e.g. 2,3,3")
    p.add_argument("--shape", help="partition as a comma list, e.g. 2,1,1,1")
    p.add_argument("--format", dest="fmt", default="json", choices=("json", "csv", "latex", "dot"))
    p.add_argument("--max-n", dest="max_n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--long-tests", dest="long_tests", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesscomb",
        description="Exact combinatorial models of Hessenberg cohomology rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("csf", help="chromatic quasisymmetric function report"), needs_h=True)
    _add_common(sub.add_parser("poincare", help="Poincare polynomial reconciliation"), needs_h=True)
    _add_common(sub.add_parser("tableaux", help="enumerate P-tableaux with inversions"), needs_h=True)

    gkm = sub.add_parser("gkm", help="GKM graph, classes, relations")
    _add_common(gkm, needs_h=True)
    gkm.add_argument("--dump-class", help="class name such as x2, y2, t1")
    gkm.add_argument("--variant", choices=("auto", "one-row", "transpose"), default="auto")
    gkm.add_argument("--relations", action="store_true", help="verify the product relations")

    basis = sub.add_parser("basis", help="monomial bases and transition blocks")
    _add_common(basis, needs_h=True)
    basis.add_argument("--which", choices=("B1", "B2", "B3", "Nh", "transpose"), default="B1")
    basis.add_argument("--blocks", action="store_true", help="emit per-degree transition blocks")

    bij = sub.add_parser("bijection", help="apply, trace, or round-trip the tableau maps")
    _add_common(bij, needs_h=True)
    bij.add_argument("--map", choices=("nilpotent", "b1", "b3"), required=True)
    bij.add_argument("--monomial", help="x-exponents as a comma list")
    bij.add_argument("--k", type=int, help="y index for map b3")
    bij.add_argument("--tableau", help="tableau rows, bottom-up, as JSON")
    bij.add_argument("--trace", action="store_true", help="emit every insertion step")
    bij.add_argument("--round-trip", dest="round_trip", action="store_true")

    verify = sub.add_parser(
        "verify-goldens",
        aliases=["verify-paper"],
        help="recompute all embedded reference examples and diff",
    )
    _add_common(verify, needs_h=False)
    return parser


def _config_from(args) -> RunConfig:
    h = None
    if getattr(args, "h_values", None):
        h = new_hessenberg(_parse_int_list(args.h_values, "--h"))
        _guard(h, args.max_n)
    shape = None
    if getattr(args, "shape", None):
        shape = Partition(_parse_int_list(args.shape, "--shape"))
    command = args.command
    if command == "verify-paper":
        command = "verify-goldens"
    return RunConfig(command, h, shape, args.fmt, args.max_n, args.seed, args.long_tests)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from(args)
        if cfg.command == "csf":
            out, code = _cmd_csf(cfg)
        elif cfg.command == "poincare":
            out, code = _cmd_poincare(cfg)
        elif cfg.command == "tableaux":
            out, code = _cmd_tableaux(cfg)
        elif cfg.command == "gkm":
            out, code = _cmd_gkm(cfg, args)
        elif cfg.command == "basis":
            out, code = _cmd_basis(cfg, args)
        elif cfg.command == "bijection":
            out, code = _cmd_bijection(cfg, args)
        else:
            out, code = _cmd_verify_goldens(cfg)
    except HesscombError as exc:
        _emit(_json({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return EXIT_VALIDATION
    _emit(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
