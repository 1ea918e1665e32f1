"""Command line front end.

One JSON document per invocation on stdout (or an aligned text table with
--output table); diagnostics go to stderr.  Exit codes: 0 success, 1 domain
error, 2 usage error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, serialize
from .errors import DomainError, PayloadError, RingParseError
from .geometry import (
    PointSet,
    extend_arc,
    extend_cap,
    is_arc,
    is_cap,
    is_complete_arc,
    is_complete_cap,
    max_arc_size_formula,
    max_cap_size_formula,
    search_max_arc,
    search_max_cap,
)
from .matrix import completion, gl_inverse, mccoy_rank, right_inverse
from .oracle import DEFAULT_BUDGET, enumerate_subspaces, verify_counts
from .ring import Ring, parse_ring
from .singular import SingularSpace, canonical_mt_transform, type_of
from .subspace import (
    Subspace,
    as_subspace,
    dimension_formula_status,
    dual,
    duality_laws,
    join,
    meet,
)

SEARCH_BUDGET = 10**7


def _ring(args) -> Ring:
    return parse_ring(args.ring)


def _matrix(args, attr: str = "matrix"):
    payload = serialize.load_payload(getattr(args, attr))
    return serialize.parse_matrix(_ring(args), payload)


def _subspace(args, attr: str):
    return Subspace.from_matrix(_matrix(args, attr))


def _point_set(args) -> PointSet:
    ring = _ring(args)
    rows = serialize.parse_point_rows(ring, serialize.load_payload(args.points))
    if rows:
        return PointSet.from_rows(ring, rows)
    if args.n is None:
        raise PayloadError("empty point set needs an explicit -n")
    return PointSet.of(ring, args.n, [])


def _budget(args, fallback: int) -> int:
    return args.budget if args.budget is not None else fallback


# -- command handlers ----------------------------------------------------------


def _cmd_ring_info(args):
    ring = _ring(args)
    return {
        "ring": ring.spec_string(),
        "components": [
            {"prime": c.prime, "exponent": c.exponent, "order": c.order}
            for c in ring.components
        ],
        "order": serialize.count_str(ring.order),
        "units": serialize.count_str(ring.unit_count),
        "coprime": ring.is_coprime,
        "gl2": serialize.count_str(counting.count_gl(2, ring)),
    }, 0


def _cmd_matrix_rank(args):
    return {"rank": mccoy_rank(_matrix(args))}, 0


def _cmd_matrix_complete(args):
    s = completion(_matrix(args))
    return {"completion": serialize.matrix_to_json(s)}, 0


def _cmd_matrix_invert(args):
    inv = gl_inverse(_matrix(args))
    return {"inverse": serialize.matrix_to_json(inv)}, 0


def _cmd_matrix_right_inverse(args):
    b = right_inverse(_matrix(args))
    return {"right_inverse": serialize.matrix_to_json(b)}, 0


def _cmd_subspace_canon(args):
    return serialize.subspace_to_json(_subspace(args, "matrix")), 0


def _linear_subset_payload(l):
    try:
        canonical = serialize.subspace_to_json(as_subspace(l))
        free = True
    except DomainError:
        canonical = None
        free = False
    out = serialize.linear_subset_to_json(l, free)
    out["canonical"] = canonical
    return out


def _cmd_subspace_meet(args):
    return _linear_subset_payload(meet(_subspace(args, "a"), _subspace(args, "b"))), 0


def _cmd_subspace_join(args):
    return _linear_subset_payload(join(_subspace(args, "a"), _subspace(args, "b"))), 0


def _cmd_subspace_dual(args):
    return serialize.subspace_to_json(dual(_subspace(args, "matrix"))), 0


def _cmd_subspace_dimcheck(args):
    a = _subspace(args, "a")
    b = _subspace(args, "b")
    st = dimension_formula_status(a, b)
    out = {
        "dim_a": st.dim_a,
        "dim_b": st.dim_b,
        "dim_join": st.dim_join,
        "dim_meet": st.dim_meet,
        "formula_holds": st.formula_holds,
        "join_is_subspace": st.join_is_subspace,
        "meet_is_subspace": st.meet_is_subspace,
        "meet_law": None,
        "join_law": None,
    }
    if st.formula_holds:
        laws = duality_laws(a, b)
        out["meet_law"] = laws.meet_law_holds
        out["join_law"] = laws.join_law_holds
    return out, 0


def _count_payload(value: int):
    return {"count": serialize.count_str(value)}, 0


def _cmd_count_subspaces(args):
    return _count_payload(counting.count_subspaces(args.m, args.n, _ring(args)))


def _cmd_count_in(args):
    return _count_payload(
        counting.count_subspaces_in(args.m1, args.m, args.n, _ring(args))
    )


def _cmd_count_over(args):
    return _count_payload(
        counting.count_subspaces_over(args.m1, args.m, args.n, _ring(args))
    )


def _cmd_count_fullrank(args):
    return _count_payload(counting.count_full_rank(args.m, args.n, _ring(args)))


def _cmd_count_gl(args):
    return _count_payload(counting.count_gl(args.n, _ring(args)))


def _cmd_count_mt(args):
    return _count_payload(
        counting.count_mt_subspaces(args.m, args.t, args.n, args.k, _ring(args))
    )


def _cmd_count_mt_in(args):
    return _count_payload(
        counting.count_mt_in(
            args.m1, args.t1, args.m, args.t, args.n, args.k, _ring(args)
        )
    )


def _cmd_count_mt_over(args):
    return _count_payload(
        counting.count_mt_over(
            args.m1, args.t1, args.m, args.t, args.n, args.k, _ring(args)
        )
    )


def _cmd_singular_type(args):
    space = SingularSpace(_ring(args), args.n, args.k)
    tp = type_of(_subspace(args, "matrix"), space)
    return {"m": tp.m, "t": tp.t, "typed": tp.typed}, 0


def _cmd_singular_canon(args):
    space = SingularSpace(_ring(args), args.n, args.k)
    tp = type_of(_subspace(args, "matrix"), space)
    trans, target = canonical_mt_transform(tp)
    return {
        "transform": serialize.matrix_to_json(trans),
        "canonical": serialize.subspace_to_json(target),
    }, 0


def _cmd_singular_count(args):
    return _count_payload(
        counting.count_mt_subspaces(args.m, args.t, args.n, args.k, _ring(args))
    )


def _cmd_singular_enumerate(args):
    ring = _ring(args)
    space = SingularSpace(ring, args.n, args.k)
    budget = _budget(args, DEFAULT_BUDGET)
    if (args.m is None) != (args.t is None):
        raise PayloadError("give both -m and -t, or neither")
    if args.m is not None:
        found = []
        for sub in enumerate_subspaces(args.m, space.ambient, ring, budget):
            tp = type_of(sub, space)
            if tp.typed and tp.type == (args.m, args.t):
                found.append(sub)
        return {
            "count": serialize.count_str(len(found)),
            "subspaces": [serialize.subspace_to_json(s) for s in found],
        }, 0
    census: dict[tuple[int, int], int] = {}
    untyped = 0
    for m in range(space.ambient + 1):
        for sub in enumerate_subspaces(m, space.ambient, ring, budget):
            tp = type_of(sub, space)
            if tp.typed:
                census[tp.type] = census.get(tp.type, 0) + 1
            else:
                untyped += 1
    return {
        "census": [
            {"m": m, "t": t, "count": serialize.count_str(c)}
            for (m, t), c in sorted(census.items())
        ],
        "untyped": serialize.count_str(untyped),
    }, 0


def _cmd_arc_check(args):
    return {"arc": is_arc(_point_set(args))}, 0


def _cmd_cap_check(args):
    return {"cap": is_cap(_point_set(args))}, 0


def _cmd_arc_complete(args):
    budget = _budget(args, DEFAULT_BUDGET)
    return {"complete": is_complete_arc(_point_set(args), budget)}, 0


def _cmd_cap_complete(args):
    budget = _budget(args, DEFAULT_BUDGET)
    return {"complete": is_complete_cap(_point_set(args), budget)}, 0


def _cmd_arc_extend(args):
    budget = _budget(args, DEFAULT_BUDGET)
    pts = extend_arc(_point_set(args), budget)
    return {"extensions": serialize.pointset_to_json(pts)}, 0


def _cmd_cap_extend(args):
    budget = _budget(args, DEFAULT_BUDGET)
    pts = extend_cap(_point_set(args), budget)
    return {"extensions": serialize.pointset_to_json(pts)}, 0


def _cmd_arc_search(args):
    ps = search_max_arc(args.n, _ring(args), _budget(args, SEARCH_BUDGET))
    return {
        "size": len(ps.points),
        "points": serialize.pointset_to_json(ps.points),
    }, 0


def _cmd_cap_search(args):
    ps = search_max_cap(args.n, _ring(args), _budget(args, SEARCH_BUDGET))
    return {
        "size": len(ps.points),
        "points": serialize.pointset_to_json(ps.points),
    }, 0


def _cmd_arc_max(args):
    return {"size": max_arc_size_formula(args.n, _ring(args))}, 0


def _cmd_cap_max(args):
    return {"size": max_cap_size_formula(args.n, _ring(args))}, 0


def _cmd_verify(args):
    reports = verify_counts(args.suite)
    mismatches = sum(1 for r in reports if not r.match)
    payload = {
        "suite": args.suite,
        "total": len(reports),
        "mismatches": mismatches,
        "reports": [
            {
                "query": r.query,
                "formula": serialize.count_str(r.formula_value),
                "enumerated": serialize.count_str(r.enumerated_value),
                "match": r.match,
            }
            for r in reports
        ],
    }
    return payload, (3 if mismatches else 0)


# -- parser ---------------------------------------------------------------------


def _add_common(p, ring=True, budget=False):
    if ring:
        p.add_argument("--ring", required=True, help="ring spec, e.g. Z4 or Z2xZ9")
    p.add_argument(
        "--output", choices=["json", "table"], default="json", help="output format"
    )
    if budget:
        p.add_argument("--budget", type=int, default=None, help="node budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringspace",
        description="Exact linear algebra and finite geometry over Z_{p^s} products.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    g_ring = top.add_parser("ring", help="ring inspection").add_subparsers(
        dest="command", required=True
    )
    p = g_ring.add_parser("info", help="components, order, units, |GL_2|")
    _add_common(p)
    p.set_defaults(handler=_cmd_ring_info)

    g_mat = top.add_parser("matrix", help="matrix operations").add_subparsers(
        dest="command", required=True
    )
    for name, handler, hlp in [
        ("rank", _cmd_matrix_rank, "McCoy rank"),
        ("complete", _cmd_matrix_complete, "S with A*S = (I|0)"),
        ("invert", _cmd_matrix_invert, "inverse of a square matrix"),
        ("right-inverse", _cmd_matrix_right_inverse, "B with A*B = I"),
    ]:
        p = g_mat.add_parser(name, help=hlp)
        _add_common(p)
        p.add_argument("--matrix", required=True, help="JSON rows or @file")
        p.set_defaults(handler=handler)

    g_sub = top.add_parser("subspace", help="subspace operations").add_subparsers(
        dest="command", required=True
    )
    for name, handler, hlp in [
        ("canon", _cmd_subspace_canon, "canonical form of a free subspace"),
        ("dual", _cmd_subspace_dual, "orthogonal dual subspace"),
    ]:
        p = g_sub.add_parser(name, help=hlp)
        _add_common(p)
        p.add_argument("--matrix", required=True, help="generating rows")
        p.set_defaults(handler=handler)
    for name, handler, hlp in [
        ("meet", _cmd_subspace_meet, "intersection (may not be free)"),
        ("join", _cmd_subspace_join, "sum (may not be free)"),
        ("dimcheck", _cmd_subspace_dimcheck, "dimension formula status"),
    ]:
        p = g_sub.add_parser(name, help=hlp)
        _add_common(p)
        p.add_argument("--a", required=True, help="first subspace rows")
        p.add_argument("--b", required=True, help="second subspace rows")
        p.set_defaults(handler=handler)

    g_cnt = top.add_parser("count", help="closed-form counts").add_subparsers(
        dest="command", required=True
    )
    p = g_cnt.add_parser("subspaces", help="free m-subspaces of R^n")
    _add_common(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_count_subspaces)
    for name, handler, hlp in [
        ("in", _cmd_count_in, "m1-subspaces inside a fixed m-subspace"),
        ("over", _cmd_count_over, "m-subspaces containing a fixed m1-subspace"),
    ]:
        p = g_cnt.add_parser(name, help=hlp)
        _add_common(p)
        p.add_argument("--m1", type=int, required=True)
        p.add_argument("-m", type=int, required=True)
        p.add_argument("-n", type=int, required=True)
        p.set_defaults(handler=handler)
    p = g_cnt.add_parser("fullrank", help="full McCoy rank m x n matrices")
    _add_common(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_count_fullrank)
    p = g_cnt.add_parser("gl", help="order of GL_n(R)")
    _add_common(p)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_count_gl)
    p = g_cnt.add_parser("mt", help="(m,t)-subspaces of a singular space")
    _add_common(p)
    for flag in ["-m", "-t", "-n", "-k"]:
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(handler=_cmd_count_mt)
    for name, handler in [("mt-in", _cmd_count_mt_in), ("mt-over", _cmd_count_mt_over)]:
        p = g_cnt.add_parser(name, help=f"nested (m,t) count: {name}")
        _add_common(p)
        p.add_argument("--m1", type=int, required=True)
        p.add_argument("--t1", type=int, required=True)
        for flag in ["-m", "-t", "-n", "-k"]:
            p.add_argument(flag, type=int, required=True)
        p.set_defaults(handler=handler)

    g_sing = top.add_parser("singular", help="singular space operations").add_subparsers(
        dest="command", required=True
    )
    p = g_sing.add_parser("type", help="(m, t) type of a subspace")
    _add_common(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.set_defaults(handler=_cmd_singular_type)
    p = g_sing.add_parser("canon", help="group element to the canonical (m, t)-subspace")
    _add_common(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.set_defaults(handler=_cmd_singular_canon)
    p = g_sing.add_parser("count", help="closed-form (m, t)-subspace count")
    _add_common(p)
    for flag in ["-n", "-k", "-m", "-t"]:
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(handler=_cmd_singular_count)
    p = g_sing.add_parser("enumerate", help="census or list by brute force")
    _add_common(p, budget=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("-t", type=int, default=None)
    p.set_defaults(handler=_cmd_singular_enumerate)

    for kind, handlers in [
        (
            "arc",
            {
                "check": _cmd_arc_check,
                "complete": _cmd_arc_complete,
                "extend": _cmd_arc_extend,
                "search": _cmd_arc_search,
                "max": _cmd_arc_max,
            },
        ),
        (
            "cap",
            {
                "check": _cmd_cap_check,
                "complete": _cmd_cap_complete,
                "extend": _cmd_cap_extend,
                "search": _cmd_cap_search,
                "max": _cmd_cap_max,
            },
        ),
    ]:
        g = top.add_parser(kind, help=f"{kind} operations").add_subparsers(
            dest="command", required=True
        )
        for name in ["check", "complete", "extend"]:
            p = g.add_parser(name, help=f"{name} a point set")
            _add_common(p, budget=True)
            p.add_argument("--points", required=True, help="JSON point rows or @file")
            p.add_argument("-n", type=int, default=None, help="ambient dimension")
            p.set_defaults(handler=handlers[name])
        p = g.add_parser("search", help="exhaustive maximum search")
        _add_common(p, budget=True)
        p.add_argument("-n", type=int, required=True)
        p.set_defaults(handler=handlers["search"])
        p = g.add_parser("max", help="known maximum size, null when unknown")
        _add_common(p)
        p.add_argument("-n", type=int, required=True)
        p.set_defaults(handler=handlers["max"])

    p = top.add_parser("verify", help="formula vs enumeration suites")
    _add_common(p, ring=False)
    p.add_argument(
        "--suite",
        choices=["default", "counts", "geometry", "algebra"],
        default="default",
    )
    p.set_defaults(handler=_cmd_verify)

    return parser


# -- output rendering -----------------------------------------------------------


def _flat(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + " ".join(_flat(v) for v in value) + "]"
    return str(value)


def _render_table(payload, indent: int = 0, out=None) -> list[str]:
    lines = out if out is not None else []
    pad = "  " * indent
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, dict) or (
                isinstance(value, list) and value and isinstance(value[0], (dict, list))
            ):
                lines.append(f"{pad}{key}:")
                _render_table(value, indent + 1, lines)
            else:
                lines.append(f"{pad}{key}: {_flat(value)}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, dict):
                lines.append(
                    pad + "  ".join(f"{k}={_flat(v)}" for k, v in value.items())
                )
            else:
                lines.append(pad + _flat(value))
    else:
        lines.append(pad + _flat(payload))
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, code = args.handler(args)
    except (RingParseError, PayloadError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output == "table":
        print("\n".join(_render_table(payload)))
    else:
        print(serialize.dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
