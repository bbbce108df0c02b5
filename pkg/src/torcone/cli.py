"""Command-line front end.

Every command prints one JSON document on stdout and a one-line summary on
stderr. Exit codes: 0 ok, 1 verification failed, 2 invalid input,
3 unsupported (for instance a cone above the dimension cap).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classify import (
    AnglePair,
    ClassificationResult,
    ConeInput,
    FreeTorus3,
    FreeTriple,
    FreeTrivial,
    classify,
)
from .cone import Cone, normalize_to_standard, reeb_vector, slice_cone
from .errors import InvalidAnglePair, InvalidInput, Unsupported, VerificationFailure
from .lattice import gcd_reduce, mat_vec, primitive
from .schemas import parse_rational, rational_str, validate_cone_payload

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3

STATUS = {
    EXIT_OK: "ok",
    EXIT_VERIFY: "verdict-failure",
    EXIT_INVALID: "invalid-input",
    EXIT_UNSUPPORTED: "unsupported",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _ints(xs) -> list[str]:
    return [str(int(x)) for x in xs]


def _rats(xs) -> list[str]:
    return [rational_str(x) for x in xs]


def _matrix(m) -> list[list[str]]:
    return [_ints(row) for row in m]


def _vectors(raw, dim: int) -> list[tuple]:
    out = []
    for v in raw:
        if len(v) != dim:
            raise InvalidInput(f"vector {v} does not have dimension {dim}")
        out.append(tuple(parse_rational(x) for x in v))
    return out


def _angle_pair(data: dict) -> AnglePair:
    if data["dim"] != 2 or len(data.get("generators", ())) != 2 or "facet_normals" in data:
        raise InvalidAnglePair("a winding needs a planar cone given by exactly two generators")
    r1, r2 = (primitive(v) for v in _vectors(data["generators"], 2))
    if not any(r1) or not any(r2):
        raise InvalidAnglePair("angle pair rays must be nonzero")
    cross = r1[0] * r2[1] - r1[1] * r2[0]
    dot = r1[0] * r2[0] + r1[1] * r2[1]
    winding = data["winding"]
    expected = {
        "convex": cross > 0,
        "straight": cross == 0 and dot < 0,
        "reflex": cross < 0 or (cross == 0 and dot > 0),
        "full": True,
    }
    if not expected[winding]:
        raise InvalidAnglePair(f"rays {r1}, {r2} do not sweep a {winding} angle counterclockwise")
    wraps = winding == "full" or (cross == 0 and dot > 0)
    return AnglePair(r1, r2, wraps_full_circle=wraps)


def _parse_cone(text: str) -> Cone:
    data = validate_cone_payload(text)
    if "winding" in data:
        raise InvalidInput("winding is only meaningful for classify")
    return _cone_from(data)


def _cone_from(data: dict) -> Cone:
    dim = data["dim"]
    gens = _vectors(data["generators"], dim) if "generators" in data else None
    normals = _vectors(data["facet_normals"], dim) if "facet_normals" in data else None
    return Cone(dim, generators=gens, facet_normals=normals)


def _classification_body(r: ClassificationResult) -> dict:
    w = {}
    if r.witnesses.standard_form is not None:
        sf = r.witnesses.standard_form
        w["standardForm"] = {"k": str(sf.k), "matrix": _matrix(sf.u.matrix)}
    if r.witnesses.reeb is not None:
        w["reeb"] = _ints(r.witnesses.reeb)
    if r.witnesses.slice is not None:
        w["slice"] = _slice_body(r.witnesses.slice)
    if r.witnesses.triple_reduction is not None:
        g, u = r.witnesses.triple_reduction
        w["tripleReduction"] = {"gcd": str(g), "matrix": _matrix(u.matrix)}
    return {
        "manifold": r.manifold,
        "reebType": r.reeb_type,
        "verdict": r.verdict.tag.value,
        "steinNote": r.verdict.stein_note,
        "witnesses": w,
    }


def _slice_body(s) -> dict:
    return {
        "reebVector": _ints(s.reeb_vector),
        "vertices": [_rats(v) for v in s.vertices],
        "bounded": s.bounded,
    }


def cmd_classify(args) -> tuple[int, dict, str]:
    if args.cone is not None:
        data = validate_cone_payload(args.cone)
        inp = _angle_pair(data) if "winding" in data else ConeInput(_cone_from(data))
    elif args.triple is not None:
        inp = FreeTriple(tuple(args.triple))
    elif args.free_torus is not None:
        inp = FreeTorus3(args.free_torus)
    else:
        inp = FreeTrivial(args.free_trivial)
    r = classify(inp)
    body = _classification_body(r)
    return EXIT_OK, body, f"{r.manifold}: {r.verdict.tag.value}"


def cmd_reduce_triple(args) -> tuple[int, dict, str]:
    v = tuple(args.triple)
    g, u = gcd_reduce(v)
    image = mat_vec(u.matrix, v)
    body = {"gcd": str(g), "matrix": _matrix(u.matrix), "image": _ints(image)}
    return EXIT_OK, body, f"gcd {g}"


def cmd_normalize(args) -> tuple[int, dict, str]:
    w = normalize_to_standard(_parse_cone(args.cone))
    body = {"k": str(w.k), "matrix": _matrix(w.u.matrix), "inverse": _matrix(w.u.inverse)}
    return EXIT_OK, body, f"standard cone with lineality {w.k}"


def cmd_reeb(args) -> tuple[int, dict, str]:
    r = reeb_vector(_parse_cone(args.cone))
    return EXIT_OK, {"reebVector": _ints(r)}, f"Reeb vector {r}"


def cmd_slice(args) -> tuple[int, dict, str]:
    c = _parse_cone(args.cone)
    r = tuple(args.reeb) if args.reeb is not None else reeb_vector(c)
    s = slice_cone(c, r)
    kind = "bounded" if s.bounded else "unbounded"
    return EXIT_OK, _slice_body(s), f"{kind} slice with {len(s.vertices)} vertices"


def _report_body(report) -> dict:
    return {
        "checked": str(report.checked),
        "failures": str(report.failures),
        "minMargin": None if report.min_margin is None else rational_str(report.min_margin),
        "witnesses": [{"coords": _rats(p.coords)} for p in report.witnesses],
        "identities": {
            name: {"holds": res.is_zero(), "residual": repr(res)}
            for name, res in report.identities.items()
        },
    }


def cmd_verify(args) -> tuple[int, dict, str]:
    # imported lazily: the forms engine is not needed for the combinatorial commands
    from . import forms

    if args.samples is not None and args.samples < 1:
        raise InvalidInput("--samples must be positive")
    body: dict = {"kind": args.kind}
    if args.kind == "contact":
        if args.form == "beta" or (args.form == "dtheta1" and args.d is not None):
            _need(args, "d", "k")
            chart = forms.ManifoldChart.tk_sphere(args.d, args.k)
        elif args.form in ("alpha", "dtheta1"):
            chart = forms.ManifoldChart.t2s3()
        else:
            raise InvalidInput("contact check needs --form beta, alpha or dtheta1")
        report = forms.verify_contact_condition(chart, args.form, args.samples or 1000, args.seed)
        body.update(chart=chart.label(), form=args.form)
    elif args.kind == "strongfill":
        _need(args, "d", "k")
        report = forms.verify_strong_filling(args.d, args.k)
        body.update(chart=forms.ManifoldChart.tk_sphere(args.d, args.k).label())
    elif args.kind == "weakfill":
        grid = [parse_rational(x) for x in args.tau.split(",") if x.strip()]
        t_star, report = forms.verify_weak_fill(args.samples or 500, grid, args.seed)
        body.update(chart="T^2 × S^3", tStar=rational_str(t_star))
    else:
        form = args.form or "beta"
        if form not in ("beta", "cosphere"):
            raise InvalidInput("moment check needs --form beta or cosphere")
        _need(args, "d")
        if form == "beta":
            _need(args, "k")
        report = forms.verify_moment_image(form, args.d, args.k, args.samples or 500, args.seed)
        body.update(form=form)
    body.update(_report_body(report))
    code = EXIT_OK if report.ok else EXIT_VERIFY
    summary = f"verify {args.kind}: {report.checked} checked, {report.failures} failures"
    if report.identities:
        held = sum(r.is_zero() for r in report.identities.values())
        summary += f", {held}/{len(report.identities)} identities hold"
    return code, body, summary


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidInput("missing " + ", ".join("--" + n for n in missing))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="torcone", description="Fillability of toric contact manifolds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify a moment cone, angle pair or free action")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--cone", help="cone JSON; add \"winding\" for a planar angle pair")
    g.add_argument("--triple", nargs=3, type=int, metavar="K", help="bundle triple of a free action")
    g.add_argument("--free-torus", type=int, metavar="K", help="free action on T^3, fibre components")
    g.add_argument("--free-trivial", type=int, metavar="D", help="trivial free bundle, d >= 4")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("reduce-triple", help="gcd reduction of an integer triple")
    r.add_argument("triple", nargs=3, type=int)
    r.set_defaults(func=cmd_reduce_triple)

    for name, func, text in (
        ("normalize", cmd_normalize, "SL(d,Z) map onto the standard cone"),
        ("reeb", cmd_reeb, "Reeb vector of a strictly convex cone"),
        ("slice", cmd_slice, "slice of a cone by a Reeb hyperplane"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("--cone", required=True, help="cone JSON")
        if name == "slice":
            s.add_argument("--reeb", nargs="+", type=int, help="slicing vector (default: Reeb vector)")
        s.set_defaults(func=func)

    v = sub.add_parser("verify", help="exact checks of contact and filling forms")
    v.add_argument("kind", choices=["contact", "weakfill", "strongfill", "moment"])
    v.add_argument("--form", help="beta | alpha | dtheta1 (contact), beta | cosphere (moment)")
    v.add_argument("--d", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tau", default="0,1,10,100", help="comma separated tau grid")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    command = None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        code, body, summary = args.func(args)
        out = {"status": STATUS[code], "command": command, **body}
    except (InvalidInput, Unsupported, VerificationFailure) as exc:
        code = EXIT_INVALID if isinstance(exc, InvalidInput) else (
            EXIT_UNSUPPORTED if isinstance(exc, Unsupported) else EXIT_VERIFY
        )
        out = {
            "status": STATUS[code],
            "command": command,
            "error": type(exc).__name__,
            "message": str(exc),
        }
        summary = f"error: {type(exc).__name__}: {exc}"
    print(json.dumps(out, ensure_ascii=False, indent=2), file=stdout)
    print(summary, file=stderr)
    return code


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
