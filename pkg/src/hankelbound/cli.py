"""Command line front end: bounds, grid verification, sweeps, series.

Data goes to stdout (or --output), diagnostics to stderr.  Exit status is 0
only when every requested check passes: 2 flags bad input, 1 flags a failed
verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import bounds, classes, targets, verify

DEFAULT_TOL = 1e-9
SWEEP_VARS = ("alpha_order", "beta_strong", "gamma", "alpha_g", "A", "B")
_PHI_DRIVEN_SWEEPS = ("alpha_order", "beta_strong", "A", "B")


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' (or plain reals) into a complex number."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise ValueError(f"cannot parse complex number from {text!r}") from exc


def _parse_triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected B1,B2,B3 with three values, got {text!r}")
    return tuple(float(p) for p in parts)  # type: ignore[return-value]


def _parse_grid(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected n_c,n_r,n_theta, got {text!r}")
    return tuple(int(p) for p in parts)  # type: ignore[return-value]


def _add_phi_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--preset", choices=targets.PRESET_NAMES, help="named target")
    group.add_argument("--custom", metavar="B1,B2,B3", help="explicit coefficient triple")
    group.add_argument("--phi-file", metavar="PATH", help="JSON file with keys B1, B2, B3, label")
    parser.add_argument("--alpha", type=float, help="order parameter for --preset order_alpha")
    parser.add_argument("--beta", type=float, help="order parameter for --preset strongly_beta")
    parser.add_argument("--janowski-a", type=float, help="A for --preset janowski")
    parser.add_argument("--janowski-b", type=float, help="B for --preset janowski")


def _add_class_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--class", dest="kind", choices=classes.KINDS, default="starlike", help="function class"
    )
    parser.add_argument("--gamma", type=float, help="gamma in [0,1] for --class rgt")
    parser.add_argument("--tau", type=parse_complex, help="nonzero complex tau for --class rgt, e.g. 2+0i")
    parser.add_argument("--alpha-g", type=float, help="alpha in [0,1] for --class galpha")


def _build_phi(args) -> targets.PhiCoefficients:
    if args.preset is not None:
        params = {}
        if args.preset == "order_alpha":
            if args.alpha is None:
                raise ValueError("--preset order_alpha needs --alpha")
            params["alpha"] = args.alpha
        elif args.preset == "strongly_beta":
            if args.beta is None:
                raise ValueError("--preset strongly_beta needs --beta")
            params["beta"] = args.beta
        elif args.preset == "janowski":
            if args.janowski_a is None or args.janowski_b is None:
                raise ValueError("--preset janowski needs --janowski-a and --janowski-b")
            params["a"] = args.janowski_a
            params["b"] = args.janowski_b
        return targets.preset(args.preset, **params)
    if args.custom is not None:
        b1, b2, b3 = _parse_triple(args.custom)
        return targets.custom(b1, b2, b3)
    return targets.load_phi_file(args.phi_file)


def _build_spec(args, phi: targets.PhiCoefficients) -> classes.ClassSpec:
    if args.kind == "rgt":
        gamma = 0.0 if args.gamma is None else args.gamma
        tau = (1 + 0j) if args.tau is None else args.tau
        return classes.r_gamma_tau(phi, gamma, tau)
    if args.kind == "galpha":
        if args.alpha_g is None:
            raise ValueError("--class galpha needs --alpha-g")
        return classes.g_alpha(phi, args.alpha_g)
    return classes.ClassSpec(args.kind, phi)


def _class_payload(spec: classes.ClassSpec) -> dict:
    payload: dict = {"kind": spec.kind}
    if spec.kind == "rgt":
        payload["gamma"] = spec.gamma
        payload["tau"] = {"re": spec.tau.real, "im": spec.tau.imag}
    elif spec.kind == "galpha":
        payload["alpha"] = spec.alpha
    return payload


def _phi_payload(phi: targets.PhiCoefficients) -> dict:
    return {"B1": phi.b1, "B2": phi.b2, "B3": phi.b3, "label": phi.label}


def _bound_payload(result: bounds.BoundResult) -> dict:
    prof = result.profile
    return {
        "class": _class_payload(result.spec),
        "phi": _phi_payload(result.spec.phi),
        "bound": result.bound,
        "branch": result.branch,
        "P": prof.P,
        "Q": prof.Q,
        "R": prof.R,
        "T": prof.T,
        "closed_form": result.closed_form_value,
    }


def _point_payload(point: verify.CaratheodoryPoint) -> dict:
    return {
        "c": point.c,
        "mu": point.mu,
        "x": {"re": point.x.real, "im": point.x.imag},
        "z": {"re": point.z.real, "im": point.z.imag},
    }


def _emit(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit_json(payload: dict, path: str | None) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", path)


def _emit_human(payload: dict, path: str | None) -> None:
    lines = []

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for key in value:
                walk(f"{prefix}.{key}" if prefix else key, value[key])
        else:
            lines.append(f"{prefix} = {value}")

    walk("", payload)
    _emit("\n".join(lines) + "\n", path)


def cmd_bound(args) -> int:
    phi = _build_phi(args)
    result = bounds.second_hankel_bound(_build_spec(args, phi))
    payload = _bound_payload(result)
    if args.format == "json":
        _emit_json(payload, args.output)
    else:
        _emit_human(payload, args.output)
    return 0


def cmd_verify(args) -> int:
    phi = _build_phi(args)
    spec = _build_spec(args, phi)
    report = verify.empirical_sup(spec, grid=args.grid)
    max_c2, max_c3 = verify.check_caratheodory_bounds(args.samples, seed=args.seed)
    payload = _bound_payload(bounds.second_hankel_bound(spec))
    payload.update(
        {
            "empirical_sup": report.empirical_sup,
            "margin": report.margin,
            "argmax": _point_payload(report.argmax),
            "monotonicity_violations": report.monotonicity_violations,
            "grid": list(report.grid_sizes),
            "caratheodory_max": {"c2": max_c2, "c3": max_c3},
            "seed": args.seed,
        }
    )
    ok = report.margin >= -args.tol and report.monotonicity_violations == 0
    payload["passed"] = ok
    if args.format == "json":
        _emit_json(payload, args.output)
    else:
        _emit_human(payload, args.output)
    if not ok:
        print(
            f"verification failed: margin={report.margin:.6g} "
            f"violations={report.monotonicity_violations}",
            file=sys.stderr,
        )
        return 1
    return 0


def _sweep_values(args) -> list[float]:
    if args.step <= 0:
        raise ValueError("--step must be positive")
    values = []
    v = args.start
    while v <= args.stop + 1e-12:
        values.append(round(v, 12))
        v += args.step
    if not values:
        raise ValueError(f"empty sweep range: start={args.start}, stop={args.stop}, step={args.step}")
    return values


def _sweep_point(args, var: str, value: float) -> bounds.BoundResult:
    if var == "alpha_order":
        phi = targets.preset("order_alpha", alpha=value)
    elif var == "beta_strong":
        phi = targets.preset("strongly_beta", beta=value)
    elif var == "A":
        if args.janowski_b is None:
            raise ValueError("sweeping A needs a fixed --janowski-b")
        phi = targets.preset("janowski", a=value, b=args.janowski_b)
    elif var == "B":
        if args.janowski_a is None:
            raise ValueError("sweeping B needs a fixed --janowski-a")
        phi = targets.preset("janowski", a=args.janowski_a, b=value)
    else:
        phi = _build_phi(args)

    if var == "gamma":
        tau = (1 + 0j) if args.tau is None else args.tau
        spec = classes.r_gamma_tau(phi, value, tau)
    elif var == "alpha_g":
        spec = classes.g_alpha(phi, value)
    else:
        spec = _build_spec(args, phi)
    return bounds.second_hankel_bound(spec)


def cmd_sweep(args) -> int:
    var = args.sweep
    if var in _PHI_DRIVEN_SWEEPS:
        if args.preset or args.custom or args.phi_file:
            raise ValueError(f"sweep variable {var} builds its own target; drop the phi source")
    elif not (args.preset or args.custom or args.phi_file):
        raise ValueError(f"sweep variable {var} needs a phi source")
    rows = [(var, value, _sweep_point(args, var, value)) for value in _sweep_values(args)]
    if args.format == "json":
        payload = {
            "sweep": var,
            "rows": [
                {"param": name, "value": value, "bound": r.bound, "branch": r.branch}
                for name, value, r in rows
            ],
        }
        _emit_json(payload, args.output)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["param", "value", "bound", "branch"])
        for name, value, r in rows:
            writer.writerow([name, repr(value), repr(r.bound), r.branch])
        _emit(buffer.getvalue(), args.output)
    return 0


def cmd_series(args) -> int:
    phi = _build_phi(args)
    if args.preset is not None:
        params = {}
        if args.preset == "order_alpha":
            params["alpha"] = args.alpha
        elif args.preset == "strongly_beta":
            params["beta"] = args.beta
        elif args.preset == "janowski":
            params["a"] = args.janowski_a
            params["b"] = args.janowski_b
        series = targets.preset_series(args.preset, **params)
    else:
        series = targets.phi_to_series(phi)
    coeffs = [c.real for c in series.coeffs]
    payload = {"phi": _phi_payload(phi), "series": coeffs, "order": series.order}
    if args.format == "json":
        _emit_json(payload, args.output)
    else:
        _emit_human(payload, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelbound",
        description="Bounds for the second Hankel determinant |a2 a4 - a3^2| "
        "of analytic function classes defined by subordination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_class: bool = True) -> None:
        _add_phi_arguments(p)
        if with_class:
            _add_class_arguments(p)
        p.add_argument("--format", choices=("human", "json"), default="human")
        p.add_argument("--output", default="-", help="output path, '-' for stdout")

    p_bound = sub.add_parser("bound", help="closed-form bound for one class and target")
    common(p_bound)
    p_bound.set_defaults(func=cmd_bound)

    p_verify = sub.add_parser("verify", help="brute-force grid check against the bound")
    common(p_verify)
    p_verify.add_argument("--grid", type=_parse_grid, default=verify.DEFAULT_GRID, metavar="NC,NR,NT")
    p_verify.add_argument("--tol", type=float, default=DEFAULT_TOL, help="allowed negative margin")
    p_verify.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p_verify.add_argument("--samples", type=int, default=100_000, help="coefficient-bound samples")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="bound along a parameter range, CSV by default")
    _add_phi_arguments(p_sweep, required=False)
    _add_class_arguments(p_sweep)
    p_sweep.add_argument("--sweep", choices=SWEEP_VARS, required=True, help="swept variable")
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--stop", type=float, required=True)
    p_sweep.add_argument("--step", type=float, required=True)
    p_sweep.add_argument("--format", choices=("csv", "json", "human"), default="csv")
    p_sweep.add_argument("--output", default="-", help="output path, '-' for stdout")
    p_sweep.set_defaults(func=cmd_sweep)

    p_series = sub.add_parser("series", help="print a target's coefficients and working series")
    common(p_series, with_class=False)
    p_series.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
