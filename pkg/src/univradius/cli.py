"""Command-line front end: reproduction tables, bound scans and Bessel checks.

    univradius radii                       # all nine radii, dedicated vs generic
    univradius sharpness                   # |F'(r)| and the local univalence floor
    univradius scan ONE ONE --r-min 0 --r-max 0.4 --steps 40
    univradius bessel nu-star
    univradius bessel radius 0 -0.8
    univradius --json bessel verify 1 1 0.33

Exit status: 0 success, 1 usage error, 2 numerical failure (a bracket
without sign change, or an inconclusive verdict under ``--strict``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Any

from . import bessel, bounds, extremal, radii
from .errors import InvalidOrderParam, InvalidRadius, NoSignChange, ZeroConstantTerm
from .uclass import Verdict

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


class UsageError(Exception):
    pass


def _round(x):
    """Round floats to 15 significant digits so every output format agrees."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            return None
        return float(f"{x:.15g}")
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    if isinstance(x, dict):
        return {k: _round(v) for k, v in x.items()}
    if hasattr(x, "item"):  # numpy scalar
        return _round(x.item())
    return x


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    rows: list[dict[str, Any]]
    schema_version: int = SCHEMA_VERSION
    csv_columns: list[str] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        self.inputs = _round(self.inputs)
        self.rows = [_round(r) for r in self.rows]

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d.pop("csv_columns")
        return {"schema_version": d["schema_version"], "command": d["command"], "inputs": d["inputs"], "rows": d["rows"]}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Report:
        return cls(d["command"], d["inputs"], d["rows"], d["schema_version"])


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.15g}"
    if isinstance(v, list):
        return " ".join(_fmt(x) for x in v)
    return str(v)


def emit_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def emit_csv(report: Report) -> str:
    cols = report.csv_columns or (list(report.rows[0]) if report.rows else [])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in report.rows:
        writer.writerow([_fmt(row.get(c)) for c in cols])
    return buf.getvalue()


def emit_table(report: Report) -> str:
    lines = [f"# {report.command}"]
    for k, v in report.inputs.items():
        lines.append(f"# {k}: {_fmt(v)}")
    if report.rows:
        cols = list(report.rows[0])
        cells = [[_fmt(r.get(c)) for c in cols] for r in report.rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for row in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


# -- commands ---------------------------------------------------------------


def cmd_radii(tol: float = radii.DEFAULT_TOL) -> Report:
    rows = []
    for case_id, spec in radii.CASES.items():
        dedicated = radii.dedicated_radius(case_id, tol)
        generic = radii.radius_from_bound(spec.cls_f, spec.cls_g, tol)
        rows.append(
            {
                "case": case_id,
                "value": dedicated.value,
                "method": dedicated.method,
                "residual": dedicated.residual,
                "class_f": spec.cls_f.label,
                "class_g": spec.cls_g.label,
                "generic": generic.value,
                "generic_residual": generic.residual,
                "difference": abs(generic.value - dedicated.value),
                "notes": "; ".join(generic.notes),
            }
        )
    return Report("radii", {"tol": tol}, rows, csv_columns=["case", "value", "method", "residual"])


def cmd_sharpness(trunc: int = 128, tol: float = radii.DEFAULT_TOL) -> Report:
    rows = []
    for case_id in radii.CASES:
        pair = extremal.build_extremal(case_id, trunc)
        r = extremal.refined_radius(pair, tol).value
        rows.append(
            {
                "case": case_id,
                "radius": r,
                "abs_fprime": extremal.sharpness_check(pair, tol, radius=r),
                "closed_form_gap": extremal.closed_form_discrepancy(pair, 50, tol),
                "floor_at_0.98r": extremal.local_univalence_floor(pair, 0.98 * r, 64),
            }
        )
    return Report("sharpness", {"trunc": trunc, "tol": tol}, rows)


def cmd_scan(class_f: str, class_g: str, r_min: float, r_max: float, steps: int) -> Report:
    clsF, clsG = bounds.resolve_class(class_f), bounds.resolve_class(class_g)
    if steps < 0:
        raise UsageError("steps must be >= 0")
    if not (0 <= r_min < 1 and 0 <= r_max < 1):
        raise InvalidRadius("r-min and r-max must lie in [0, 1)")
    if steps == 0 and r_min != r_max:
        raise UsageError("steps = 0 needs r-min == r-max")
    if steps > 0 and not r_min < r_max:
        raise InvalidRadius("need r-min < r-max")
    grid = [r_min] if steps == 0 else [r_min + (r_max - r_min) * k / steps for k in range(steps + 1)]
    rows = []
    crossing = None
    prev = None
    for r in grid:
        b = bounds.uF_bound(clsF, clsG, r)
        crosses = prev is not None and prev[1] < 1.0 <= b
        if crosses and crossing is None:
            crossing = [prev[0], r]
        rows.append({"r": r, "bound": b, "crosses": crosses})
        prev = (r, b)
    inputs = {
        "class_f": clsF.label,
        "class_g": clsG.label,
        "r_min": r_min,
        "r_max": r_max,
        "steps": steps,
        "crossing_between": crossing,
    }
    return Report("scan", inputs, rows)


def _threshold(kind: str) -> float:
    lo, hi = -1.0 + 1e-12, 0.0
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        if bessel.coeff_hypothesis(mid, kind):
            hi = mid
        else:
            lo = mid
    return hi


def cmd_bessel(sub: str, args: list[float], trunc: int = 128, samples: int = 4096, tol: float = 1e-12) -> Report:
    if sub == "nu-star":
        ns = bessel.nu_star(tol)
        rows = [{"nu_star": ns, "equation_value": bessel.nu_star_equation(ns)}]
        return Report("bessel nu-star", {"tol": tol}, rows)
    if sub == "thresholds":
        rows = []
        for kind, exact in (("le_1", bessel.LE_1_THRESHOLD), ("le_n", bessel.LE_N_THRESHOLD)):
            rows.append(
                {
                    "kind": kind,
                    "threshold": exact,
                    "located": _threshold(kind),
                    "holds_at_threshold": bessel.coeff_hypothesis(exact, kind),
                }
            )
        return Report("bessel thresholds", {}, rows)
    if sub == "radius":
        nu, mu = args
        res = bessel.f_nu_mu_radius(nu, mu)
        if res is None:
            rows = [{"nu": nu, "mu": mu, "radius": None, "case": "none", "applicable": ""}]
        else:
            rows = [{"nu": nu, "mu": mu, "radius": res.value, "case": res.case_id, "applicable": " ".join(res.notes)}]
        return Report("bessel radius", {"nu": nu, "mu": mu, "nu_star": bessel.nu_star()}, rows)
    if sub == "verify":
        nu, mu, r = args
        verdict, tail = bessel.verify_bessel_membership(nu, mu, r, trunc, samples, 1e-9)
        rows = [{"nu": nu, "mu": mu, "r": r, "verdict": verdict.value, "tail_bound": tail}]
        return Report("bessel verify", {"trunc": trunc, "samples": samples}, rows)
    raise UsageError(f"unknown bessel subcommand {sub!r}")


# -- argument handling ------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="univradius", description=__doc__.split("\n")[0])
    parser.add_argument("--trunc", type=int, default=128, help="series truncation order")
    parser.add_argument("--samples", type=int, default=4096, help="circle samples")
    parser.add_argument("--tol", type=float, default=1e-12, help="root-finding tolerance")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    parser.add_argument("--strict", action="store_true", help="inconclusive verdicts exit with status 2")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("radii", help="radii of all nine cases")
    sub.add_parser("sharpness", help="F'(r) at the radius for each extremal pair")

    scan = sub.add_parser("scan", help="tabulate the U_F bound over r")
    scan.add_argument("class_f")
    scan.add_argument("class_g")
    scan.add_argument("--r-min", type=float, default=0.0)
    scan.add_argument("--r-max", type=float, default=0.5)
    scan.add_argument("--steps", type=int, default=50)

    bes = sub.add_parser("bessel", help="normalized Bessel functions")
    bsub = bes.add_subparsers(dest="bessel_command", required=True, parser_class=_Parser)
    bsub.add_parser("nu-star")
    bsub.add_parser("thresholds")
    rad = bsub.add_parser("radius")
    rad.add_argument("nu", type=float)
    rad.add_argument("mu", type=float)
    ver = bsub.add_parser("verify")
    ver.add_argument("nu", type=float)
    ver.add_argument("mu", type=float)
    ver.add_argument("r", type=float)
    return parser


def run(argv: list[str] | None = None) -> tuple[Report, argparse.Namespace]:
    ns = build_parser().parse_args(argv)
    if ns.trunc < 2 or ns.samples < 16 or not ns.tol > 0:
        raise UsageError("need --trunc >= 2, --samples >= 16 and --tol > 0")
    if ns.command == "radii":
        report = cmd_radii(ns.tol)
    elif ns.command == "sharpness":
        report = cmd_sharpness(ns.trunc, ns.tol)
    elif ns.command == "scan":
        report = cmd_scan(ns.class_f, ns.class_g, ns.r_min, ns.r_max, ns.steps)
    else:
        extra = [getattr(ns, k) for k in ("nu", "mu", "r") if hasattr(ns, k)]
        report = cmd_bessel(ns.bessel_command, extra, ns.trunc, ns.samples, ns.tol)
    return report, ns


def main(argv: list[str] | None = None) -> int:
    try:
        report, ns = run(argv)
    except (NoSignChange, ZeroConstantTerm) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (UsageError, InvalidRadius, InvalidOrderParam, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if ns.json:
        out = emit_json(report)
    elif ns.csv:
        out = emit_csv(report)
    else:
        out = emit_table(report)
    sys.stdout.write(out)

    if ns.strict and any(row.get("verdict") == Verdict.INCONCLUSIVE.value for row in report.rows):
        print("inconclusive verdict under --strict", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
