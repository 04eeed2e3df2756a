"""Command line front end: ``braidmon -i CURVE [--mode engine|oracle|both] ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

import mpmath

from .analysis import CriticalChart, build_chart
from .braid import BraidWord
from .curve import CurveError, CurvePoly, ParseError
from .disk import ModelDisk, to_svg
from .engine import Factorization, monodromy_of_chart, skeleton_of, verify_factorization
from .errors import BraidMonError, GenericityError, NumericError
from .oracle import boundary_braid, oracle_monodromy

EXIT_OK, EXIT_USAGE, EXIT_GENERICITY, EXIT_NUMERIC = 0, 1, 2, 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidmon", description="Braid monodromy of a real plane curve.")
    p.add_argument("polynomial", nargs="?", help="curve f(x, y), monic in y")
    p.add_argument("-i", "--input", help="polynomial text, or a file containing it")
    p.add_argument("--mode", choices=("engine", "oracle", "both"), default="engine")
    p.add_argument("--precision", type=int, default=12, help="significant digits for x values")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--svg-dir", help="write the carried skeleton of each generator as SVG")
    p.add_argument("--seed-radius-scale", type=float, default=1.0,
                   help="scale all chart radii (alpha, delta)")
    p.add_argument("--step", type=float, default=0.02, help="oracle tracking step")
    p.add_argument("--verify", action="store_true", help="run the factorization checks")
    return p


def _read_input(args) -> str:
    text = args.input if args.input is not None else args.polynomial
    if text is None:
        raise ParseError("no polynomial given (use -i or a positional argument)")
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    return text.strip()


def _x_text(x: float, digits: int) -> str:
    return mpmath.nstr(mpmath.mpf(x), digits)


def _entry_json(j, rec, word: BraidWord, digits: int) -> dict:
    return {
        "j": j,
        "x": _x_text(rec.x_value, digits),
        "x_exact": str(rec.x_exact),
        "type": rec.type_tag,
        "lefschetz": list(rec.lefschetz),
        "nu": rec.nu,
        "ab_order": rec.ab_order,
        "word": word.to_json(),
        "normal_form": word.normal_form.to_text(),
    }


def _chart_json(chart: CriticalChart, digits: int) -> dict:
    return {
        "base_point": _x_text(chart.base_point, digits),
        "b_points": [{"x": _x_text(b.x_value, digits), "lefschetz": list(b.complex_lefschetz),
                      "orientation": b.orientation} for b in chart.b_points],
    }


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        curve = CurvePoly.parse(_read_input(args))
        report = _report(curve, args)
    except (ParseError, CurveError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GenericityError as e:
        print(f"genericity failure: {e}", file=sys.stderr)
        return EXIT_GENERICITY
    except NumericError as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except BraidMonError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    if args.format == "json":
        json.dump(report, out, indent=2)
        out.write("\n")
    else:
        out.write(_render_text(report))
    if args.mode == "both" and not report["comparison"]["all_equal"]:
        return EXIT_NUMERIC
    return EXIT_OK


def _report(curve: CurvePoly, args) -> dict:
    digits = args.precision
    t0 = time.perf_counter()
    chart = build_chart(curve, radius_scale=args.seed_radius_scale)
    report: dict = {"curve": curve.source, "n": curve.n, "chart": _chart_json(chart, digits)}
    fac: Factorization | None = None
    if args.mode in ("engine", "both"):
        fac = monodromy_of_chart(chart)
        report["entries"] = [_entry_json(e.j, e.record, e.word, digits) for e in fac.entries]
        if args.svg_dir:
            _write_svgs(fac, args.svg_dir)
    oracle_words = None
    if args.mode in ("oracle", "both"):
        oracle = oracle_monodromy(chart, step=args.step, radius_scale=args.seed_radius_scale)
        oracle_words = [o.word for o in oracle]
        key = "oracle_entries" if fac is not None else "entries"
        report[key] = [_entry_json(o.j, chart.points[o.j - 1], o.word, digits) for o in oracle]
    if fac is not None and oracle_words is not None:
        equal = [e.word.equals(w) for e, w in zip(fac.entries, oracle_words)]
        report["comparison"] = {"per_entry": equal, "all_equal": all(equal)}
    if args.verify:
        if fac is not None:
            checks = verify_factorization(fac, oracle_words, boundary=oracle_words is not None,
                                          step=args.step)
        else:
            checks = {"boundary_loop": _product(chart.n, oracle_words).equals(boundary_braid(chart, step=args.step))}
        report["checks"] = checks
    report["seconds"] = round(time.perf_counter() - t0, 3)
    return report


def _product(n: int, words) -> BraidWord:
    out = BraidWord.identity(n)
    for w in words:
        out = out * w
    return out


def _write_svgs(fac: Factorization, directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    base = ModelDisk(fac.n, fac.chart.d_base)
    for e in fac.entries:
        with open(os.path.join(directory, f"gamma_{e.j}.svg"), "w") as fh:
            fh.write(to_svg(base, e.arcs, title=f"Gamma_{e.j}: {e.record.label}"))
        sk = skeleton_of(fac.chart, e.j)
        with open(os.path.join(directory, f"skeleton_{e.j}.svg"), "w") as fh:
            fh.write(to_svg(sk.disk, sk.arcs, title=f"skeleton at x_{e.j}: {e.record.label}"))


def _render_text(report: dict) -> str:
    lines = [f"curve: {report['curve']}", f"strands: {report['n']}"]
    ch = report["chart"]
    lines.append(f"base point: x0 = {ch['base_point']}")
    for b in ch["b_points"]:
        lines.append(f"B-point at x = {b['x']}, complex pair {tuple(b['lefschetz'])}, orientation {b['orientation']}")
    for key, label in (("entries", "phi"), ("oracle_entries", "oracle")):
        for e in report.get(key, []):
            n = report["n"]
            word = BraidWord.from_json(n, e["word"])
            nu = f", nu={e['nu']}" if e["nu"] is not None else ""
            lines.append(f"{label}(Gamma_{e['j']}) = {word.to_text()}    "
                         f"[x = {e['x']}, {e['type']}{nu}, L = {tuple(e['lefschetz'])}]")
    if "comparison" in report:
        verdict = ["equal" if v else "DIFFERENT" for v in report["comparison"]["per_entry"]]
        lines.append("engine vs oracle: " + ", ".join(verdict))
    if "checks" in report:
        for k, v in report["checks"].items():
            if k != "entries":
                lines.append(f"check {k}: {v}")
    return "\n".join(lines) + "\n"


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
