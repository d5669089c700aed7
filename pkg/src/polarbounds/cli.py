"""Command-line front end.

Every command reads one JSON document from a path or standard input::

    {"material": {"T0": 92.38, "T1": 86.97, "R0": 44.86, "R1": 43.82},
     "stacking_deg": [0, 90], "thickness": 1.0}

Exit codes: 0 feasible / success, 1 verification failure, 2 input error,
3 infeasible, 4 marginal, 5 case not applicable.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

import jsonschema
import numpy as np

from . import __version__
from .bounds import (
    DEFAULT_TOL,
    CaseNotApplicableError,
    NotAlignedError,
    SpecialCase,
    Verdict,
    aligned_config,
    dispatch_check,
    feasibility_aligned,
    feasibility_general,
    feasibility_special,
)
from .lamination import LaminatePolar, Stacking, compute_abd_polar, derived_angles, plate_law_matrix
from .oracle import SampleSpec, coupling_scaled_laminates, kelvin_pd_check
from .polar_core import (
    EngineeringConstants,
    InvalidMaterialError,
    PolarElastic4,
    cartesian_to_polar4,
    classify_symmetry,
    engineering_to_cartesian,
    polar4_to_cartesian_at,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_MARGINAL = 4
EXIT_NOT_APPLICABLE = 5

VERDICT_EXIT = {Verdict.FEASIBLE: EXIT_OK, Verdict.INFEASIBLE: EXIT_INFEASIBLE, Verdict.MARGINAL: EXIT_MARGINAL}

COMPONENTS = ("1111", "1112", "1122", "1212", "1222", "2222")

_NUM = {"type": "number"}
_POLAR_MATERIAL = {
    "type": "object",
    "properties": {k: _NUM for k in ("T0", "T1", "R0", "R1", "Phi0_deg", "Phi1_deg")},
    "required": ["T0", "T1", "R0", "R1"],
    "additionalProperties": False,
}
_ENGINEERING_MATERIAL = {
    "type": "object",
    "properties": {k: _NUM for k in ("E1", "E2", "G12", "nu12")},
    "required": ["E1", "E2", "G12", "nu12"],
    "additionalProperties": False,
}
_ABD_TENSOR = {
    "type": "object",
    "properties": {
        "R0": {"type": "number", "minimum": 0},
        "R1": {"type": "number", "minimum": 0},
        "Phi0_deg": _NUM,
        "Phi1_deg": _NUM,
        "Phi_deg": _NUM,
    },
    "required": ["R0", "R1"],
    "additionalProperties": False,
}

INPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "laminate input",
    "type": "object",
    "properties": {
        "material": {"oneOf": [_POLAR_MATERIAL, _ENGINEERING_MATERIAL]},
        "stacking_deg": {"type": "array", "items": _NUM, "minItems": 1},
        "thickness": {"type": "number", "exclusiveMinimum": 0},
        "units": {"type": "string"},
        "abd": {
            "type": "object",
            "properties": {
                "T0": {"type": "number", "exclusiveMinimum": 0},
                "T1": {"type": "number", "exclusiveMinimum": 0},
                "A": _ABD_TENSOR,
                "B": _ABD_TENSOR,
                "D": _ABD_TENSOR,
                "deltaA_deg": _NUM,
                "deltaD_deg": _NUM,
            },
            "required": ["A", "B", "D"],
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
    "oneOf": [
        {"required": ["stacking_deg", "material"], "not": {"required": ["abd"]}},
        {"required": ["abd"], "not": {"required": ["stacking_deg"]}},
    ],
}


_MARGIN = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "value": _NUM,
        "normalized": _NUM,
        "kind": {"enum": ["strict", "non-strict"]},
        "active": {"type": "boolean"},
        "argmin_deg": {"oneOf": [{"type": "null"}, {"type": "array", "items": _NUM}]},
        "note": {"type": "string"},
    },
    "required": ["name", "value", "normalized", "kind", "active", "argmin_deg", "note"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "feasibility report",
    "type": "object",
    "properties": {
        "version": {"type": "string"},
        "input": {"type": "object"},
        "thickness": {"type": "number", "exclusiveMinimum": 0},
        "case_used": {"type": "string"},
        "variant": {"type": "string"},
        "verdict": {"enum": [v.value for v in Verdict]},
        "margins": {"type": "array", "items": _MARGIN, "minItems": 1},
        "notes": {"type": "array", "items": {"type": "string"}},
        "converged": {"type": "boolean"},
        "scale": _NUM,
        "parameters": {
            "type": "object",
            "properties": {"tol": _NUM, "grid_step_deg": _NUM, "argmin_frame": {"type": "string"}},
            "required": ["tol", "grid_step_deg", "argmin_frame"],
        },
    },
    "required": ["version", "input", "case_used", "variant", "verdict", "margins", "parameters"],
}


class InputError(ValueError):
    pass


# -- input ----------------------------------------------------------------------


def load_document(source) -> dict:
    if source in (None, "-"):
        text, name = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{source}: {exc.strerror}") from exc
        name = source
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{name}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    errors = sorted(jsonschema.Draft202012Validator(INPUT_SCHEMA).iter_errors(doc), key=lambda e: list(e.path))
    if errors:
        lines = [f"{name}: {'/'.join(map(str, e.path)) or '<root>'}: {e.message}" for e in errors]
        raise InputError("\n".join(lines))
    return doc


def ply_from_document(doc: dict) -> PolarElastic4 | None:
    mat = doc.get("material")
    if mat is None:
        return None
    try:
        if "E1" in mat:
            return cartesian_to_polar4(engineering_to_cartesian(EngineeringConstants(**mat)))
        return PolarElastic4(
            mat["T0"], mat["T1"], mat["R0"], mat["R1"],
            math.radians(mat.get("Phi0_deg", 0.0)), math.radians(mat.get("Phi1_deg", 0.0)),
        )
    except InvalidMaterialError as exc:
        raise InputError(f"material: {exc}") from exc


def _abd_from_document(doc: dict, ply: PolarElastic4 | None, h: float) -> LaminatePolar:
    abd = doc["abd"]
    if ply is not None:
        T0, T1 = ply.T0, ply.T1
    elif "T0" in abd and "T1" in abd:
        T0, T1 = abd["T0"], abd["T1"]
    else:
        raise InputError("abd: T0 and T1 are required when no material is given")
    tensors = {k: abd[k] for k in "ABD"}
    invariant = ["Phi_deg" in t for t in tensors.values()]
    if any(invariant) and not all(invariant):
        raise InputError("abd: give every tensor either Phi_deg or Phi0_deg/Phi1_deg, not a mix")
    out = {}
    if all(invariant):
        if "deltaA_deg" not in abd or "deltaD_deg" not in abd:
            raise InputError("abd: invariant angles need deltaA_deg and deltaD_deg")
        # frame of Phi1(B): Phi1(B) = 0, Phi1(X) = -delta_X
        phi1 = {"A": -abd["deltaA_deg"], "B": 0.0, "D": -abd["deltaD_deg"]}
        for k, t in tensors.items():
            p1 = math.radians(phi1[k])
            out[k] = (t["R0"], t["R1"], math.radians(t["Phi_deg"]) + p1, p1)
    else:
        if "deltaA_deg" in abd or "deltaD_deg" in abd:
            raise InputError("abd: deltaA_deg/deltaD_deg are only used with invariant Phi_deg angles")
        for k, t in tensors.items():
            out[k] = (t["R0"], t["R1"], math.radians(t.get("Phi0_deg", 0.0)), math.radians(t.get("Phi1_deg", 0.0)))
    A = PolarElastic4(T0, T1, *out["A"])
    B = PolarElastic4(0.0, 0.0, *out["B"])
    D = PolarElastic4(T0, T1, *out["D"])
    return LaminatePolar(A, B, D, h)


def laminate_from_document(doc: dict, h_override: float | None = None):
    """``(laminate, stacking or None, ply or None)``."""
    ply = ply_from_document(doc)
    h = h_override if h_override is not None else doc.get("thickness", 1.0)
    if not h > 0:
        raise InputError(f"thickness must be positive, got {h}")
    if "stacking_deg" in doc:
        try:
            s = Stacking.from_degrees(ply, doc["stacking_deg"], h=h)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return compute_abd_polar(s), s, ply
    return _abd_from_document(doc, ply, h), None, ply


# -- output helpers -------------------------------------------------------------


def _polar_dict(p: PolarElastic4) -> dict:
    return {
        "T0": p.T0,
        "T1": p.T1,
        "R0": p.R0,
        "R1": p.R1,
        "Phi0_deg": math.degrees(p.Phi0),
        "Phi1_deg": math.degrees(p.Phi1),
    }


def _cartesian_dict(p: PolarElastic4) -> dict:
    c = polar4_to_cartesian_at(p, 0.0)
    return {f"c{k}": float(getattr(c, f"c{k}")) for k in COMPONENTS}


def _angles_dict(lp: LaminatePolar) -> dict:
    da = derived_angles(lp)
    return {f"{k}_deg": math.degrees(v) for k, v in asdict(da).items()}


def _report_dict(report, grid_step_deg: float) -> dict:
    margins = []
    for m in report.margins:
        margins.append(
            {
                "name": m.name,
                "value": m.value,
                "normalized": m.normalized,
                "kind": m.kind,
                "active": m.active,
                "argmin_deg": None if m.argmin is None else [math.degrees(a) for a in m.argmin],
                "note": m.note,
            }
        )
    return {
        "case_used": report.case_used,
        "variant": report.variant,
        "verdict": report.verdict.value,
        "margins": margins,
        "notes": list(report.notes),
        "converged": report.converged,
        "scale": report.scale,
        "parameters": {"tol": report.tol, "grid_step_deg": grid_step_deg, "argmin_frame": "Phi1(B)"},
    }


def _emit(obj, as_json: bool, text_lines) -> None:
    if as_json:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _grid_step(args) -> float:
    step = math.radians(args.grid_step_deg)
    n = round(90.0 / args.grid_step_deg)
    if args.grid_step_deg <= 0 or abs(n * args.grid_step_deg - 90.0) > 1e-9:
        raise InputError(f"--grid-step-deg must divide 90, got {args.grid_step_deg}")
    return step


# -- commands -----------------------------------------------------------------------


def cmd_abd(args) -> int:
    doc = load_document(args.input)
    lp, s, ply = laminate_from_document(doc, args.h)
    if s is None:
        raise InputError("abd needs a stacking_deg list")
    law = plate_law_matrix(lp)
    out = {
        "version": __version__,
        "n_plies": s.n,
        "thickness": lp.h,
        "polar": {k: _polar_dict(getattr(lp, k)) for k in "ABD"},
        "cartesian": {k: _cartesian_dict(getattr(lp, k)) for k in "ABD"},
        "derived_angles": _angles_dict(lp),
        "symmetry": {k: classify_symmetry(getattr(lp, k)).value for k in "ABD"},
        "B_vanishes": lp.B.R0 == 0 and lp.B.R1 == 0,
        "plate_law": law.K.tolist(),
    }
    lines = [f"plies: {s.n}   thickness: {_fmt(lp.h)}"]
    for k in "ABD":
        p = out["polar"][k]
        c = out["cartesian"][k]
        lines.append(f"{k}: " + "  ".join(f"{n}={_fmt(v)}" for n, v in p.items()) + f"   [{out['symmetry'][k]}]")
        lines.append("   " + "  ".join(f"{n}={_fmt(v)}" for n, v in c.items()))
    lines.append("derived angles: " + "  ".join(f"{n}={_fmt(v)}" for n, v in out["derived_angles"].items()))
    if out["B_vanishes"]:
        lines.append("B = 0 (uncoupled)")
    _emit(out, args.json, lines)
    return EXIT_OK


_FORCED = {
    "square-b": SpecialCase.SQUARE_B,
    "full-square": SpecialCase.FULL_SQUARE,
    "r0": SpecialCase.R0_ORTHOTROPIC,
    "isotropic": SpecialCase.COUPLED_ISOTROPIC,
}


def run_check(lp: LaminatePolar, case: str, tol: float, grid_step: float):
    if case == "auto":
        return dispatch_check(lp, tol=tol, grid_step=grid_step)
    if case == "general":
        return feasibility_general(lp, tol=tol, grid_step=grid_step)
    if case == "aligned":
        return feasibility_aligned(lp, tol=tol, grid_step=grid_step)
    return feasibility_special(lp, _FORCED[case], tol=tol, grid_step=grid_step)


def cmd_check(args) -> int:
    doc = load_document(args.input)
    lp, _, _ = laminate_from_document(doc, args.h)
    step = _grid_step(args)
    try:
        report = run_check(lp, args.case, args.tol, step)
    except (NotAlignedError, CaseNotApplicableError) as exc:
        msg = f"case not applicable: {exc}"
        _emit({"error": msg, "case": args.case, "version": __version__}, args.json, [msg])
        return EXIT_NOT_APPLICABLE
    out = {"version": __version__, "input": doc, "thickness": lp.h, **_report_dict(report, args.grid_step_deg)}
    lines = [f"case: {report.case_used} ({report.variant})", f"verdict: {report.verdict.value}", "margins:"]
    for m in report.margins:
        flag = "" if m.active else "  (info)"
        arg = "" if m.argmin is None else "  at (" + ", ".join(_fmt(math.degrees(a)) for a in m.argmin) + ") deg"
        lines.append(f"  {m.name:<24} {_fmt(m.value):>18}  normalized {_fmt(m.normalized):>14}{arg}{flag}")
    lines += [f"note: {n}" for n in report.notes]
    _emit(out, args.json, lines)
    return VERDICT_EXIT[report.verdict]


def cmd_classify(args) -> int:
    doc = load_document(args.input)
    lp, _, ply = laminate_from_document(doc, args.h)
    try:
        cfg = asdict(aligned_config(lp))
    except NotAlignedError:
        cfg = None
    out = {
        "version": __version__,
        "symmetry": {k: classify_symmetry(getattr(lp, k)).value for k in "ABD"},
        "derived_angles": _angles_dict(lp),
        "aligned": cfg,
        "dispatch_case": dispatch_check(lp, grid_step=_grid_step(args)).case_used,
    }
    if ply is not None:
        out["symmetry"]["ply"] = classify_symmetry(ply).value
    lines = [f"{k}: {v}" for k, v in sorted(out["symmetry"].items())]
    lines.append(f"aligned: {cfg if cfg is not None else 'no'}")
    lines.append(f"dispatch case: {out['dispatch_case']}")
    _emit(out, args.json, lines)
    return EXIT_OK


def cmd_diagram(args) -> int:
    doc = load_document(args.input)
    lp, _, ply = laminate_from_document(doc, args.h)
    if args.tensor == "ply":
        if ply is None:
            raise InputError("the ply diagram needs a material")
        t = ply
    else:
        t = getattr(lp, args.tensor)
    comp = args.component.lstrip("TtCcQq")
    if comp not in COMPONENTS:
        raise InputError(f"unknown component {args.component!r}; use one of {', '.join('T' + c for c in COMPONENTS)}")
    if not args.step_deg > 0:
        raise InputError("--step-deg must be positive")
    n = int(math.floor(360.0 / args.step_deg + 1e-9))
    theta = np.arange(n + 1) * args.step_deg
    values = getattr(polar4_to_cartesian_at(t, np.radians(theta)), f"c{comp}")
    values = np.broadcast_to(values, theta.shape)
    rows = ["theta_deg,value"] + ["%.12g,%.17g" % (a, v) for a, v in zip(theta, values)]
    sys.stdout.write("\n".join(rows) + "\n")
    return EXIT_OK


def parse_grid(spec: str) -> dict[str, np.ndarray]:
    """``"r0b=lo:hi:n,r1b=lo:hi:n"`` -> axis arrays (missing axes are ``[0]``)."""
    axes = {"r0b": np.array([0.0]), "r1b": np.array([0.0])}
    seen = set()
    for part in filter(None, (p.strip() for p in spec.split(","))):
        key, _, rng = part.partition("=")
        key = key.strip().lower()
        if key not in axes:
            raise InputError(f"scan over {key!r} is not supported; only r0b and r1b")
        if key in seen:
            raise InputError(f"axis {key} given twice")
        seen.add(key)
        try:
            lo, hi, n = rng.split(":")
            lo, hi, n = float(lo), float(hi), int(n)
        except ValueError as exc:
            raise InputError(f"bad range {part!r}; expected name=lo:hi:n") from exc
        if n < 1 or lo < 0 or hi < lo:
            raise InputError(f"bad range {part!r}; need n >= 1 and 0 <= lo <= hi")
        axes[key] = np.linspace(lo, hi, n) if n > 1 else np.array([lo])
    return axes


def _probe(lp, tol, step, rng, samples, amplitude):
    """Number of random non-aligned perturbations of the coupling angles whose
    general verdict is worse than the aligned closed-form one."""
    base = feasibility_aligned(lp, tol=tol, grid_step=step)
    if base.verdict != Verdict.FEASIBLE:
        return base.verdict, 0
    worse = 0
    for _ in range(samples):
        d0, d1 = rng.uniform(-amplitude, amplitude, 2)
        p = lp.with_B(Phi0=lp.B.Phi0 + d0, Phi1=lp.B.Phi1 + d1)
        if feasibility_general(p, tol=tol, grid_step=step).verdict == Verdict.INFEASIBLE:
            worse += 1
    return base.verdict, worse


def cmd_scan(args) -> int:
    doc = load_document(args.input)
    lp, _, _ = laminate_from_document(doc, args.h)
    axes = parse_grid(args.grid)
    step = _grid_step(args)
    if args.probe_conjecture:
        try:
            aligned_config(lp.with_B(R0=1.0, R1=1.0))
        except NotAlignedError as exc:
            sys.stderr.write(f"case not applicable: probing needs aligned angles ({exc})\n")
            return EXIT_NOT_APPLICABLE
    rng = np.random.default_rng(args.seed)
    amp = math.radians(args.probe_amplitude_deg)
    header = "i,j,r0b,r1b,verdict,case_used,worst_margin,worst_normalized"
    if args.probe_conjecture:
        header += ",aligned_verdict,probe_counterexamples"
    rows = [header]
    for i, r0 in enumerate(axes["r0b"]):
        for j, r1 in enumerate(axes["r1b"]):
            p = lp.with_B(R0=float(r0), R1=float(r1))
            rep = dispatch_check(p, tol=args.tol, grid_step=step)
            w = rep.worst
            row = "%d,%d,%.17g,%.17g,%s,%s,%s,%.17g" % (i, j, r0, r1, rep.verdict.value, rep.case_used, w.name, w.normalized)
            if args.probe_conjecture:
                av, worse = _probe(p, args.tol, step, rng, args.probe_samples, amp)
                row += f",{av.value},{worse}"
            rows.append(row)
    sys.stdout.write("\n".join(rows) + "\n")
    return EXIT_OK


def _compare(lp, tol, band, step):
    g = feasibility_general(lp, tol=tol, grid_step=step)
    o = kelvin_pd_check(plate_law_matrix(lp), tol=tol)
    if g.verdict == o.verdict:
        return "agree", g, o
    if abs(g.worst.normalized) <= band and abs(o.normalized) <= band:
        return "in_band", g, o
    return "disagree", g, o


def cmd_verify(args) -> int:
    step = _grid_step(args)
    band = max(args.band, args.tol)
    if args.random:
        if args.samples < 1:
            raise InputError("--samples must be at least 1")
        spec = SampleSpec(count=args.samples, seed=args.seed, max_plies=args.max_plies)
        population = (lp for lp, _ in coupling_scaled_laminates(spec, args.coupling_factor))
    else:
        doc = load_document(args.input)
        population = [laminate_from_document(doc, args.h)[0]]
    counts = {"agree": 0, "in_band": 0, "disagree": 0}
    verdicts = {v.value: 0 for v in Verdict}
    failures = []
    for idx, lp in enumerate(population):
        status, g, o = _compare(lp, args.tol, band, step)
        counts[status] += 1
        verdicts[g.verdict.value] += 1
        if status == "disagree":
            failures.append({"index": idx, "bounds": g.verdict.value, "oracle": o.verdict.value,
                             "bounds_margin": g.worst.normalized, "oracle_margin": o.normalized})
    total = sum(counts.values())
    flags = []
    if verdicts["marginal"] == total:
        flags.append("every verdict is marginal: the tolerance is too coarse to decide anything")
    out = {
        "version": __version__,
        "samples": total,
        "agreements": counts["agree"],
        "disagreements_in_band": counts["in_band"],
        "disagreements": counts["disagree"],
        "verdicts": verdicts,
        "failures": failures,
        "flags": flags,
        "parameters": {"tol": args.tol, "band": band, "seed": args.seed if args.random else None,
                       "grid_step_deg": args.grid_step_deg},
    }
    lines = [
        f"samples: {total}",
        f"agreements: {counts['agree']}",
        f"disagreements within the marginal band: {counts['in_band']}",
        f"disagreements: {counts['disagree']}",
        "verdicts: " + ", ".join(f"{k} {v}" for k, v in verdicts.items()),
    ] + [f"flag: {f}" for f in flags] + [f"failure: {f}" for f in failures]
    _emit(out, args.json, lines)
    return EXIT_VERIFY_FAILED if counts["disagree"] else EXIT_OK


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="marginal band half-width (default 1e-9)")
    common.add_argument("--grid-step-deg", type=float, default=0.5, help="minimiser grid step, must divide 90")
    common.add_argument("--h", type=float, default=None, help="override the plate thickness")

    p = argparse.ArgumentParser(prog="polarbounds", description="Elastic bounds of coupled laminates.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("abd", cmd_abd, "polar and Cartesian A, B, D of a stacking")
    sp.add_argument("input", nargs="?", default="-")

    sp = add("check", cmd_check, "feasibility report")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--case", default="auto", choices=["auto", "general", "aligned", *_FORCED])

    sp = add("classify", cmd_classify, "symmetry classes and applicable case")
    sp.add_argument("input", nargs="?", default="-")

    sp = add("diagram", cmd_diagram, "polar diagram of one component as CSV")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--tensor", default="A", choices=["A", "B", "D", "ply"])
    sp.add_argument("--component", default="T1111")
    sp.add_argument("--step-deg", type=float, default=1.0)

    sp = add("scan", cmd_scan, "feasibility over a grid of coupling moduli, as CSV")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--grid", required=True, help='e.g. "r0b=0:40:21,r1b=0:40:21"')
    sp.add_argument("--probe-conjecture", action="store_true",
                    help="also test random non-aligned coupling angles against the aligned verdict")
    sp.add_argument("--probe-samples", type=int, default=8)
    sp.add_argument("--probe-amplitude-deg", type=float, default=10.0)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("verify", cmd_verify, "bound sets against the eigenvalue oracle")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--random", action="store_true", help="use seeded random laminates instead of an input")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-plies", type=int, default=16)
    sp.add_argument("--coupling-factor", type=float, default=3.0,
                    help="coupling moduli are scaled by a random factor in [0, this]")
    sp.add_argument("--band", type=float, default=1e-7, help="disagreements inside this band are tolerated")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (InvalidMaterialError, ValueError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
