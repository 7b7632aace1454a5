"""Command-line interface: density grids, mean-energy scans and the
numerical verification suites.

Grids go to `<out>.csv` (header x,y,rho,re_up,im_up,re_lo,im_lo, one row
per node, y as the outer loop) with a `<out>.meta.json` sidecar carrying
the schema version and the fully resolved configuration, so every run is
reproducible from its metadata alone.  All floats are written with 17
significant digits and LF line ends, making outputs bit-deterministic.

Exit codes: 0 ok / all checks passed, 1 numeric failure, 2 usage error.
"""

import argparse
import json
import math
import re
import sys

import numpy as np

from . import kernels
from .coherent import (
    CS2DSpec,
    SU11Spec,
    eigen_residual_su11,
    eigen_residuals_2d,
)
from .fock import build_truncated, check_factorization, interior_mask
from .matrix_ops import PhaseParams, verify_matrix_algebra
from .model import ModelParams, classical_ellipse
from .observables import (
    GridSpec,
    density_grid,
    locate_peak,
    mean_energy_2d,
    mean_energy_su11,
    normalization_integral,
)
from .special import SeriesControl
from .verify import moment_check, resolution_of_identity

SCHEMA_VERSION = 1


def parse_complex(text):
    """Parse 'a+bi' literals ('2+0i', '-1.5i', '3', '1-2e-3i')."""
    s = text.strip().replace(" ", "")
    if not s:
        raise argparse.ArgumentTypeError("empty complex literal")
    if s[-1] in "iI":
        body = s[:-1]
        m = re.match(r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
                     r"(?P<im>[+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)$",
                     body)
        if m is None:
            raise argparse.ArgumentTypeError(f"bad complex literal {text!r}")
        re_part = m.group("re")
        im_part = m.group("im")
        # disambiguate: '3i' parses with re='3', im='' -> imaginary only
        if im_part == "" or im_part is None:
            re_part, im_part = None, re_part if re_part else "1"
        if im_part in ("+", "-"):
            im_part += "1"
        return complex(float(re_part) if re_part else 0.0, float(im_part))
    try:
        return complex(float(s), 0.0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad complex literal {text!r}") from None


def parse_grid(text):
    parts = text.split(",")
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(
            "grid must be x0,x1,nx,y0,y1,ny")
    try:
        x0, x1, y0, y1 = (float(parts[i]) for i in (0, 1, 3, 4))
        nx, ny = int(parts[2]), int(parts[5])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid spec {text!r}") from None
    try:
        return GridSpec(x_min=x0, x_max=x1, nx=nx, y_min=y0, y_max=y1, ny=ny)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_int_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _fmt(v):
    return f"{v:.17g}"


def _cjson(z):
    return [z.real, z.imag]


def _model(args):
    return ModelParams(omega_b=args.omega_b, zeta=args.zeta)


def _control(args):
    return SeriesControl(rel_tol=args.rel_tol, max_terms=args.max_terms)


def _state_from_args(args, parser):
    if args.kind == "2d":
        if args.alpha is None or args.beta is None:
            parser.error("--kind 2d needs --alpha and --beta")
        return CS2DSpec(alpha=args.alpha, beta=args.beta,
                        delta=args.delta, eta=args.eta)
    if args.tau is None or args.mz is None:
        parser.error("--kind su11 needs --tau and --mz")
    if len(args.mz) != 1:
        parser.error("density takes exactly one --mz value")
    return SU11Spec(tau=args.tau, m_z=args.mz[0], delta=args.delta)


def _common_config(args, state):
    cfg = {
        "omega_b": args.omega_b,
        "zeta": args.zeta,
        "rel_tol": args.rel_tol,
        "max_terms": args.max_terms,
        "paper_literal": bool(getattr(args, "paper_literal", False)),
    }
    if args.b0 is not None:
        # accepted for fidelity to figure captions; the field strength only
        # ever enters through omega_b, which is supplied directly
        cfg["b0"] = args.b0
    if isinstance(state, CS2DSpec):
        cfg.update(kind="2d", alpha=_cjson(complex(state.alpha)),
                   beta=_cjson(complex(state.beta)),
                   delta=state.delta, eta=state.eta)
    elif isinstance(state, SU11Spec):
        cfg.update(kind="su11", tau=_cjson(complex(state.tau)),
                   m_z=state.m_z, delta=state.delta)
    return cfg


def cmd_density(args, parser):
    p = _model(args)
    ctl = _control(args)
    state = _state_from_args(args, parser)
    g = args.grid
    fg = density_grid(p, state, g, ctl, paper_literal=args.paper_literal)
    peak_pt, peak_val, (ix, iy) = locate_peak(fg)
    norm = normalization_integral(p, state, ctl,
                                  paper_literal=args.paper_literal)

    xs = g.x_nodes()
    ys = g.y_nodes()
    csv_path = f"{args.out}.csv"
    with open(csv_path, "w", newline="\n") as fh:
        fh.write("x,y,rho,re_up,im_up,re_lo,im_lo\n")
        for jy in range(g.ny):
            for jx in range(g.nx):
                u = fg.upper[jx, jy]
                lo = fg.lower[jx, jy]
                fh.write(",".join((
                    _fmt(xs[jx]), _fmt(ys[jy]), _fmt(fg.density[jx, jy]),
                    _fmt(u.real), _fmt(u.imag), _fmt(lo.real), _fmt(lo.imag),
                )) + "\n")

    meta = {
        "schema_version": SCHEMA_VERSION,
        "command": "density",
        "config": _common_config(args, state),
        "grid": {"x_min": g.x_min, "x_max": g.x_max, "nx": g.nx,
                 "y_min": g.y_min, "y_max": g.y_max, "ny": g.ny},
        "kernel_backend": kernels.active_backend(),
        "peak": {"x": peak_pt.x, "y": peak_pt.y, "ix": ix, "iy": iy,
                 "rho": peak_val},
        "normalization_integral": norm,
    }
    if isinstance(state, CS2DSpec):
        e = classical_ellipse(p, state.alpha_t, state.beta_eff)
        meta["ellipse"] = {
            "center_x": e.center.x, "center_y": e.center.y,
            "semi_axis_x": e.semi_axis_x, "semi_axis_y": e.semi_axis_y,
            "eccentricity": e.eccentricity,
        }
    with open(f"{args.out}.meta.json", "w", newline="\n") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {csv_path} and {args.out}.meta.json "
          f"(peak rho={peak_val:.6g} at ({peak_pt.x:.4g}, {peak_pt.y:.4g}), "
          f"norm={norm:.9f})")
    return 0


def cmd_energy_scan(args, parser):
    p = _model(args)
    ctl = _control(args)
    values = np.linspace(args.start, args.stop, args.steps + 1)
    csv_path = f"{args.out}.csv"
    if args.kind == "2d":
        header = "param,value"
        columns = [[mean_energy_2d(p, v, ctl) for v in values]]
        col_names = ["value"]
    else:
        if not args.mz:
            parser.error("--kind su11 needs --mz")
        header = "param," + ",".join(f"mz={m}" for m in args.mz)
        columns = [[mean_energy_su11(p, v, m, ctl) for v in values]
                   for m in args.mz]
        col_names = [f"mz={m}" for m in args.mz]
    with open(csv_path, "w", newline="\n") as fh:
        fh.write(header + "\n")
        for i, v in enumerate(values):
            fh.write(",".join([_fmt(v)] + [_fmt(col[i]) for col in columns])
                     + "\n")
    meta = {
        "schema_version": SCHEMA_VERSION,
        "command": "energy-scan",
        "config": {
            "kind": args.kind, "start": args.start, "stop": args.stop,
            "steps": args.steps, "omega_b": args.omega_b, "zeta": args.zeta,
            "mz": args.mz, "rel_tol": args.rel_tol,
            "max_terms": args.max_terms,
        },
        "columns": col_names,
    }
    with open(f"{args.out}.meta.json", "w", newline="\n") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {csv_path} ({len(values)} rows)")
    return 0


def _suite_algebra(args):
    rows = []
    cutoff = args.cutoff
    ops = {w: build_truncated(w, cutoff).entries
           for w in ("A-", "A+", "B-", "B+", "Lz")}
    eye = np.eye((cutoff + 1) ** 2)
    mask = interior_mask(cutoff, margin=1)

    def dev(mat):
        sub = mat[np.ix_(mask, mask)]
        return float(np.max(np.abs(sub)))

    def comm(a, b):
        return ops[a] @ ops[b] - ops[b] @ ops[a]

    scalar_checks = {
        "[A-, A+] - 1": comm("A-", "A+") - eye,
        "[B-, B+] - 1": comm("B-", "B+") - eye,
        "[A-, B-]": comm("A-", "B-"),
        "[A-, B+]": comm("A-", "B+"),
        "[A+, B+]": comm("A+", "B+"),
        "[Lz, A+] - A+": comm("Lz", "A+") - ops["A+"],
        "[Lz, A-] + A-": comm("Lz", "A-") + ops["A-"],
        "[Lz, B+] + B+": comm("Lz", "B+") + ops["B+"],
        "[Lz, B-] - B-": comm("Lz", "B-") - ops["B-"],
    }
    for name, mat in scalar_checks.items():
        rows.append((f"scalar {name}", dev(mat), args.tol))
    rep = verify_matrix_algebra(cutoff, PhaseParams(args.delta, args.eta))
    for name, d in rep["interior"].items():
        rows.append((f"spinor {name}", d, args.tol))
    return rows


def _suite_factorization(args):
    rep = check_factorization(ModelParams(omega_b=args.omega_b,
                                          zeta=args.zeta), args.cutoff)
    return [(name, val, args.tol) for name, val in rep.items()
            if name not in ("omega_b", "cutoff", "max_deviation")]


def _suite_moments(args):
    rows = []
    for m_z in args.mz:
        kind = "f" if m_z >= 0 else "g"
        s_list = list(range(max(0, m_z), args.smax + 1))
        rep = moment_check(kind, m_z, s_list)
        for (s, target, value, rel) in rep.rows:
            rows.append((f"moment {kind} m_z={m_z} s={s}", rel, args.tol))
    return rows


def _suite_completeness(args):
    rows = []
    rep = resolution_of_identity("2d", max_index=args.block)
    rows.append(("identity 2d", rep.max_deviation, args.tol))
    for m_z in args.mz:
        if m_z >= 1:
            rep = resolution_of_identity("su11_pos", max_index=m_z + args.block_n,
                                         m_z=m_z)
            rows.append((f"identity su11_pos m_z={m_z}", rep.max_deviation,
                         args.tol))
        else:
            rep = resolution_of_identity("su11_neg", max_index=args.block_n,
                                         m_z=m_z)
            rows.append((f"identity su11_neg m_z={m_z}", rep.max_deviation,
                         args.tol))
    return rows


def _suite_normalization(args):
    p = ModelParams(omega_b=args.omega_b, zeta=args.zeta)
    ctl = SeriesControl(rel_tol=args.rel_tol, max_terms=args.max_terms)
    states = []
    if args.alpha is not None and args.beta is not None:
        states.append(CS2DSpec(alpha=args.alpha, beta=args.beta,
                               delta=args.delta, eta=args.eta))
    if args.tau is not None:
        for m_z in (args.mz or [1, -2]):
            states.append(SU11Spec(tau=args.tau, m_z=m_z, delta=args.delta))
    if not states:
        states = [CS2DSpec(alpha=2.0, beta=5.0),
                  SU11Spec(tau=3.0, m_z=1), SU11Spec(tau=3.0, m_z=-2)]
    rows = []
    for st in states:
        norm = normalization_integral(p, st, ctl)
        label = ("2d" if isinstance(st, CS2DSpec)
                 else f"su11 m_z={st.m_z}")
        rows.append((f"normalization {label}", abs(norm - 1.0), args.tol))
    return rows


def _suite_eigen(args):
    ctl = SeriesControl(rel_tol=args.rel_tol, max_terms=args.max_terms)
    rows = []
    if args.alpha is not None and args.beta is not None:
        s = CS2DSpec(alpha=args.alpha, beta=args.beta, delta=args.delta,
                     eta=args.eta)
        res = eigen_residuals_2d(s, ctl)
        rows.append(("eigen 2d A-", res["A"], args.tol))
        rows.append(("eigen 2d B-", res["B"], args.tol))
    if args.tau is not None:
        for m_z in (args.mz or [1, -1]):
            s = SU11Spec(tau=args.tau, m_z=m_z, delta=args.delta)
            rows.append((f"eigen su11 K- m_z={m_z}",
                         eigen_residual_su11(s, ctl), args.tol))
    if not rows:
        rows.extend(_suite_eigen_defaults(ctl, args.tol))
    return rows


def _suite_eigen_defaults(ctl, tol):
    rows = []
    res = eigen_residuals_2d(CS2DSpec(alpha=1 + 1j, beta=2.0), ctl)
    rows.append(("eigen 2d A-", res["A"], tol))
    rows.append(("eigen 2d B-", res["B"], tol))
    for m_z in (-2, 0, 3):
        rows.append((f"eigen su11 K- m_z={m_z}",
                     eigen_residual_su11(SU11Spec(tau=2.5, m_z=m_z), ctl),
                     tol))
    return rows


_SUITES = {
    "algebra": _suite_algebra,
    "factorization": _suite_factorization,
    "moments": _suite_moments,
    "completeness": _suite_completeness,
    "normalization": _suite_normalization,
    "eigen": _suite_eigen,
}


def cmd_verify(args, parser):
    rows = _SUITES[args.suite](args)
    all_pass = True
    report = []
    for name, value, tol in rows:
        ok = math.isfinite(value) and value <= tol
        all_pass &= ok
        report.append({"check": name, "deviation": value, "tol": tol,
                       "pass": ok})
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: deviation {value:.3e} "
              f"(tol {tol:.1e})")
    summary = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "suite": args.suite,
        "all_pass": all_pass,
        "checks": report,
    }
    if args.json:
        with open(args.json, "w", newline="\n") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(f"suite {args.suite}: {'PASS' if all_pass else 'FAIL'} "
          f"({len(report)} checks)")
    return 0 if all_pass else 1


def _add_common(sp):
    sp.add_argument("--omega-b", type=float, default=1.0,
                    help="cyclotron frequency (inverse length^2)")
    sp.add_argument("--zeta", type=float, default=1.0,
                    help="velocity anisotropy v_x/v_y")
    sp.add_argument("--b0", type=float, default=None,
                    help="field strength label; enters only through "
                         "--omega-b, echoed into metadata")
    sp.add_argument("--delta", type=float, default=0.0,
                    help="A-operator phase (radians)")
    sp.add_argument("--eta", type=float, default=0.0,
                    help="B-operator phase (radians)")
    sp.add_argument("--rel-tol", type=float, default=1e-14)
    sp.add_argument("--max-terms", type=int, default=10_000)


_DASH_NUMBER = re.compile(r"^-[\d.]")


def _allow_negative_values(parser):
    # let values like "-2,16,200,-10,10,200" or "-1.5-2i" follow an option
    # without being mistaken for flags (none of our flags start with a digit)
    parser._negative_number_matcher = _DASH_NUMBER


def build_parser():
    parser = argparse.ArgumentParser(
        prog="landaucs",
        description="Coherent states of anisotropic 2D Dirac fermions in a "
                    "perpendicular magnetic field (symmetric gauge)")
    _allow_negative_values(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="evaluate a probability density grid")
    d.add_argument("--kind", choices=("2d", "su11"), required=True)
    d.add_argument("--alpha", type=parse_complex)
    d.add_argument("--beta", type=parse_complex)
    d.add_argument("--tau", type=parse_complex)
    d.add_argument("--mz", type=parse_int_list)
    d.add_argument("--grid", type=parse_grid, required=True,
                   help="x0,x1,nx,y0,y1,ny (nodes at cell centers)")
    d.add_argument("--out", required=True, help="output path prefix")
    d.add_argument("--paper-literal", action="store_true",
                   help="emit the bare printed closed forms (unit norm "
                        "under d^2z) instead of the dx dy convention")
    _add_common(d)
    _allow_negative_values(d)
    d.set_defaults(func=cmd_density)

    e = sub.add_parser("energy-scan", help="mean energy versus |eigenvalue|")
    e.add_argument("--kind", choices=("2d", "su11"), required=True)
    e.add_argument("--start", type=float, default=0.0)
    e.add_argument("--stop", type=float, required=True)
    e.add_argument("--steps", type=int, required=True,
                   help="number of intervals (rows = steps + 1, inclusive)")
    e.add_argument("--mz", type=parse_int_list,
                   help="comma list of m_z values (su11 only)")
    e.add_argument("--out", required=True)
    _add_common(e)
    _allow_negative_values(e)
    e.set_defaults(func=cmd_energy_scan)

    v = sub.add_parser("verify", help="run a numerical verification suite")
    v.add_argument("--suite", choices=sorted(_SUITES), required=True)
    v.add_argument("--tol", type=float, default=1e-10)
    v.add_argument("--cutoff", type=int, default=30)
    v.add_argument("--block", type=int, default=6,
                   help="2d identity block: indices 0..block per mode")
    v.add_argument("--block-n", type=int, default=48,
                   help="su11 identity block depth in n")
    v.add_argument("--smax", type=int, default=8)
    v.add_argument("--mz", type=parse_int_list, default=None)
    v.add_argument("--alpha", type=parse_complex)
    v.add_argument("--beta", type=parse_complex)
    v.add_argument("--tau", type=parse_complex)
    v.add_argument("--json", help="also write the report as JSON")
    _add_common(v)
    _allow_negative_values(v)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "mz", None) is None and args.command == "verify":
        if args.suite == "moments":
            args.mz = [0, 1, 2, -1, -3]
        elif args.suite == "completeness":
            args.mz = [1, -2]
    try:
        return args.func(args, parser)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
