"""Command-line front end.

    fcat table   [--C C ...] --out table.csv
    fcat domain  --C 3.1
    fcat profile --kind timelike --C 3.1 --u-range=-0.74,0.74 --n 601 --out g.csv
    fcat mesh    --kind spacelike --C 0 --u-range 0.05,2 --nu 64 --nv 64 --out cat.obj
    fcat verify  --suite all --seed 0

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 I/O or internal error. Any flag may also come from ``--config FILE``
(flat ``key=value`` lines, ``#`` comments); explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from typing import Optional, Sequence

from . import profiles, verify
from .errors import DegeneratePointError, DomainError, FcatError
from .surfaces import unit_normal

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

SUITES = ("all", "tables", "residuals", "classification", "corollary", "lemma1")
TOLERANCE_KEYS = ("spread", "escape", "residual")


class UsageError(Exception):
    """Bad flag values that argparse itself cannot catch."""


def fmt(x: float) -> str:
    """10 significant digits, shortest form."""
    return format(x, ".10g")


def _write_csv(path: str, header: Sequence[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(x) for x in row])


def parse_u_range(text: str) -> Optional[tuple[float, float]]:
    if text.strip().lower() == "auto":
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"u-range must be 'lo,hi' or 'auto', got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"u-range must be 'lo,hi' or 'auto', got {text!r}") from None
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise UsageError(f"u-range needs finite lo < hi, got {text!r}")
    return lo, hi


def parse_tolerances(items: Sequence[str]) -> dict[str, float]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in TOLERANCE_KEYS:
            raise UsageError(f"--tol expects one of {', '.join(TOLERANCE_KEYS)} as key=value, got {item!r}")
        try:
            out[key] = float(value)
        except ValueError:
            raise UsageError(f"--tol {key}: not a number: {value!r}") from None
        if not out[key] > 0.0:
            raise UsageError(f"--tol {key} must be positive")
    return out


def read_config(path: str) -> dict[str, str]:
    """Flat key=value file; keys use flag spelling with or without dashes."""
    entries = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            entries[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return entries


# -- profiles from flags ----------------------------------------------------

_COMPONENT_NAMES = {0: "outer-", 1: "inner", 2: "outer"}


def _component_name(case: profiles.DomainCase, interval: tuple[float, float]) -> str:
    comps = case.components()
    if len(comps) == 1:
        return "inner"
    return _COMPONENT_NAMES[comps.index(interval)]


def build_profile(kind: str, C: float, u_range, component: str, sign: int, u0: Optional[float]):
    """Profile and u-range for the profile/mesh commands.

    With an explicit range the timelike component is the one containing it.
    """
    if kind == "spacelike":
        prof = profiles.spacelike_catenoid(C, sign)
    else:
        if not C > 0.0:
            raise DomainError(f"timelike f-catenoids need C > 0, got {C}")
        if u_range is not None:
            case = profiles.domain_case(C)
            lo, hi = u_range
            comp = _closed_component(case, lo, hi)
            component = _component_name(case, comp)
        prof = profiles.timelike_catenoid(C, component, sign, u0=u0)
    if u_range is None:
        u_range = profiles.natural_range(prof)
    return prof, u_range


def _closed_component(case, lo, hi):
    """The component whose closure holds [lo, hi]; ends may touch a root."""
    for comp in case.components():
        a, b = comp
        if a - 1e-12 * max(1.0, abs(a)) <= lo and hi <= b + 1e-12 * max(1.0, abs(b)):
            return comp
    raise DomainError(
        f"u-range [{lo}, {hi}] is not inside one component of the domain for C = {case.C} "
        f"(components: {', '.join(_interval(c) for c in case.components())})"
    )


def _interval(c) -> str:
    return f"({fmt(c[0])}, {fmt(c[1])})"


def _samples(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


# -- commands -----------------------------------------------------------------

def cmd_table(args) -> int:
    Cs = args.C if args.C else [row[0] for row in profiles.PUBLISHED_TABLE]
    for C in Cs:
        if not C > profiles.E:
            raise DomainError(f"table rows need C > e, got C = {C}")
    rows = []
    for C in Cs:
        r = profiles.table_row(C)
        rows.append((r.C, r.u1, r.u2, r.I1, r.I2))
    _write_csv(args.out, ("C", "u1", "u2", "I1", "I2"), rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_domain(args) -> int:
    C = args.C
    if not C > 0.0:
        raise DomainError(f"C must be positive, got {C}")
    case = profiles.domain_case(C)
    tag = case.tag.value
    if case.tag is profiles.DomainTag.WHOLE_LINE:
        print(f"{tag}, D=R, u0=0")
        return EXIT_OK
    comps = case.components()
    print(f"{tag}, D={' U '.join(_interval(c) for c in comps)}")
    bases = case.base_points()
    for comp, base in zip(comps, bases):
        u0 = "none (must be chosen inside the component)" if base is None else fmt(base)
        print(f"component {_interval(comp)}: u0={u0}")
    if case.roots:
        u1, u2 = case.roots
        print(f"roots: u1={fmt(u1)}, u2={fmt(u2)}")
    if case.tag is profiles.DomainTag.PUNCTURED_AT_ONE:
        print("warning: at C = e the integral of g' diverges at u = +-1; "
              "g is unbounded near the punctures")
    return EXIT_OK


def cmd_profile(args) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    prof, (lo, hi) = build_profile(args.kind, args.C, parse_u_range(args.u_range),
                                   args.component, args.sign, args.u0)
    us = _samples(lo, hi, args.n)
    gs = prof.heights(us)
    rows = [(u, g, prof.gprime(u)) for u, g in zip(us, gs)]
    _write_csv(args.out, ("u", "g", "gprime"), rows)
    print(f"wrote {len(rows)} samples of the {args.kind} generatrix on [{fmt(lo)}, {fmt(hi)}] to {args.out}")
    return EXIT_OK


def mesh_data(S, nu: int, nv: int):
    """Vertices (u-major) and 1-based triangles; closed in v when periodic."""
    u0, u1 = S.u_range
    v0, v1 = S.v_range
    us = _samples(u0, u1, nu)
    if S.periodic_v:
        vs = [v0 + (v1 - v0) * j / nv for j in range(nv)]
    else:
        vs = _samples(v0, v1, nv)
    verts = []
    for u in us:
        for v in vs:
            unit_normal(S, u, v)  # raises DegeneratePointError naming (u, v)
            verts.append(S.position(u, v))
    cols = nv if S.periodic_v else nv - 1
    faces = []
    for i in range(nu - 1):
        for j in range(cols):
            jn = (j + 1) % nv
            a, b = i * nv + j + 1, i * nv + jn + 1
            c, d = (i + 1) * nv + j + 1, (i + 1) * nv + jn + 1
            faces.append((a, b, d))
            faces.append((a, d, c))
    return verts, faces


def cmd_mesh(args) -> int:
    if args.nu < 2 or args.nv < 2:
        raise UsageError("--nu and --nv must be at least 2")
    prof, u_range = build_profile(args.kind, args.C, parse_u_range(args.u_range),
                                  args.component, args.sign, args.u0)
    S = profiles.make_surface(prof, u_range)
    prof.heights(_samples(*S.u_range, args.nu))  # one sweep fills the height cache
    verts, faces = mesh_data(S, args.nu, args.nv)
    with open(args.out, "w", newline="\n") as fh:
        for p in verts:
            fh.write(f"v {fmt(p.x)} {fmt(p.y)} {fmt(p.z)}\n")
        for f in faces:
            fh.write(f"f {f[0]} {f[1]} {f[2]}\n")
    print(f"wrote {len(verts)} vertices and {len(faces)} triangles to {args.out}")
    return EXIT_OK


def run_suite(name: str, seed: int, trials: int, tol: dict[str, float]) -> list[verify.VerificationReport]:
    spread = tol.get("spread", verify.SPREAD_MIN)
    escape = tol.get("escape", verify.ESCAPE_MAX)
    residual = tol.get("residual", verify.RESIDUAL_MAX)
    todo = SUITES[1:] if name == "all" else (name,)
    reports = []
    for suite in todo:
        if suite == "tables":
            reports.append(verify.tables_suite())
        elif suite == "residuals":
            reports.append(verify.residual_suite(seed=seed, residual_max=residual))
        elif suite == "classification":
            for fam in verify.Family:
                reports.append(verify.theorem_sweep(
                    fam, trials, seed, spread_min=spread, escape_max=escape, residual_max=residual))
        elif suite == "corollary":
            reports.append(verify.corollary_suite())
        elif suite == "lemma1":
            reports.append(verify.lemma1_suite(seed=seed))
    return reports


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    tol = parse_tolerances(args.tol or [])
    reports = run_suite(args.suite, args.seed, args.trials, tol)
    for rep in reports:
        print(rep.render())
        print()
    ok = all(rep.passed for rep in reports)
    print(f"overall: {'PASS' if ok else 'FAIL'} (suite={args.suite}, seed={args.seed})")
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser -------------------------------------------------------------------

def _add_surface_flags(p, need_out=True):
    p.add_argument("--kind", choices=("spacelike", "timelike"), required=True)
    p.add_argument("--C", type=float, required=True, help="integration constant")
    p.add_argument("--u-range", default="auto",
                   help="'lo,hi' or 'auto' (write --u-range=-1,1 for negative lo)")
    p.add_argument("--component", choices=("inner", "outer", "outer-"), default="inner",
                   help="timelike domain component for --u-range auto")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--u0", type=float, default=None,
                   help="base point; required on the outer components at C = e")
    p.add_argument("--out", required=need_out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcat",
        description="f-catenoids and zero f-mean-curvature surfaces of revolution in R^3_1",
    )
    parser.add_argument("--config", help="key=value file of defaults for the subcommand's flags")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="recompute the roots u1, u2 and integrals I1, I2")
    p.add_argument("--C", type=float, nargs="+", help="values of C > e (default: the published list)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("domain", help="domain of the timelike generatrix for a given C")
    p.add_argument("--C", type=float, required=True)
    p.set_defaults(func=cmd_domain)

    p = sub.add_parser("profile", help="sample a generatrix to CSV (u,g,gprime)")
    _add_surface_flags(p)
    p.add_argument("--n", type=int, default=601)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("mesh", help="triangulate an f-catenoid to OBJ")
    _add_surface_flags(p)
    p.add_argument("--nu", type=int, default=64)
    p.add_argument("--nv", type=int, default=64)
    p.set_defaults(func=cmd_mesh)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200, help="classification trials per family")
    p.add_argument("--tol", action="append", metavar="KEY=VALUE",
                   help=f"tolerance override, KEY in {{{', '.join(TOLERANCE_KEYS)}}}")
    p.set_defaults(func=cmd_verify)
    return parser


def _apply_config(parser, argv, path):
    """Re-parse with the config file's entries as defaults of the chosen subcommand."""
    entries = read_config(path)
    choices = parser._subparsers._group_actions[0].choices
    command = next((tok for tok in argv if tok in choices), None)
    if command is None:
        return parser.parse_args(argv)
    subparser = choices[command]
    known = {a.dest: a for a in subparser._actions if a.dest != "help"}
    defaults = {}
    for key, value in entries.items():
        if key not in known or key in ("func", "command"):
            raise UsageError(f"{path}: unknown key {key!r} for '{command}'")
        action = known[key]
        if action.nargs in ("+", "*"):
            defaults[key] = [action.type(x) if action.type else x
                             for x in value.replace(",", " ").split()]
        elif isinstance(action, argparse._AppendAction):
            defaults[key] = [x.strip() for x in value.split(";") if x.strip()]
        else:
            defaults[key] = action.type(value) if action.type else value
        if action.required:
            action.required = False
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        config = _find_config(argv)
        try:
            args = _apply_config(parser, argv, config) if config else parser.parse_args(argv)
        except SystemExit as exc:  # argparse usage errors
            return EXIT_USAGE if exc.code else EXIT_OK
        return args.func(args)
    except (UsageError, DomainError, DegeneratePointError) as exc:
        print(f"fcat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fcat: I/O error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (FcatError, ArithmeticError, ValueError) as exc:
        print(f"fcat: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _find_config(argv) -> Optional[str]:
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if tok.startswith("--config="):
            return tok.split("=", 1)[1]
    return None


if __name__ == "__main__":
    sys.exit(main())
