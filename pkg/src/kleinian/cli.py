"""Command line interface.

Exit codes: 0 ok, 2 usage, 3 integrality violation, 4 budget exhausted,
5 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .cache import ResultCache
from .character import BudgetExceededError, extended_character, specialize_at_zeta, weight_multiplicity
from .lattice_theta import shell_counts_csv
from .lie_data import ClassificationError, DynkinType, cartan_matrix
from .oracle import OracleBudgetError, typeA_series_oracle
from .qseries import IntegralityError, demote_to_integer
from .zeta_series import SurfaceSpec, local_series, surface_series

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTEGRALITY = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5

INTEGRALITY_TYPES = (
    [f"A{n}" for n in range(1, 9)] + [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8"]
)

DEFAULTS = {
    "order": 50,
    "format": "plain",
    "workers": 1,
    "budget_mb": 2048,
    "cache_dir": str(Path.home() / ".cache" / "kleinian"),
    "max_rank_a": 30,
    "max_rank_d": 12,
}
_INT_KEYS = {"order", "workers", "budget_mb", "max_rank_a", "max_rank_d"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    order: int
    format: str
    workers: int
    budget_mb: int
    cache_dir: str
    max_rank_a: int
    max_rank_d: int
    use_cache: bool = True

    def __post_init__(self):
        if self.order < 0:
            raise UsageError("--order must be nonnegative")
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.format not in ("json", "csv", "plain"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.budget_mb < 1:
            raise UsageError("--budget-mb must be positive")

    @property
    def cache(self) -> ResultCache:
        return ResultCache(self.cache_dir if self.use_cache else None)


def read_config_file(path) -> dict:
    """``key = value`` lines; ``#`` starts a comment; keys match the long flag names."""
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip('"').strip("'")
    return values


def resolve_config(args, environ=None) -> RunConfig:
    """Flags win over ``KLEIN_*`` environment variables, which win over the config file."""
    environ = os.environ if environ is None else environ
    layered = dict(DEFAULTS)
    config_path = args.config or environ.get("KLEIN_CONFIG")
    if config_path:
        layered.update(read_config_file(config_path))
    for key in DEFAULTS:
        env = environ.get("KLEIN_" + key.upper())
        if env is not None:
            layered[key] = env
    for key in DEFAULTS:
        flag = getattr(args, key, None)
        if flag is not None:
            layered[key] = flag
    for key in _INT_KEYS:
        try:
            layered[key] = int(layered[key])
        except (TypeError, ValueError):
            raise UsageError(f"{key} must be an integer, got {layered[key]!r}")
    return RunConfig(command=args.command, use_cache=not args.no_cache, **layered)


def parse_type(text: str, cfg: RunConfig) -> DynkinType:
    try:
        t = DynkinType.parse(text)
    except ClassificationError as err:
        raise UsageError(str(err))
    cap = {"A": cfg.max_rank_a, "D": cfg.max_rank_d, "E": 8}[t.series]
    if t.rank > cap:
        raise UsageError(f"rank of {t} exceeds the configured cap {t.series}{cap}")
    return t


def _dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _series_rows(series_doc) -> list:
    return list(enumerate(series_doc["coeffs"]))


def render_series(doc, fmt: str) -> str:
    """Render a series result document; non-integral results always go out as JSON."""
    if fmt == "json" or not doc["integrality"]["ok"]:
        return _dumps(doc)
    rows = _series_rows(doc["series"])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "coefficient"])
        writer.writerows(rows)
        return buf.getvalue()
    return "".join(f"{k} {c}\n" for k, c in rows)


def render_table(columns, rows, fmt: str, extra=None) -> str:
    if fmt == "json":
        doc = {"rows": [dict(zip(columns, row)) for row in rows]}
        doc.update(extra or {})
        return _dumps(doc)
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
    else:
        widths = [max(len(str(x)) for x in [c] + [r[i] for r in rows]) for i, c in enumerate(columns)]
        for row in [columns] + [list(r) for r in rows]:
            buf.write("  ".join(str(x).rjust(w) for x, w in zip(row, widths)).rstrip() + "\n")
    return buf.getvalue()


def series_document(t: DynkinType, cfg: RunConfig) -> dict:
    return cfg.cache.fetch("series", str(t), cfg.order,
                           lambda: local_series(t, cfg.order, cfg.workers).to_json())


def cmd_series(args, cfg: RunConfig, out) -> int:
    t = parse_type(args.type, cfg)
    if args.dump_shells:
        sys.stderr.write(shell_counts_csv(cartan_matrix(t), 2 * cfg.order, cfg.workers))
    doc = series_document(t, cfg)
    out.write(render_series(doc, cfg.format))
    return EXIT_OK if doc["integrality"]["ok"] else EXIT_INTEGRALITY


def cmd_surface(args, cfg: RunConfig, out) -> int:
    try:
        spec = SurfaceSpec.parse(args.chi0, args.sing)
    except ClassificationError as err:
        raise UsageError(str(err))
    for t in spec.singularities:
        parse_type(str(t), cfg)

    def compute():
        doc = {"input": spec.to_json(), "truncation": cfg.order}
        try:
            doc["series"] = surface_series(spec, cfg.order, cfg.workers).to_json()
            doc["integrality"] = {"ok": True}
        except IntegralityError as err:
            doc["series"] = None
            doc["integrality"] = {"ok": False, "first_failure_degree": err.degree,
                                  "first_failure_coefficient": err.coefficient.to_json()}
        return doc

    doc = cfg.cache.fetch("surface", spec.to_json(), cfg.order, compute)
    out.write(render_series(doc, cfg.format))
    return EXIT_OK if doc["integrality"]["ok"] else EXIT_INTEGRALITY


def cmd_verify(args, cfg: RunConfig, out) -> int:
    rows = []
    ok = True
    for r in range(2, args.rmax + 1):
        t = DynkinType("A", r - 1)
        formula = local_series(t, args.mmax, cfg.workers)
        if not formula.integral:
            raise IntegralityError(formula.first_failure_degree, formula.first_failure_coefficient)
        oracle = typeA_series_oracle(r, args.mmax)
        for m in range(args.mmax + 1):
            match = formula.series[m] == oracle[m]
            ok &= match
            rows.append([r, m, str(formula.series[m]), str(oracle[m]), "yes" if match else "NO"])
    out.write(render_table(["r", "degree", "formula", "oracle", "match"], rows, cfg.format,
                           {"all_match": ok}))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_character(args, cfg: RunConfig, out) -> int:
    t = parse_type(args.type, cfg)
    order = args.order if args.order is not None else (args.degree if args.degree is not None else 10)
    if args.degree is not None or args.beta is not None:
        if args.degree is None or args.beta is None:
            raise UsageError("--beta and --degree must be given together")
        if len(args.beta) != t.rank:
            raise UsageError(f"--beta needs {t.rank} integers for {t}")
        if args.degree < 0:
            raise UsageError("--degree must be nonnegative")
        char = extended_character(t, args.degree, cfg.budget_mb, cfg.workers)
        mult = weight_multiplicity(t, args.beta, args.degree, char)
        if cfg.format == "json":
            out.write(_dumps({"type": str(t), "beta": args.beta, "degree": args.degree,
                              "mult": str(mult)}))
        else:
            out.write(f"{mult}\n")
        return EXIT_OK
    char = extended_character(t, order, cfg.budget_mb, cfg.workers)
    if args.check_specialization:
        special = specialize_at_zeta(char)
        try:
            ok = demote_to_integer(special) == local_series(t, order, cfg.workers).series
        except IntegralityError:
            ok = False
        verdict = "PASS" if ok else "FAIL"
        if cfg.format == "json":
            out.write(_dumps({"type": str(t), "truncation": order, "specialization": verdict}))
        else:
            out.write(verdict + "\n")
        return EXIT_OK if ok else EXIT_MISMATCH
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "beta", "mult"])
        for d, coeff in enumerate(char.coeffs):
            for beta, mult in coeff.items():
                writer.writerow([d, " ".join(map(str, beta)), mult])
        out.write(buf.getvalue())
    elif cfg.format == "json":
        out.write(_dumps(char.to_json()))
    else:
        for d, coeff in enumerate(char.coeffs):
            terms = ", ".join(f"{mult}*q^{list(beta)}" for beta, mult in coeff.items())
            out.write(f"{d}: {terms}\n")
    return EXIT_OK


def cmd_integrality(args, cfg: RunConfig, out) -> int:
    names = [s.strip() for s in args.types.split(",") if s.strip()] if args.types else INTEGRALITY_TYPES
    rows = []
    ok = True
    for name in names:
        t = parse_type(name, cfg)
        doc = series_document(t, cfg)
        integ = doc["integrality"]
        ok &= integ["ok"]
        negative = sum(1 for c in doc["series"]["coeffs"] if c.startswith("-")) if integ["ok"] else ""
        rows.append([str(t), cfg.order, "yes" if integ["ok"] else "NO",
                     integ.get("first_failure_degree", ""), negative])
    out.write(render_table(["type", "truncation", "integral", "first_failure_degree",
                            "negative_coefficients"], rows,
                           cfg.format, {"all_integral": ok}))
    return EXIT_OK if ok else EXIT_INTEGRALITY


def cmd_selfcheck(args, cfg: RunConfig, out) -> int:
    from .selfcheck import run_all

    results = run_all()
    rows = [[name, "PASS" if passed else "FAIL", detail] for name, passed, detail in results]
    out.write(render_table(["check", "status", "detail"], rows, cfg.format,
                           {"all_passed": all(p for _, p, _ in results)}))
    return EXIT_OK if all(p for _, p, _ in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", "-N", type=int, default=None, help="truncation order N")
    common.add_argument("--format", choices=["json", "csv", "plain"], default=None)
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--budget-mb", dest="budget_mb", type=int, default=None)
    common.add_argument("--cache-dir", dest="cache_dir", default=None)
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--config", default=None, help="key = value config file")
    common.add_argument("--max-rank-a", dest="max_rank_a", type=int, default=None)
    common.add_argument("--max-rank-d", dest="max_rank_d", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="kleinian",
        description="Euler characteristics of Hilbert schemes of points on Kleinian singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="local series of C^2/G for an ADE type")
    p.add_argument("--type", required=True, help='Dynkin type such as "A1", "D4", "E8"')
    p.add_argument("--dump-shells", action="store_true",
                   help="write norm,count per lattice shell to stderr")

    p = sub.add_parser("surface", parents=[common], help="series of a surface with simple singularities")
    p.add_argument("--chi0", type=int, required=True, help="Euler characteristic of the smooth locus")
    p.add_argument("--sing", default="", help='comma-separated singularity types, e.g. "A1,A1,D4"')

    p = sub.add_parser("character", parents=[common],
                       help="extended basic representation character and its specialization")
    p.add_argument("--type", required=True)
    p.add_argument("--beta", type=int, nargs="+", default=None, help="root-lattice vector in simple roots")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--check-specialization", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="type A formula against fixed-point counts")
    p.add_argument("--rmax", type=int, default=4)
    p.add_argument("--mmax", type=int, default=8)

    p = sub.add_parser("integrality", parents=[common], help="certify integer coefficients")
    p.add_argument("--types", default=None, help="comma-separated types (default A1-A8, D4-D8, E6-E8)")

    sub.add_parser("selfcheck", parents=[common], help="desk-scale invariant suite")
    return parser


COMMANDS = {
    "series": cmd_series,
    "surface": cmd_surface,
    "character": cmd_character,
    "verify": cmd_verify,
    "integrality": cmd_integrality,
    "selfcheck": cmd_selfcheck,
}


def main(argv=None, out=None, environ=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args, environ)
        if args.command == "verify" and (args.rmax < 2 or args.mmax < 0):
            raise UsageError("--rmax must be at least 2 and --mmax nonnegative")
        return COMMANDS[args.command](args, cfg, out)
    except UsageError as err:
        sys.stderr.write(f"kleinian: error: {err}\n")
        return EXIT_USAGE
    except IntegralityError as err:
        sys.stderr.write(f"kleinian: integrality violation: {err}\n")
        return EXIT_INTEGRALITY
    except (BudgetExceededError, OracleBudgetError) as err:
        sys.stderr.write(f"kleinian: budget exhausted: {err}\n")
        return EXIT_BUDGET


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
