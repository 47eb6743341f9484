"""Command-line interface: ``lcsq dims | decompose | verify | fixtures``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 resource or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import characters as ch
from .exact_linalg import DEFAULT_PRIME
from .lcs_engine import (ResourceLimitError, b_character, bbar1_character, build_lcs_table,
                         resource_cap)
from .verifier import DEFAULT_INSTANCES, VerificationReport, verify_instance, verify_lemmas

SCHEMA_VERSION = 1
log = logging.getLogger("lcsq")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    m: int | None
    n: int | None
    deg_max: int | None
    modulus: int | None
    output_format: str
    seed: int
    resource_cap: int

    @property
    def arithmetic_mode(self) -> str:
        return "rational" if self.modulus is None else f"prime-field({self.modulus})"


def partition_key(D: ch.Partition, n: int) -> str:
    return json.dumps(list(D.padded(n)), separators=(",", ":"))


def _instance(cfg: RunConfig) -> dict:
    return {"m": cfg.m, "n": cfg.n, "deg_max": cfg.deg_max}


def _header(cfg: RunConfig) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "instance": _instance(cfg),
           "arithmetic": cfg.arithmetic_mode}
    if cfg.modulus is not None:
        out["probabilistic"] = True
    return out


def _require(cfg: RunConfig, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(cfg, n) is None]
    if missing:
        raise ConfigError(f"{cfg.command} needs {', '.join(missing)}")
    if cfg.deg_max is not None and cfg.deg_max < 1:
        raise ConfigError("--deg-max must be >= 1")


def _character(cfg: RunConfig, reduced: bool = False):
    if cfg.m == 1 and reduced:
        return bbar1_character(cfg.n, cfg.deg_max, cfg.modulus, cfg.resource_cap)
    table = build_lcs_table(cfg.n, cfg.m, cfg.deg_max, cfg.modulus, cfg.resource_cap)
    return b_character(table, cfg.m)


def cmd_dims(cfg: RunConfig, reduced: bool = False) -> tuple[dict, int]:
    _require(cfg, "m", "n", "deg_max")
    series = _character(cfg, reduced).total_series()
    out = _header(cfg)
    out["quotient"] = "Bbar_1" if reduced and cfg.m == 1 else f"B_{cfg.m}"
    out["dims"] = series[1:]
    return out, 0


def cmd_decompose(cfg: RunConfig, reduced: bool = False) -> tuple[dict, int]:
    _require(cfg, "m", "n", "deg_max")
    bchar = _character(cfg, reduced)
    chi = ch.from_counts(bchar.coefficients, cfg.n, cfg.deg_max)
    out = _header(cfg)
    try:
        dec = ch.decompose(chi, cfg.deg_max)
    except ch.DecompositionError as exc:
        out["error"] = str(exc)
        return out, 1
    out["decomposition"] = {partition_key(D, cfg.n): k for D, k in sorted(dec.multiplicities.items())}
    out["deg_reliable"] = dec.deg_reliable
    out["remainder_zero"] = dec.remainder.is_zero()
    return out, 0 if dec.remainder.is_zero() else 1


def _check_json(results) -> dict:
    return {name: {"status": r.status, "details": r.details} for name, r in results.items()}


def report_json(rep: VerificationReport, cfg: RunConfig) -> dict:
    m, n, deg_max = rep.instance
    out = {"schema_version": SCHEMA_VERSION, "instance": {"m": m, "n": n, "deg_max": deg_max},
           "arithmetic": cfg.arithmetic_mode,
           "dims": rep.b_character.total_series()[1:],
           "decomposition": ({partition_key(D, n): k for D, k in
                              sorted(rep.decomposition.multiplicities.items())}
                             if rep.decomposition is not None else None),
           "bound": rep.bound_value,
           "checks": _check_json(rep.lemma_results),
           "status": "pass" if rep.ok else "fail"}
    return out


def cmd_verify(cfg: RunConfig, suite: str | None, lemma: str | None) -> tuple[dict, int]:
    if lemma is not None:
        n_list = (cfg.n,) if cfg.n is not None else (2, 3, 4)
        m_list = tuple(range(2, (cfg.m or 5) + 1))
        results = verify_lemmas(n_list, m_list, seed=cfg.seed, only=lemma)
        if not results:
            raise ConfigError(f"unknown suite {lemma!r}; expected 3.1 .. 3.5 or a suite name")
        failed = [k for k, r in results.items() if r.failed]
        out = {"schema_version": SCHEMA_VERSION, "lemmas": _check_json(results),
               "failed": failed, "status": "fail" if failed else "pass"}
        return out, 1 if failed else 0

    if suite is not None:
        if suite != "default":
            raise ConfigError(f"unknown suite {suite!r}")
        reports = [report_json(verify_instance(m, n, d, cfg.modulus, cfg.resource_cap), cfg)
                   for m, n, d in DEFAULT_INSTANCES]
        lemmas = verify_lemmas(seed=cfg.seed)
        failed = [f"{r['instance']['m']},{r['instance']['n']}:{k}" for r in reports
                  for k, c in r["checks"].items() if c["status"] == "fail"]
        failed += [k for k, r in lemmas.items() if r.failed]
        out = {"schema_version": SCHEMA_VERSION, "suite": suite, "arithmetic": cfg.arithmetic_mode,
               "reports": reports, "lemmas": _check_json(lemmas),
               "failed": failed, "status": "fail" if failed else "pass"}
        return out, 1 if failed else 0

    _require(cfg, "m", "n")
    if cfg.deg_max is None:
        defaults = {(m, n): d for m, n, d in DEFAULT_INSTANCES}
        if (cfg.m, cfg.n) not in defaults:
            raise ConfigError("--deg-max is required outside the default instance set")
        cfg.deg_max = defaults[(cfg.m, cfg.n)]
    rep = verify_instance(cfg.m, cfg.n, cfg.deg_max, cfg.modulus, cfg.resource_cap)
    out = report_json(rep, cfg)
    return out, 0 if rep.ok else 1


def cmd_fixtures() -> dict:
    """Golden values from the dense oracle (rational arithmetic only)."""
    from . import oracle

    lcs = {}
    for n, m_max, deg_max in ((2, 4, 9), (3, 3, 7)):
        log.info("oracle: lower central series for n=%d up to degree %d", n, deg_max)
        dims = oracle.lcs_dims(n, m_max, deg_max)
        lcs[str(n)] = {"m_max": m_max, "deg_max": deg_max,
                       "L": {str(m): v for m, v in dims.items()}}
    z = {}
    for n, deg_max in ((1, 8), (2, 8), (3, 5)):
        log.info("oracle: central subspace for n=%d up to degree %d", n, deg_max)
        z[str(n)] = {"deg_max": deg_max, "Z": oracle.z_dims(n, deg_max),
                     "Bbar1": oracle.bbar1_dims(n, deg_max)}
    return {"schema_version": SCHEMA_VERSION, "generator": "lcsq.oracle (dense, FLINT)",
            "lcs": lcs, "central": z}


def _emit(payload: dict, fmt: str, out: Path | None) -> None:
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if "dims" in payload:
            writer.writerow(["degree", "dim"])
            for deg, v in enumerate(payload["dims"], start=1):
                writer.writerow([deg, v])
        elif "decomposition" in payload and payload["decomposition"] is not None:
            writer.writerow(["partition", "multiplicity"])
            for k, v in payload["decomposition"].items():
                writer.writerow([k, v])
        else:
            writer.writerow(["check", "status"])
            for k, v in payload.get("checks", payload.get("lemmas", {})).items():
                writer.writerow([k, v["status"]])
        text = buf.getvalue()
    else:
        if "dims" in payload and "checks" not in payload:
            text = ", ".join(str(v) for v in payload["dims"]) + "\n"
        elif "decomposition" in payload and "checks" not in payload:
            text = json.dumps(payload["decomposition"]) + "\n"
        else:
            lines = [f"status: {payload.get('status')}"]
            for k in payload.get("failed", []):
                lines.append(f"FAILED {k}")
            text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcsq",
                                description="Lower central series quotients of free algebras")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_instance=True):
        sp.add_argument("--m", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--deg-max", type=int)
        sp.add_argument("--mode", choices=["rational", "prime"], default="rational")
        sp.add_argument("--prime", type=int, default=DEFAULT_PRIME)
        sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--resource-cap", type=int, default=None)
        sp.add_argument("--out", type=Path, default=None)
        sp.add_argument("-v", "--verbose", action="store_true")

    for name in ("dims", "decompose"):
        sp = sub.add_parser(name)
        common(sp)
        sp.add_argument("--reduced", action="store_true",
                        help="with --m 1, use B_1 modulo the central subspace Z")
    sp = sub.add_parser("verify")
    common(sp)
    sp.add_argument("--suite")
    sp.add_argument("--lemma")
    sp = sub.add_parser("fixtures")
    sp.add_argument("--out", type=Path, default=None)
    sp.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "fixtures":
            _emit(cmd_fixtures(), "json", args.out)
            return 0
        cfg = RunConfig(args.command, args.m, args.n, args.deg_max,
                        None if args.mode == "rational" else args.prime,
                        args.format, args.seed, resource_cap(args.resource_cap))
        if cfg.n is not None and cfg.n < 1 or cfg.m is not None and cfg.m < 1:
            raise ConfigError("--m and --n must be positive")
        if args.command == "dims":
            payload, code = cmd_dims(cfg, args.reduced)
        elif args.command == "decompose":
            payload, code = cmd_decompose(cfg, args.reduced)
        else:
            payload, code = cmd_verify(cfg, args.suite, args.lemma)
    except (ResourceLimitError, ConfigError) as exc:
        print(f"lcsq: {exc}", file=sys.stderr)
        return 2
    _emit(payload, cfg.output_format, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
