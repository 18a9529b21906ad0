"""Command-line front end: ``braidhom compute | verify | nf``.

Exit codes: 0 success, 1 a verification assertion failed, 2 usage or
configuration error, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import config
from .braids import WordError, format_normal_form, garside_normal_form, parse_word
from .coxeter import CoxeterSystem
from .linalg import ChainComplexError, annihilator_exponent, homology
from .representations import (
    RepresentationError,
    burau_minus1,
    load_representation,
    sign_cover_rep,
    symplectic_rep,
    trivial_rep,
)
from .salvetti import ResourceLimitError, check_rank_limit, load_or_build, specialize
from .suites import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    type: str = "A"
    n: int = 3
    coefficients: str = "trivial"
    max_degree: int | None = None
    format: str = "json"
    seed: int = 0
    cache_dir: str | None = None
    max_rank: int = config.MAX_CHAIN_RANK

    def system(self) -> CoxeterSystem:
        if self.n < 1:
            raise ConfigError("n must be positive")
        if self.type == "A":
            return CoxeterSystem("A", self.n - 1)
        if self.type == "B":
            return CoxeterSystem("B", self.n)
        raise ConfigError(f"unknown type {self.type!r}")

    def representation(self):
        system = self.system()
        c = self.coefficients
        if c in ("symplectic", "burau-1"):
            if self.type != "A" or self.n < 3 or self.n % 2 == 0:
                raise ConfigError(f"{c} coefficients need type A with odd n >= 3")
            return symplectic_rep(self.n) if c == "symplectic" else burau_minus1(self.n)
        if c == "trivial":
            return trivial_rep(system)
        if c == "sign-cover":
            if self.type != "B":
                raise ConfigError("sign-cover coefficients need type B")
            return sign_cover_rep(self.n)
        if c.startswith("custom:"):
            return load_representation(c[len("custom:"):], system)
        raise ConfigError(f"unknown coefficients {c!r}")


def _exponent(h):
    e = annihilator_exponent(h)
    return None if h.free_rank else e


def cmd_compute(cfg: RunConfig) -> dict:
    system = cfg.system()
    rep = cfg.representation()
    cx = load_or_build(system, cfg.cache_dir)
    check_rank_limit(cx, rep.dimension, cfg.max_rank)
    top = cx.top if cfg.max_degree is None else min(cfg.max_degree, cx.top)
    if top < 0:
        raise ConfigError("max degree must be non-negative")
    groups = homology(specialize(cx, rep, cfg.max_rank), range(top + 1))
    return {
        "type": cfg.type,
        "n": cfg.n,
        "coefficients": cfg.coefficients,
        "homology": [{"degree": h.degree, "rank": h.free_rank, "torsion": sorted(h.torsion)} for h in groups],
        "annihilator_exponent_per_degree": {str(h.degree): _exponent(h) for h in groups},
        "engine_version": config.ENGINE_VERSION,
        "sign_convention": list(config.SIGN_CONVENTION),
    }


def cmd_verify(cfg: RunConfig, suite: str) -> tuple[dict, int]:
    if suite not in SUITES:
        raise ConfigError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite == "integrity":
        report = SUITES[suite](cfg.n, seed=cfg.seed, cache_dir=cfg.cache_dir)
    else:
        try:
            report = SUITES[suite](cfg.n, cfg.n if cfg.max_degree is None else cfg.max_degree,
                                   cache_dir=cfg.cache_dir)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    return report.to_dict(), EXIT_OK if report.passed else EXIT_FAIL


def cmd_nf(text: str, cfg: RunConfig) -> str:
    system = cfg.system()
    return format_normal_form(system, garside_normal_form(parse_word(text, system)))


# -- output ---------------------------------------------------------------


def _csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "homology" in doc:
        w.writerow(["degree", "rank", "torsion"])
        for rec in doc["homology"]:
            w.writerow([rec["degree"], rec["rank"], "+".join(map(str, rec["torsion"]))])
    else:
        w.writerow(["assertion", "passed", "detail"])
        for v in doc["verdicts"]:
            w.writerow([v["assertion"], v["passed"], v["detail"]])
    return buf.getvalue()


def _group(rec: dict) -> str:
    parts = [f"Z/{d}" for d in rec["torsion"]]
    if rec["rank"]:
        parts.insert(0, "Z" if rec["rank"] == 1 else f"Z^{rec['rank']}")
    return " + ".join(parts) or "0"


def _markdown(doc: dict) -> str:
    if "homology" in doc:
        lines = [f"# H_*(type {doc['type']}, n={doc['n']}; {doc['coefficients']})", "",
                 "| degree | group | exponent |", "|---|---|---|"]
        for rec in doc["homology"]:
            e = doc["annihilator_exponent_per_degree"][str(rec["degree"])]
            lines.append(f"| {rec['degree']} | {_group(rec)} | {'inf' if e is None else e} |")
    else:
        verdict = "PASS" if doc["passed"] else "FAIL"
        lines = [f"# suite {doc['suite']}: {verdict}", "", f"_{doc['header']}_", "",
                 "| assertion | result | detail |", "|---|---|---|"]
        for v in doc["verdicts"]:
            lines.append(f"| {v['assertion']} | {'pass' if v['passed'] else 'FAIL'} | {v['detail']} |")
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _csv(doc)
    if fmt == "md":
        return _markdown(doc)
    raise ConfigError(f"unknown format {fmt!r}")


# -- argument parsing -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidhom", description="Twisted homology of braid and type-B Artin groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", choices=("A", "B"), default="A")
        p.add_argument("--n", type=int, default=3, help="strands for type A, rank for type B")
        p.add_argument("--format", choices=("json", "csv", "md"), default="json")
        p.add_argument("--cache-dir", default=None, help=f"complex cache (default: ${config.CACHE_ENV_VAR})")

    p = sub.add_parser("compute", help="homology table")
    common(p)
    p.add_argument("--coeff", default="trivial",
                   help="trivial | symplectic | burau-1 | sign-cover | custom:PATH")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--max-rank", type=int, default=config.MAX_CHAIN_RANK, help="chain-group rank ceiling")

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("suite", help=" | ".join(SUITES))
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--max-rank", type=int, default=4, help="largest rank for the integrity suite")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("nf", help="Garside normal form of a word")
    p.add_argument("word", help='signed generator indices, e.g. "1 2 -1"')
    p.add_argument("--type", choices=("A", "B"), default="A")
    p.add_argument("--n", type=int, default=3)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "nf":
            print(cmd_nf(args.word, RunConfig("nf", args.type, args.n)))
            return EXIT_OK
        if args.command == "compute":
            cfg = RunConfig("compute", args.type, args.n, args.coeff, args.max_degree, args.format,
                            cache_dir=args.cache_dir, max_rank=args.max_rank)
            sys.stdout.write(render(cmd_compute(cfg), cfg.format))
            return EXIT_OK
        n = args.max_rank if args.suite == "integrity" else args.n
        cfg = RunConfig("verify", args.type, n, max_degree=args.max_degree, format=args.format,
                        seed=args.seed, cache_dir=args.cache_dir)
        doc, code = cmd_verify(cfg, args.suite)
        sys.stdout.write(render(doc, cfg.format))
        return code
    except (ConfigError, WordError, RepresentationError, ResourceLimitError) as exc:
        print(f"braidhom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ChainComplexError, AssertionError) as exc:
        print(f"braidhom: internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # anything unforeseen is a breach, never silent
        print(f"braidhom: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
