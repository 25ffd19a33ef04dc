"""Command line entry point.

Census TSV columns, in order: n, m, mu, kostka, classes_constructed,
classes_bruteforce, agree.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from . import __version__
from . import construct as co
from . import crystal as cr
from . import oracle as orc
from . import verify as vf
from .example import expected_values, run_example
from .stratum import SuperbasicData, normalize_mu

SCHEMA_ID = "crystal-sm/report/v1"
CENSUS_COLUMNS = ("n", "m", "mu", "kostka", "classes_constructed", "classes_bruteforce", "agree")
DEFAULT_MAX_BOXES = 16

EXIT_OK, EXIT_CHECK, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    m: Optional[int] = None
    mu: Optional[tuple[int, ...]] = None
    mu_input: Optional[tuple[int, ...]] = None
    shift: int = 0
    m_input: Optional[int] = None
    fmt: str = "json"
    out: Optional[str] = None
    max_boxes: int = DEFAULT_MAX_BOXES
    max_factorial: int = orc.MAX_FACTORIAL
    seed: int = 0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def data(self) -> SuperbasicData:
        return SuperbasicData(self.n, self.m)

    def echo(self) -> dict:
        out: dict[str, Any] = {"n": self.n, "m": self.m}
        if self.mu is not None:
            out.update(mu=list(self.mu), mu_input=list(self.mu_input), m_input=self.m_input, shift=self.shift)
        return out


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"expected a comma separated integer list, got {text!r}") from exc


def _mu_arg(text: str) -> tuple[int, ...]:
    try:
        return _int_list(text)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _overridden() -> bool:
    return bool(os.environ.get(orc.SCALE_ENV))


def _check_single(cfg: RunConfig) -> None:
    """Validate ``n, m, mu`` and apply the central shift so that ``mu(n) = 0``."""
    if cfg.n is None or cfg.m is None or cfg.mu_input is None:
        raise ConfigError(f"{cfg.command} needs --n, --m and --mu")
    n, m, mu = cfg.n, cfg.m, cfg.mu_input
    if n < 2:
        raise ConfigError(f"n must be at least 2, got {n}")
    if math.gcd(m, n) != 1:
        raise ConfigError(f"gcd(m, n) must be 1, got m={m}, n={n}")
    if len(mu) != n:
        raise ConfigError(f"mu has {len(mu)} entries, expected n={n}")
    if any(a < b for a, b in zip(mu, mu[1:])):
        raise ConfigError(f"mu must be weakly decreasing: {list(mu)}")
    if sum(mu) != m:
        raise ConfigError(f"sum(mu) = {sum(mu)} must equal m = {m}")
    norm, c = normalize_mu(mu)
    if norm[0] == 0:
        raise ConfigError("mu is central; the construction needs mu != 0 after normalization")
    boxes = sum(norm)
    if boxes > cfg.max_boxes and not _overridden():
        raise ConfigError(f"mu has {boxes} boxes, above --max-boxes {cfg.max_boxes} (set {orc.SCALE_ENV}=1 to lift)")
    cfg.mu, cfg.shift, cfg.m_input, cfg.m = norm, c, m, m - n * c


# -- commands ------------------------------------------------------------------


def cmd_example(cfg: RunConfig) -> tuple[dict, int]:
    expected = None
    fixture = cfg.extra.get("fixture")
    if fixture:
        try:
            with open(fixture) as fh:
                patch = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read fixture {fixture}: {exc}") from exc
        expected = expected_values()
        unknown = sorted(set(patch) - set(expected))
        if unknown:
            raise ConfigError(f"fixture has unknown keys: {unknown}")
        expected.update(patch)
    report = run_example(expected)
    return report, EXIT_OK if report["status"] == "PASS" else EXIT_CHECK


def cmd_construct(cfg: RunConfig) -> tuple[dict, int]:
    _check_single(cfg)
    data = cfg.data
    elems = vf.lambda_b_elements(cfg.mu, data)
    reports = [co.construct_all(b, data).to_json() for b in elems]
    return {"count": len(reports), "reports": reports}, EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    _check_single(cfg)
    data = cfg.data
    log = vf.verify_case(
        cfg.mu, data, seed=cfg.seed, bruteforce=not cfg.extra.get("no_bruteforce"), max_factorial=cfg.max_factorial
    )
    summary = log.summary()
    summary["crystal_elements"] = len(vf.lambda_b_elements(cfg.mu, data))
    return summary, EXIT_OK if log.ok else EXIT_CHECK


def cmd_census(cfg: RunConfig) -> tuple[dict, int]:
    ns = cfg.extra["n_values"]
    if not ns or min(ns) < 2:
        raise ConfigError(f"--n needs values >= 2, got {list(ns)}")
    m_max = cfg.extra["m_max"]
    if m_max < 1:
        raise ConfigError(f"--m-max must be positive, got {m_max}")
    cases = vf.grid(ns, m_max)
    if cfg.m is not None:
        cases = [c for c in cases if c[1] == cfg.m]
    big = [c for c in cases if sum(c[2]) > cfg.max_boxes]
    if big and not _overridden():
        raise ConfigError(f"{len(big)} cases exceed --max-boxes {cfg.max_boxes} (set {orc.SCALE_ENV}=1 to lift)")
    rows = [vf.census_row(n, m, mu) for n, m, mu in cases]
    result = {
        "columns": list(CENSUS_COLUMNS),
        "rows": [
            {
                "n": r.n, "m": r.m, "mu": list(r.mu), "kostka": r.kostka,
                "classes_constructed": r.classes_constructed, "classes_bruteforce": r.classes_bruteforce,
                "agree": r.agree, "notes": r.notes,
            }
            for r in rows
        ],
    }
    return result, EXIT_OK if all(r.agree for r in rows) else EXIT_CHECK


def cmd_crystal(cfg: RunConfig) -> tuple[dict, int]:
    _check_single(cfg)
    return cr.generate_crystal(cfg.mu).to_json(), EXIT_OK


COMMANDS: dict[str, Callable[[RunConfig], tuple[dict, int]]] = {
    "example": cmd_example,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "census": cmd_census,
    "crystal": cmd_crystal,
}


# -- rendering -----------------------------------------------------------------


def _tsv(command: str, result: dict) -> str:
    lines: list[str] = []
    if command == "census":
        lines.append("\t".join(CENSUS_COLUMNS))
        for r in result["rows"]:
            mu = ",".join(map(str, r["mu"]))
            vals = [r["n"], r["m"], mu, r["kostka"], r["classes_constructed"], r["classes_bruteforce"]]
            lines.append("\t".join(map(str, vals)) + "\t" + str(r["agree"]).lower())
    elif command == "construct":
        lines.append("b\tw_of_b\teta_class")
        for r in result["reports"]:
            b = str(cr.Tableau.from_json(r["b"], r["n"]))
            eta = ";".join(",".join(map(str, x)) for x in r["eta_class"])
            lines.append(f"{b}\t{','.join(map(str, r['w_of_b']))}\t{eta}")
    elif command == "verify":
        lines.append("check\tpassed\tfailed")
        for name, c in result["checks"].items():
            lines.append(f"{name}\t{c['passed']}\t{c['failed']}")
    elif command == "crystal":
        lines.append("from\tto\ti")
        lines.extend(f"{e['from']}\t{e['to']}\t{e['i']}" for e in result["edges"])
    else:
        lines.append("key\tstatus")
        bad = {d["key"] for d in result["diffs"]}
        lines.extend(f"{k}\t{'FAIL' if k in bad else 'PASS'}" for k in result["values"])
    return "\n".join(lines) + "\n"


def _pretty(command: str, cfg: RunConfig, result: dict) -> str:
    out: list[str] = []
    if cfg.mu is not None and cfg.shift:
        out.append(f"mu shifted by {cfg.shift}: {list(cfg.mu_input)} -> {list(cfg.mu)}, m {cfg.m_input} -> {cfg.m}")
    if command == "example":
        out.append(f"example n=5 m=12: {result['status']}")
        for d in result["diffs"]:
            out.append(f"  {d['key']}: expected {d['expected']}, got {d['actual']}")
    elif command == "construct":
        for r in result["reports"]:
            b = cr.Tableau.from_json(r["b"], r["n"])
            out.append(f"b = {b}  b_op = {cr.Tableau.from_json(r['b_op'], r['n'])}  w(b) = {r['w_of_b']}")
            for key, lams in r["xi"].items():
                out.append(f"  u = [{key}]  xi = {lams}")
            out.append(f"  eta class = {r['eta_class']}")
    elif command == "verify":
        out.append(f"{result['passed']} passed, {result['failed']} failed, {result['crystal_elements']} crystal elements")
        out.extend(f"  FAIL {msg}" for msg in result["messages"])
    elif command == "census":
        for r in result["rows"]:
            flag = "ok" if r["agree"] else "MISMATCH"
            out.append(
                f"n={r['n']} m={r['m']} mu={r['mu']}: kostka={r['kostka']} "
                f"constructed={r['classes_constructed']} bruteforce={r['classes_bruteforce']} {flag}"
            )
    else:
        out.append(f"B_mu for mu={result['mu']}: {len(result['nodes'])} elements, {len(result['edges'])} edges")
        for node in result["nodes"]:
            out.append(f"  {node['id']}: {cr.Tableau.from_json(node, result['n'])} wt={node['wt']}")
    return "\n".join(out) + "\n"


def render(cfg: RunConfig, result: dict) -> str:
    if cfg.fmt == "tsv":
        return _tsv(cfg.command, result)
    if cfg.fmt == "pretty":
        return _pretty(cfg.command, cfg, result)
    envelope = {"schema": SCHEMA_ID, "command": cfg.command, "config": cfg.echo(), "result": result}
    return json.dumps(envelope, indent=2) + "\n"


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank n of GL_n")
    common.add_argument("--m", type=int, help="slope numerator m, coprime to n")
    common.add_argument("--mu", type=_mu_arg, help="dominant cocharacter as a comma list, e.g. 4,3,3,2,0")
    common.add_argument("--format", dest="fmt", choices=("json", "tsv", "pretty"), default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--max-boxes", type=int, default=DEFAULT_MAX_BOXES, help="largest |mu| accepted")
    common.add_argument("--max-factorial", type=int, default=orc.MAX_FACTORIAL, help="largest n! for full scans")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")

    parser = argparse.ArgumentParser(
        prog="crystal-sm",
        description="Crystal elements and top semi-module tuples for superbasic GL_n.",
        epilog=(
            "Census TSV columns: " + ", ".join(CENSUS_COLUMNS) + ". "
            "Exit codes: 0 pass, 1 check failure, 2 configuration error. "
            f"Set {orc.SCALE_ENV}=1 to lift scale guards."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("example", parents=[common], help="recompute the n=5, m=12 worked case and diff it")
    ex.add_argument("--fixture", help="JSON object overriding expected values (negative controls)")
    sub.add_parser("construct", parents=[common], help="construction report for every b in B_mu(lambda_b)")
    ver = sub.add_parser("verify", parents=[common], help="run every invariant for one case")
    ver.add_argument("--no-bruteforce", action="store_true", help="skip the exhaustive search oracle")
    cen = sub.add_parser(
        "census",
        parents=[common],
        help="compare Kostka numbers with constructed and searched class counts",
        description=(
            "Census over coprime (n, m) with m <= --m-max and every partition of m with at most n parts. "
            "Here --n takes a comma list and --m restricts to one m. "
            "TSV columns: " + ", ".join(CENSUS_COLUMNS) + "."
        ),
    )
    cen.add_argument("--m-max", type=int, default=7)
    sub.add_parser("crystal", parents=[common], help="export the crystal graph of B_mu")
    return parser


def _config(args: argparse.Namespace, raw_n: Optional[str]) -> RunConfig:
    cfg = RunConfig(
        command=args.command, m=args.m, mu_input=args.mu, fmt=args.fmt, out=args.out,
        max_boxes=args.max_boxes, max_factorial=args.max_factorial, seed=args.seed,
    )
    if args.command == "census":
        cfg.extra["n_values"] = _int_list(raw_n) if raw_n else (2, 3, 4)
        cfg.extra["m_max"] = args.m_max
    else:
        cfg.n = args.n
    cfg.extra["fixture"] = getattr(args, "fixture", None)
    cfg.extra["no_bruteforce"] = getattr(args, "no_bruteforce", False)
    return cfg


def _split_census_n(argv: list[str]) -> tuple[list[str], Optional[str]]:
    """``census --n 2,3`` takes a list; pull it out before argparse types it as an int."""
    if not argv or argv[0] != "census":
        return argv, None
    out, raw = [], None
    it = iter(argv)
    for tok in it:
        if tok == "--n":
            raw = next(it, "")
        elif tok.startswith("--n="):
            raw = tok[4:]
        else:
            out.append(tok)
    return out, raw


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv, raw_n = _split_census_n(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = _config(args, raw_n)
        result, code = COMMANDS[args.command](cfg)
    except (ConfigError, orc.ScaleGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = render(cfg, result)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
