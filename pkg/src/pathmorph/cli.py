"""Command line front end: ``pathmorph <subcommand> ...``.

Settings are layered: built-in defaults, then a ``key=value`` file given
by ``--config``, then ``PATHMORPH_*`` environment variables, then flags.
Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields, replace
from typing import List, Optional, TextIO

from . import bijections, families, render, verify
from .errors import PathError
from .families import SetId
from .paths import parse, read_jsonl, serialize, to_json

ENV_PREFIX = "PATHMORPH_"
FORMATS = ("tuple", "jsonl", "json")


@dataclass(frozen=True)
class Config:
    exhaustive_limit: int = families.DEFAULT_EXHAUSTIVE_LIMIT
    output_format: str = "tuple"
    counterexample_cap: int = verify.DEFAULT_COUNTEREXAMPLE_CAP
    workers: int = 1

    def __post_init__(self):
        if self.exhaustive_limit < 1:
            raise ValueError("exhaustive_limit must be >= 1")
        if self.counterexample_cap < 1:
            raise ValueError("counterexample_cap must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.output_format not in FORMATS:
            raise ValueError(f"output_format must be one of {', '.join(FORMATS)}")


def _coerce(values: dict) -> dict:
    types = {f.name: f.type for f in fields(Config)}
    out = {}
    for key, raw in values.items():
        if key not in types:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = int(raw) if types[key] in (int, "int") else str(raw).strip()
    return out


def read_config_file(path: str) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def load_config(config_path: Optional[str] = None, environ=None) -> Config:
    environ = os.environ if environ is None else environ
    values = {}
    if config_path:
        values.update(read_config_file(config_path))
    for f in fields(Config):
        key = ENV_PREFIX + f.name.upper()
        if key in environ:
            values[f.name] = environ[key]
    return Config(**_coerce(values))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathmorph",
        description="Bijections between families of simple random walk paths.")
    parser.add_argument("--config", help="key=value settings file")
    parser.add_argument("--workers", type=int, help="worker processes for sweeps")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def common(p, fmt_choices=("tuple", "jsonl")):
        p.add_argument("--format", choices=fmt_choices, dest="fmt")
        p.add_argument("--limit-override", action="store_true",
                       help="allow sweeps above the exhaustive limit")

    p = sub.add_parser("enumerate", help="list the members of a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, dest="family")
    p.add_argument("--method", choices=("filter", "direct"), default="filter")
    common(p)

    p = sub.add_parser("count", help="size of a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, dest="family")
    p.add_argument("--method", choices=("formula", "enumerate", "recursion"),
                   default="formula")
    p.add_argument("--limit-override", action="store_true")

    p = sub.add_parser("sample", help="uniform seeded draws from a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, dest="family")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--format", choices=("tuple", "jsonl"), dest="fmt")

    p = sub.add_parser("map", help="apply a bijection to one path or a JSON-lines batch")
    p.add_argument("--bijection", required=True, choices=sorted(bijections.MAPS))
    p.add_argument("--path", help='path tuple such as "(0,1,0)"; omit to read stdin')
    p.add_argument("--format", choices=("tuple", "jsonl"), dest="fmt")

    p = sub.add_parser("verify", help="exhaustive checks for n up to --n")
    p.add_argument("--n", type=int, required=True,
                   help="largest n to sweep (n_max for the catalan check)")
    p.add_argument("--from", type=int, default=1, dest="n_from",
                   help="smallest n to sweep (default 1)")
    p.add_argument("--check", default="all",
                   choices=("bijection1", "bijection2", "counts", "catalan",
                            "theorems", "all"))
    p.add_argument("--format", choices=("text", "json"), dest="fmt")
    p.add_argument("--limit-override", action="store_true")

    p = sub.add_parser("render", help="write an SVG gallery of a bijection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bijection", required=True, choices=sorted(bijections.MAPS))
    p.add_argument("--out", required=True)
    p.add_argument("--columns", type=int)
    p.add_argument("--cell", help="cell size as WxH pixels")
    p.add_argument("--limit-override", action="store_true")
    return parser


def _emit_paths(paths, fmt: str, out: TextIO) -> None:
    for p in paths:
        out.write((to_json(p) if fmt == "jsonl" else serialize(p)) + "\n")


def _path_format(args, cfg: Config) -> str:
    if args.fmt:
        return args.fmt
    return "jsonl" if cfg.output_format in ("jsonl", "json") else "tuple"


def cmd_enumerate(args, cfg, out):
    paths = families.enumerate_paths(
        args.n, SetId.parse(args.family), method=args.method,
        limit=cfg.exhaustive_limit, override=args.limit_override, workers=cfg.workers)
    _emit_paths(paths, _path_format(args, cfg), out)
    return 0


def cmd_count(args, cfg, out):
    s = SetId.parse(args.family)
    if args.method == "formula":
        value = families.count_formula(args.n, s)
    elif args.method == "recursion":
        value = families.count_by_recursion(args.n, s)
    else:
        value = families.count_by_enumeration(
            args.n, s, limit=cfg.exhaustive_limit, override=args.limit_override,
            workers=cfg.workers)
    out.write(f"{value}\n")
    return 0


def cmd_sample(args, cfg, out):
    if args.seed < 0:
        raise ValueError("seed must be a non-negative integer")
    draws = families.sample_many(args.n, SetId.parse(args.family), args.seed, args.count)
    _emit_paths(draws, _path_format(args, cfg), out)
    return 0


def cmd_map(args, cfg, out, stdin):
    info = bijections.get_map(args.bijection)
    if args.path is not None:
        q = info.forward(parse(args.path))
        _emit_paths([q], _path_format(args, cfg), out)
        return 0
    for p in read_jsonl(stdin):
        q = info.forward(p)
        record = {"input": list(p.positions), "output": list(q.positions),
                  "markers": bijections.markers(info.name, p)}
        out.write(json.dumps(record, separators=(",", ":")) + "\n")
    return 0


def _verify_reports(args, cfg):
    kw = dict(limit=cfg.exhaustive_limit, override=args.limit_override,
              cap=cfg.counterexample_cap)
    wanted = (("bijection1", "bijection2", "counts", "theorems", "catalan")
              if args.check == "all" else (args.check,))
    if args.n < 1 or args.n_from < 1:
        raise ValueError("--n and --from must be >= 1")
    for check in wanted:
        if check == "catalan":
            yield verify.check_catalan_identity(max(args.n, 2), cap=cfg.counterexample_cap)
            continue
        for n in range(args.n_from, args.n + 1):
            if check == "bijection1":
                yield verify.check_bijection(n, "phi1", workers=cfg.workers, **kw)
                yield verify.check_bijection(n, "phi1full", workers=cfg.workers, **kw)
            elif check == "bijection2":
                if n >= 2:
                    yield verify.check_bijection(n, "phi2", workers=cfg.workers, **kw)
            elif check == "counts":
                yield verify.check_counts(n, workers=cfg.workers, **kw)
            else:
                yield verify.check_theorem_invariants(n, **kw)


def cmd_verify(args, cfg, out):
    fmt = args.fmt or ("json" if cfg.output_format == "json" else "text")
    reports = list(_verify_reports(args, cfg))
    ok = all(r.passed for r in reports)
    if fmt == "json":
        out.write(json.dumps({"passed": ok, "reports": [r.as_dict() for r in reports]},
                             indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        out.write(("all checks passed" if ok else "SOME CHECKS FAILED") + "\n")
    return 0 if ok else 1


def cmd_render(args, cfg, out):
    spec = render.RenderSpec()
    if args.columns is not None:
        spec = replace(spec, columns=args.columns)
    if args.cell:
        try:
            w, h = (int(v) for v in args.cell.lower().split("x"))
        except ValueError:
            raise ValueError(f"--cell expects WxH, got {args.cell!r}") from None
        spec = replace(spec, cell_width=w, cell_height=h)
    doc = render.render_gallery(args.n, args.bijection, spec,
                                limit=cfg.exhaustive_limit, override=args.limit_override)
    with open(args.out, "w", newline="\n") as fh:
        fh.write(doc)
    return 0


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
         stderr: Optional[TextIO] = None, stdin: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.command:
        parser.print_usage(err)
        return 2
    try:
        cfg = load_config(args.config)
        if args.workers is not None:
            cfg = replace(cfg, workers=args.workers)
        if args.command == "map":
            return cmd_map(args, cfg, out, stdin or sys.stdin)
        handler = {"enumerate": cmd_enumerate, "count": cmd_count,
                   "sample": cmd_sample, "verify": cmd_verify,
                   "render": cmd_render}[args.command]
        return handler(args, cfg, out)
    except (PathError, ValueError, OSError) as exc:
        err.write(f"pathmorph: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
