"""Command line front end: ``berkdisc <subcommand> --in fixture.json [...]``.

Reports go to stdout as JSON (``polygon`` and ``profile`` can also draw).
Exit codes: 0 success, 1 domain error (reported as ``{"error": ...}``),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .disc_morphism import DiscPoint
from .errors import BerkdiscError, BranchedFiber, MissingFibers, UsageError
from .fiber import check_mult_sum, count_function, preimage_points
from .io import load_fixture
from .polygon import Domain, polygon_of
from .pushforward import check_main_theorem_disc, multiradius_bruteforce, multiradius_from_count
from .radiality import DEFAULT_SEED, radial_certificate
from .reduction import residual_report
from .render import render_ascii, render_svg
from .valued_field import element_from_json, format_rational, parse_rational

SUBCOMMANDS = ("polygon", "profile", "radial", "fiber", "nfunction", "multiradius", "reduce", "check")
DRAWABLE = ("polygon", "profile")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input: str
    at: Optional[str] = None
    lam: Optional[Fraction] = None
    seed: int = DEFAULT_SEED
    fmt: str = "json"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="berkdisc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    helps = {
        "polygon": "valuation polygon of f, or the local polygon with --at",
        "profile": "local profile at --at (default 0), optionally read at --lambda",
        "radial": "radiality certificate or refutation",
        "fiber": "preimages over zeta_{c, lambda} for each fiber (needs --lambda)",
        "nfunction": "count function N_c of each fiber",
        "multiradius": "multiradius of the pushforward at each fiber center",
        "reduce": "residual data at the Gauss point",
        "check": "run the consistency checks on a fixture",
    }
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("--in", dest="input", required=True, help="fixture JSON file")
        sp.add_argument("--at", help="center: JSON element like '[[\"1/1\",1]]' or a rational")
        sp.add_argument("--lambda", dest="lam", help="target lambda, e.g. 3/2")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--format", dest="fmt", choices=("json", "ascii", "svg"), default="json")
    return ap


def parse_args(argv) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    lam = None
    if ns.lam is not None:
        try:
            lam = parse_rational(ns.lam)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --lambda {ns.lam!r}") from exc
        if lam <= 0:
            raise UsageError("--lambda must be positive")
    if ns.fmt != "json" and ns.subcommand not in DRAWABLE:
        raise UsageError(f"--format {ns.fmt} only applies to {', '.join(DRAWABLE)}")
    if ns.subcommand == "fiber" and lam is None:
        raise UsageError("fiber needs --lambda")
    seed = ns.seed
    env = os.environ.get("BERKDISC_SEED")
    if env:
        try:
            seed = int(env)
        except ValueError as exc:
            raise UsageError(f"BERKDISC_SEED={env!r} is not an integer") from exc
    return RunConfig(ns.subcommand, ns.input, ns.at, lam, seed, ns.fmt)


def _parse_center(params, text):
    if text is None:
        return params.zero()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = text
    try:
        return element_from_json(params, data)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --at {text!r}: {exc}") from exc


def _need_fibers(fx, k=1):
    if len(fx.fibers) < k:
        raise MissingFibers(f"fixture needs at least {k} fiber(s), has {len(fx.fibers)}")


def _polygon_like(cfg, fx):
    F = fx.F
    if cfg.subcommand == "polygon" and cfg.at is None:
        P = polygon_of(F.f.valuations(), Domain.REAL)
        report = {"polygon": P.to_json(), "root_counts": {format_rational(b): P.root_count_at(b) for b in P.breaks}}
    else:
        a = _parse_center(F.params, cfg.at)
        P = F.local_polygon(a)
        report = {"center": a.to_json(), "polygon": P.to_json()}
        if cfg.subcommand == "profile" and cfg.lam is not None:
            pt = DiscPoint(a, cfg.lam)
            report.update(
                {
                    "lambda": format_rational(cfg.lam),
                    "image_lambda": format_rational(F.image_lambda(a, cfg.lam)),
                    "multiplicity": F.multiplicity(pt),
                    "restriction_degree": F.restriction_degree(pt),
                }
            )
    if cfg.fmt == "ascii":
        return render_ascii(P)
    if cfg.fmt == "svg":
        return render_svg(P)
    return report


def _roots(fx):
    return [r for fd in fx.fibers for r in fd.roots]


def _multiradius(fd, p):
    nf = count_function(fd)
    mr = multiradius_from_count(nf, fd.d)
    out = {"center": fd.center.to_json(), **mr.to_json(p)}
    try:
        bf = multiradius_bruteforce(fd)
        out["bruteforce_lambda"] = [format_rational(e) for e in bf.entries]
        out["agree"] = bf == mr
    except BranchedFiber:
        out["bruteforce_lambda"] = None
        out["agree"] = None
    return out


def execute(cfg: RunConfig):
    """Run a parsed config; returns a JSON-able report or a string."""
    fx = load_fixture(cfg.input)
    F, p = fx.F, fx.params.p
    sc = cfg.subcommand
    if sc in DRAWABLE:
        return _polygon_like(cfg, fx)
    if sc == "radial":
        return radial_certificate(F, seed=cfg.seed, extra_probes=_roots(fx)).to_json()
    if sc == "reduce":
        return residual_report(F.f).to_json()
    if sc == "fiber":
        _need_fibers(fx)
        out = []
        for fd in fx.fibers:
            rep = check_mult_sum(fd, cfg.lam)
            out.append(
                {
                    "center": fd.center.to_json(),
                    "preimages": [{"center": pt.center.to_json(), "lambda": format_rational(pt.lam)} for pt in preimage_points(fd, cfg.lam)],
                    "count": rep.count,
                    "multiplicities": list(rep.multiplicities),
                    "sum": rep.total,
                }
            )
        return {"lambda": format_rational(cfg.lam), "fibers": out}
    if sc == "nfunction":
        _need_fibers(fx)
        return {"count_functions": [{"center": fd.center.to_json(), **count_function(fd).to_json()} for fd in fx.fibers]}
    if sc == "multiradius":
        _need_fibers(fx)
        return {"multiradii": [_multiradius(fd, p) for fd in fx.fibers]}
    if sc == "check":
        _need_fibers(fx, 2)
        verdict = radial_certificate(F, seed=cfg.seed, extra_probes=_roots(fx))
        report = check_main_theorem_disc(F, fx.fibers, verdict).to_json(p)
        report["expect"] = fx.meta.get("expect")
        return report
    raise UsageError(f"unknown subcommand {sc}")


def dumps(obj, indent: int = 0, width: int = 88) -> str:
    """JSON with short containers kept on one line; output is deterministic."""
    flat = json.dumps(obj, separators=(", ", ": "))
    if len(flat) + indent <= width or not isinstance(obj, (dict, list)) or not obj:
        return flat
    pad = " " * (indent + 2)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent + 2, width)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    items = [pad + dumps(v, indent + 2, width) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"


def run(cfg: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        result = execute(cfg)
    except UsageError:
        raise
    except BerkdiscError as exc:
        stdout.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(dumps(result) + "\n")
    return 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(parse_args(argv))
    except UsageError as exc:
        sys.stderr.write(f"berkdisc: usage error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
