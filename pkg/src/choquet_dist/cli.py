"""Command-line interface.

Subcommands: validate, moments, pdf, cdf, mixture, stigler, sample.  Numeric
output uses 12 significant digits; tables go to CSV (stdout unless --out is
given), scalar summaries to JSON on stdout.  Exit status is 0 on success and
2 for input/validation problems (schema violations, non-capacities where one
is required, regularity failures, enumeration limits).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .asymptotic import (WeightFunction, alpha, beta2, mixture_approx,
                         mixture_pdf, power_weight_game)
from .capacity import (CapacityFormatError, check_capacity, load_capacity,
                       orness)
from .exponential import ExponentialChoquetDist, RegularityError
from .moments import moments_report
from .osmoments import provider_for, quantile_model_for
from .montecarlo import sample
from .uniform import UniformChoquetDist


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


@dataclass
class RunConfig:
    command: str
    law: str | None = None
    capacity: str | None = None
    grid: str | None = None  # "start:end:steps"
    dj_order: int = 2
    seed: int = 0
    n: int | None = None
    a: float | None = None
    out: str | None = None


def parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise CapacityFormatError(f"grid must look like start:end:steps, got {text!r}")
    try:
        a, b, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise CapacityFormatError(f"bad grid specification {text!r}") from None
    if steps < 2:
        raise CapacityFormatError("grid needs at least 2 steps")
    if not b > a:
        raise CapacityFormatError("grid end must exceed start")
    return a, b, steps


def _emit(lines, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        print("\n".join(lines))


def _emit_json(doc: dict, out_path=None) -> None:
    _emit([json.dumps(doc)], out_path)


def _grid_values(cfg: RunConfig) -> np.ndarray:
    a, b, steps = parse_grid(cfg.grid)
    return np.linspace(a, b, steps)


def cmd_validate(cfg: RunConfig) -> int:
    g = load_capacity(cfg.capacity)
    chk = check_capacity(g)
    if chk.is_monotone and chk.is_normalized:
        print(f"capacity ok: n={g.n}, nu(N)={_fmt(g[g.full_mask])}")
        return 0
    if not chk.is_monotone:
        s, t = chk.violating_pair
        print(f"not monotone: nu{s} > nu{t}", file=sys.stderr)
    if not chk.is_normalized:
        print(f"not normalized: nu(N) = {_fmt(g[g.full_mask])}", file=sys.stderr)
    return 2


def cmd_moments(cfg: RunConfig) -> int:
    g = load_capacity(cfg.capacity)
    provider = provider_for(cfg.law, g.n, cfg.dj_order)
    rep = moments_report(g, provider)
    _emit_json({"mean": float(_fmt(rep.mean)), "sd": float(_fmt(rep.sd))}, cfg.out)
    return 0


def _density_report(cfg: RunConfig):
    """Tabulated grid plus the moment summary, and knot locations (the pdf is
    only piecewise smooth across them under the uniform law)."""
    g = load_capacity(cfg.capacity)
    ys = _grid_values(cfg)
    knots: list[float] = []
    if cfg.law == "uniform":
        dist = UniformChoquetDist(g)
        rep = moments_report(g, provider_for("uniform", g.n))
        knots = [float(k) for k in dist.knot_values()]
    elif cfg.law == "exponential":
        dist = ExponentialChoquetDist(g)
        rep = moments_report(g, provider_for("exponential", g.n))
    else:
        raise CapacityFormatError(
            f"exact pdf/cdf is available for uniform and exponential laws, not {cfg.law!r}; "
            "see the mixture command for the normal approximation")
    rep.y, rep.pdf, rep.cdf = ys, dist.pdf(ys), dist.cdf(ys)
    return rep, knots


def cmd_pdf(cfg: RunConfig) -> int:
    rep, knots = _density_report(cfg)
    rows = ["y,pdf,cdf"]
    rows += [f"{_fmt(y)},{_fmt(p)},{_fmt(c)}"
             for y, p, c in zip(rep.y, rep.pdf, rep.cdf)]
    _emit(rows, cfg.out)
    if cfg.out:
        _emit_json({"rows": len(rep.y), "mean": float(_fmt(rep.mean)),
                    "sd": float(_fmt(rep.sd)),
                    "knots": [float(_fmt(k)) for k in knots]})
    return 0


def cmd_mixture(cfg: RunConfig) -> int:
    g = load_capacity(cfg.capacity)
    provider = provider_for(cfg.law, g.n, cfg.dj_order)
    mix = mixture_approx(g, provider)
    ys = _grid_values(cfg)
    pdf = mixture_pdf(mix, ys)
    rows = ["y,mixture_pdf"] + [f"{_fmt(y)},{_fmt(p)}" for y, p in zip(ys, pdf)]
    _emit(rows, cfg.out)
    # validity of the normal approximation cannot be checked from data; the
    # orness degree is the customary heuristic, so surface it alongside
    try:
        balance = float(_fmt(orness(g)))
    except ValueError:
        balance = None
    if cfg.out:
        _emit_json({"components": len(mix.weights), "orness": balance,
                    "note": "asymptotic validity is heuristic; orness near 0 "
                            "or 1 warns of min/max-like behavior"})
    return 0


def cmd_stigler(cfg: RunConfig) -> int:
    law = cfg.law or "uniform"
    provider = provider_for(law, cfg.n, cfg.dj_order)
    qm = quantile_model_for(law)
    J = WeightFunction.power(cfg.a)
    game = power_weight_game(cfg.n, cfg.a)
    mix = mixture_approx(game, provider)
    _emit_json({
        "alpha": float(_fmt(alpha(J, qm))),
        "beta2": float(_fmt(beta2(J, qm))),
        "component_mean": float(_fmt(mix.means[0])),
        "n_times_variance": float(_fmt(cfg.n * mix.variances[0])),
    }, cfg.out)
    return 0


def cmd_sample(cfg: RunConfig) -> int:
    g = load_capacity(cfg.capacity)
    rep = sample(g, cfg.law, cfg.n, cfg.seed)
    if cfg.out:
        _emit(["y"] + [_fmt(v) for v in rep.ecdf], cfg.out)
    print(json.dumps({
        "n_samples": rep.n_samples,
        "mean": float(_fmt(rep.mean)),
        "sd": float(_fmt(rep.sd)),
        "standard_error": float(_fmt(rep.standard_error)),
        "seed": cfg.seed,
    }))
    return 0


def cmd_orness(cfg: RunConfig) -> int:
    g = load_capacity(cfg.capacity)
    _emit_json({"orness": float(_fmt(orness(g)))})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="choquet-dist",
                                description="Distribution and moments of discrete "
                                            "Choquet integrals of i.i.d. samples.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_capacity(sp):
        sp.add_argument("--capacity", required=True, help="capacity JSON file")

    def add_law(sp, required=True):
        sp.add_argument("--law", choices=("uniform", "exponential", "normal"),
                        required=required)

    def add_grid(sp):
        sp.add_argument("--grid", required=True, help="start:end:steps")

    def add_common(sp):
        sp.add_argument("--dj-order", type=int, choices=(2, 3), default=2,
                        help="series order for the normal law (default 2)")
        sp.add_argument("--out", help="write CSV here instead of stdout")

    sp = sub.add_parser("validate", help="check game axioms, monotonicity, normalization")
    add_capacity(sp)

    sp = sub.add_parser("moments", help="exact/approximate mean and sd")
    add_capacity(sp); add_law(sp); add_common(sp)

    for name in ("pdf", "cdf"):
        sp = sub.add_parser(name, help="tabulate density and cdf on a grid (CSV y,pdf,cdf)")
        add_capacity(sp); add_law(sp); add_grid(sp); add_common(sp)

    sp = sub.add_parser("mixture", help="normal-mixture density on a grid (CSV y,mixture_pdf)")
    add_capacity(sp); add_law(sp); add_grid(sp); add_common(sp)

    sp = sub.add_parser("stigler", help="limit functionals and component stats "
                                        "for the power-weight family")
    sp.add_argument("--a", type=float, required=True, help="weight exponent, > 0")
    sp.add_argument("--n", type=int, required=True, help="number of inputs")
    add_law(sp, required=False); add_common(sp)

    sp = sub.add_parser("sample", help="Monte Carlo run; JSON summary, optional CSV")
    add_capacity(sp); add_law(sp)
    sp.add_argument("--n", type=int, required=True, help="number of samples")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="write the sampled values here as CSV")

    sp = sub.add_parser("orness", help="orness diagnostic of a capacity")
    add_capacity(sp)
    return p


_HANDLERS = {
    "validate": cmd_validate,
    "moments": cmd_moments,
    "pdf": cmd_pdf,
    "cdf": cmd_pdf,
    "mixture": cmd_mixture,
    "stigler": cmd_stigler,
    "sample": cmd_sample,
    "orness": cmd_orness,
}


def run(cfg: RunConfig) -> int:
    try:
        return _HANDLERS[cfg.command](cfg)
    except CapacityFormatError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except RegularityError as exc:
        print(f"regularity violation: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        law=getattr(args, "law", None),
        capacity=getattr(args, "capacity", None),
        grid=getattr(args, "grid", None),
        dj_order=getattr(args, "dj_order", 2),
        seed=getattr(args, "seed", 0),
        n=getattr(args, "n", None),
        a=getattr(args, "a", None),
        out=getattr(args, "out", None),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
