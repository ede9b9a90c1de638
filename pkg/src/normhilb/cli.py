"""Command-line front end.

Exit codes: 0 success, 1 a check failed (or a theorem report is a
counter-instance), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import warnings
from pathlib import Path

from . import __version__
from .closure import CACHE_ENV, ClosureCache, closure_power, oracle_grid
from .filtration import graded_quotient_lengths, hi_check, reduction_number
from .graded import (
    GradedInstance,
    SimplicialComplex,
    coefficients_from_series,
    diagonal_hypersurface_series,
    f_vector,
    h_vector,
    bundled_complex,
    postulation_and_reduction,
    series_from_h,
    series_polynomial,
)
from .hilbert import FitError, InfiniteLength, fit, multiplicity_check, normal_table
from .monomial import DimensionError, MonomialIdeal, minimalize, monomial_str
from .theorems import run_suite, summarize, vanishing_equivalence_check

log = logging.getLogger("normhilb")

DEFAULT_SEED = 20201
_DEFAULT_CACHE = Path.home() / ".cache" / "normhilb"


class InputError(Exception):
    pass


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation, so output round-trips byte for byte."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _load_ideal(path) -> MonomialIdeal:
    if path is None:
        raise InputError("--ideal is required")
    try:
        return MonomialIdeal.load(path)
    except (OSError, json.JSONDecodeError, ValueError, DimensionError) as exc:
        raise InputError(f"cannot read ideal from {path}: {exc}") from exc


def _cache_dir(args) -> Path | None:
    if args.cache_dir:
        return Path(args.cache_dir)
    if args.no_cache:
        return None
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    return _DEFAULT_CACHE


def _open_cache(args) -> ClosureCache:
    base = _load_ideal(args.ideal)
    if base.is_zero:
        raise InputError("the zero ideal has no normal filtration")
    path = _cache_dir(args)
    return ClosureCache(base) if path is None else ClosureCache.open(base, path)


def _table(headers, rows) -> str:
    cells = [list(map(str, headers))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------


def cmd_closure(args) -> tuple[object, str, int]:
    cache = _open_cache(args)
    n = args.power
    if n < 0:
        raise InputError("--power must be non-negative")
    J = closure_power(cache, n)
    cache.save()
    data = {"ideal": cache.base.to_json(), "power": n, "closure": J.to_json()}
    text = f"closure of {cache.base}^{n}:\n  " + "\n  ".join(monomial_str(g) for g in J.gens)
    return data, text, 0


def cmd_hilbert(args) -> tuple[object, str, int]:
    cache = _open_cache(args)
    try:
        table = normal_table(cache, args.max_n)
        fitted = fit(table)
    except InfiniteLength as exc:
        raise InputError(str(exc)) from exc
    except FitError as exc:
        cache.save()
        msg = f"{exc} (try --max-n {args.max_n + cache.dim + 2})"
        return {"error": msg, "values": list(table.values)}, msg, 1
    cache.save()
    data = {"values": list(table.values), **fitted.to_json()}
    mult = multiplicity_check(cache.base, fitted)
    if mult is not None:
        data["multiplicity_check"] = mult
    rows = [(n, v, fitted(n)) for n, v in enumerate(table.values)]
    text = "\n".join(
        [
            _table(["n", "length", "P(n)"], rows),
            f"e = {list(fitted.coeffs)}",
            "postulation = " + ("none (agrees on every tabulated n)" if fitted.postulation is None else str(fitted.postulation)),
            "note: polynomial detected by two-window agreement, not a proven bound",
        ]
    )
    return data, text, 0 if mult is not False else 1


def cmd_reduction(args) -> tuple[object, str, int]:
    cache = _open_cache(args)
    J = _load_ideal(args.reduction_ideal) if args.reduction_ideal else None
    try:
        rep = reduction_number(cache, args.max_n, J)
        lengths = graded_quotient_lengths(cache, args.max_n - 1)
    except (ValueError, InfiniteLength) as exc:
        raise InputError(str(exc)) from exc
    cache.save()
    data = {**rep.to_json(), "quotient_lengths": lengths}
    r = "not reached on the window" if rep.r_bar is None else str(rep.r_bar)
    text = f"r_bar = {r} (certified for n < {rep.n_max} only)\nfailures at n = {list(rep.failures)}\nlengths = {lengths}"
    return data, text, 0


def cmd_hi_check(args) -> tuple[object, str, int]:
    cache = _open_cache(args)
    if args.r < 1:
        raise InputError("--r must be at least 1")
    rep = hi_check(cache, args.r, args.max_n)
    cache.save()
    if rep.passed:
        text = f"HI_{rep.r} holds for 0 <= n <= {rep.n_max}"
    else:
        n, w = rep.witness
        text = f"HI_{rep.r} fails at n={n}: {monomial_str(w)} lies in the intersection but not the product"
    return rep.to_json(), text, 0 if rep.passed else 1


def cmd_verify(args) -> tuple[object, str, int]:
    cache = _open_cache(args)
    k = args.k
    if k < 1:
        raise InputError("--k must be at least 1")
    if k == 1:
        warnings.warn("k=1: only the e_k vanishing consequence is in scope; other checks report unmet hypotheses")
    try:
        table = normal_table(cache, args.max_n + 1)
        fitted = fit(table)
    except InfiniteLength as exc:
        raise InputError(str(exc)) from exc
    except FitError as exc:
        cache.save()
        return {"error": str(exc)}, str(exc), 1
    reports = run_suite(cache, fitted, k, args.max_n, args.type)
    cache.save()
    summary = summarize(reports)
    data = {"e": list(fitted.coeffs), "reports": [r.to_json() for r in reports], "summary": summary}
    lines = [f"instance {cache.base}, k={k}, e={list(fitted.coeffs)}, window n <= {args.max_n}"]
    for r in reports:
        lines.append(f"[{r.verdict}] {r.theorem}: {r.conclusion[0]} -> {r.conclusion[1]}")
        for name, status in r.hypotheses:
            lines.append(f"    {status:>10}  {name}")
        for note in r.notes:
            lines.append(f"    note: {note}")
    return data, "\n".join(lines), 1 if summary["hard_failures"] else 0


def _graded_report(name, series, k_values, t_R):
    e = coefficients_from_series(series)
    n_bar, r_bar = postulation_and_reduction(series, cm=True)
    inst = GradedInstance(name, series)
    poly = series_polynomial(series)
    checks = [vanishing_equivalence_check(inst, poly, k, t_R) for k in k_values]
    data = {
        "h": list(series.numerator),
        "dim": series.dim,
        "e": list(e),
        "postulation": n_bar,
        "reduction": r_bar,
        "reduction_derivation": "r = n + d, valid because G(m) is Cohen-Macaulay (asserted)",
        "reports": [c.to_json() for c in checks],
    }
    lines = [
        f"Hilbert series: {series}",
        f"e = {list(e)}",
        f"postulation number = {n_bar}",
        f"reduction number = {r_bar} (assuming G(m) Cohen-Macaulay)",
    ]
    lines += [f"[{c.verdict}] {c.theorem} k={c.k}: {c.conclusion[0]} -> {c.conclusion[1]}" for c in checks]
    code = 1 if any(c.hard_failure for c in checks) else 0
    return data, lines, code


def cmd_sr(args) -> tuple[object, str, int]:
    try:
        delta = SimplicialComplex.load(args.complex) if args.complex else bundled_complex()
        f = f_vector(delta)
        h = h_vector(delta)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"bad complex: {exc}") from exc
    d = len(f) - 1
    series = series_from_h(h, d)
    data, lines, code = _graded_report("Stanley-Reisner ring", series, range(2, d + 1), args.type)
    data = {"f": list(f), **data}
    lines = [f"f-vector = {tuple(f)}", f"h-vector = {tuple(h)}"] + lines
    return data, "\n".join(lines), code


def cmd_hypersurface(args) -> tuple[object, str, int]:
    if args.d is None or args.n is None:
        raise InputError("--d and --n are required")
    if args.d < 1 or args.n < 1:
        raise InputError("--d and --n must be positive")
    series = diagonal_hypersurface_series(args.d, args.n)
    data, lines, code = _graded_report(f"diagonal hypersurface d={args.d} n={args.n}", series, range(2, args.d + 1), args.type)
    return data, "\n".join(lines), code


def cmd_oracle(args) -> tuple[object, str, int]:
    """Seeded random cross-check of Newton membership against the power oracle."""
    rng = random.Random(args.seed)
    disagreements, inconclusive, points = [], 0, 0
    for _ in range(args.count):
        I = random_ideal(rng)
        res = compare_with_oracle(I, range(1, 4))
        points += res["points"]
        inconclusive += res["inconclusive"]
        disagreements += [{"ideal": I.to_json(), **d} for d in res["disagreements"]]
    data = {"seed": args.seed, "ideals": args.count, "points": points, "inconclusive": inconclusive, "disagreements": disagreements}
    text = f"{args.count} ideals, {points} points, {len(disagreements)} disagreements, {inconclusive} oracle-inconclusive"
    return data, text, 1 if disagreements else 0


def random_ideal(rng: random.Random, max_dim: int = 3, max_gens: int = 4, max_exp: int = 4) -> MonomialIdeal:
    d = rng.randint(1, max_dim)
    g = rng.randint(1, max_gens)
    gens = [[rng.randint(0, max_exp) for _ in range(d)] for _ in range(g)]
    return minimalize(gens, d)


def compare_with_oracle(I: MonomialIdeal, n_values, k_max: int = 12) -> dict:
    """Newton membership (via the closure generators) versus the power oracle on [0, n*M]^d.

    Oracle-true/Newton-false is a disagreement; Newton-true/oracle-false is
    only inconclusive since the oracle stops at k_max.
    """
    import numpy as np

    from .hilbert import _membership_grid

    cache = ClosureCache(I)
    M = max(I.max_exponent(), 1)
    bound = max(n_values) * M
    hits = oracle_grid(I, n_values, bound, k_max)
    out = {"points": 0, "inconclusive": 0, "disagreements": []}
    for n in n_values:
        side = n * M + 1
        newton = _membership_grid(closure_power(cache, n), (side,) * I.dim)
        oracle = hits[n][(slice(0, side),) * I.dim]
        out["points"] += newton.size
        out["inconclusive"] += int((newton & ~oracle).sum())
        for a in zip(*np.nonzero(oracle & ~newton)):
            out["disagreements"].append({"n": n, "point": [int(x) for x in a]})
    return out


COMMANDS = {
    "closure": cmd_closure,
    "hilbert": cmd_hilbert,
    "reduction": cmd_reduction,
    "hi-check": cmd_hi_check,
    "verify": cmd_verify,
    "sr": cmd_sr,
    "hypersurface": cmd_hypersurface,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ideal", help="monomial ideal JSON file {'dim': d, 'gens': [[...], ...]}")
    common.add_argument("--complex", help="simplicial complex JSON file (sr)")
    common.add_argument("--power", type=int, default=1)
    common.add_argument("--max-n", type=int, default=8)
    common.add_argument("--r", type=int, default=1)
    common.add_argument("--k", type=int, default=2)
    common.add_argument("--type", type=int, default=1, help="type t(R) of the ambient ring (1 for regular rings)")
    common.add_argument("--reduction-ideal")
    common.add_argument("--cache-dir", help=f"closure cache directory (else ${CACHE_ENV}, else ~/.cache/normhilb)")
    common.add_argument("--no-cache", action="store_true", help="do not use the default cache directory")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--count", type=int, default=200, help="number of random ideals (oracle)")
    common.add_argument("--d", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="normhilb", description="Normal filtrations of monomial ideals.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if args.max_n < 2:
        print("error: --max-n must be at least 2", file=sys.stderr)
        return 2
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
            data, text, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dump_json(data) if args.format == "json" else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
