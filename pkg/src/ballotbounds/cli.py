"""``ballot`` command line interface.

Every subcommand prints human-readable text, or with ``--json`` a single
JSON document ``{"command": ..., "input": {...}, "result": {...}}``.
``scan`` always writes one JSON object per line. Rationals are encoded
as ``{"num": "<int>", "den": "<int>", "decimal": "<str>"}``.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import kernels
from .bounds import (
    classical_closed_forms,
    reflection_counting_check,
    theorem1_bounds,
    theorem2_bounds,
    tightness_scan,
    weighted_bounds,
)
from .core import BallotSpec, VoteSequence, format_ratio, parse_ratio
from .cyclelemma import analyze_rotations, rotation_average_identity_check, rotation_count_bounds_check
from .enumeration import WeightedBallotSpec, count_exact, count_exact_weighted
from .errors import BallotError, DomainViolation, ParseError
from .montecarlo import sample_probability
from .takacs import takacs_coefficients, takacs_probability


def ratio_to_json(x: Fraction) -> dict:
    with localcontext() as ctx:
        ctx.prec = 20
        dec = Decimal(x.numerator) / Decimal(x.denominator)
    return {"num": str(x.numerator), "den": str(x.denominator), "decimal": str(dec)}


def ratio_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return ratio_to_json(obj)
    if isinstance(obj, VoteSequence):
        return obj.votes
    if isinstance(obj, BallotSpec):
        return {"a": obj.a, "b": obj.b, "mu": ratio_to_json(obj.mu)}
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if is_dataclass(obj):
        return {k: _jsonable(v) for k, v in vars(obj).items()}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, Fraction):
        return format_ratio(x)
    return str(x)


def _spec(args) -> BallotSpec:
    return BallotSpec(args.a, args.b, args.mu)


# -- subcommands: each returns (input, result, text lines) -------------------


def cmd_exact(args):
    spec = _spec(args)
    counts = count_exact(spec, args.budget)
    refl = reflection_counting_check(spec, counts)
    result = {
        "total": counts.total,
        "desirable": counts.desirable,
        "cute": counts.cute,
        "P": counts.P,
        "P_star": counts.P_star,
        "reflection": {
            c.name: {"applicable": c.applicable, "lhs": c.lhs, "rhs": c.rhs, "passed": c.passed}
            for c in (refl.undesirable, refl.ugly)
        },
    }
    lines = [
        f"{spec}: {counts.total} sequences",
        f"desirable {counts.desirable}  P  = {_fmt(counts.P)}",
        f"cute      {counts.cute}  P* = {_fmt(counts.P_star)}",
    ]
    for c in (refl.undesirable, refl.ugly):
        if c.applicable:
            lines.append(f"reflection {c.name}: {_fmt(c.lhs)} >= {_fmt(c.rhs)} {'ok' if c.passed else 'FAIL'}")
    return spec, result, lines


def cmd_bounds(args):
    spec = _spec(args)
    result = {}
    lines = [str(spec)]
    errors = []
    for key, label, fn in (("theorem1", "Theorem 1", theorem1_bounds), ("theorem2", "Theorem 2", theorem2_bounds)):
        try:
            pair = fn(spec)
        except DomainViolation as exc:
            errors.append(exc)
            result[key] = None
            lines.append(f"{label}: n/a ({exc})")
            continue
        result[key] = {"lower": pair.lower, "upper": pair.upper}
        lines.append(f"{label}: [{_fmt(pair.lower)}, {_fmt(pair.upper)}]")
    if len(errors) == 2:
        raise errors[0]
    closed = classical_closed_forms(spec)
    result["closed_forms"] = None if closed is None else {"P": closed.P, "P_star": closed.P_star}
    if closed is not None:
        lines.append(f"closed forms: P = {_fmt(closed.P)}, P* = {_fmt(closed.P_star)}")
    if args.check:
        counts = count_exact(spec, args.budget)
        result["P"], result["P_star"] = counts.P, counts.P_star
        lines.append(f"oracle: P = {_fmt(counts.P)}, P* = {_fmt(counts.P_star)}")
    return spec, result, lines


def cmd_takacs(args):
    spec = _spec(args)
    p = takacs_probability(spec)
    coeffs = takacs_coefficients(spec.mu, spec.b)
    result = {"P": p, "coefficients": list(coeffs.values)}
    lines = [
        f"{spec}: P = {_fmt(p)}",
        "C = [" + ", ".join(_fmt(c) for c in coeffs.values) + "]",
    ]
    return spec, result, lines


def cmd_cycle(args):
    mu = args.mu
    if args.sequence is None:
        if args.a is None or args.b is None:
            raise ParseError("cycle needs --sequence, or --a and --b for the averaging identity")
        spec = BallotSpec(args.a, args.b, mu)
        rep = rotation_average_identity_check(spec, args.budget)
        result = {
            "cute": rep.counts.cute,
            "desirable": rep.counts.desirable,
            "cute_rotation_sum": rep.cute_rotation_sum,
            "desirable_rotation_sum": rep.desirable_rotation_sum,
            "passed": rep.passed,
        }
        lines = [
            f"{spec}",
            f"sum of cute rotations {rep.cute_rotation_sum} = {spec.n} x {rep.counts.cute}",
            f"sum of desirable rotations {rep.desirable_rotation_sum} = {spec.n} x {rep.counts.desirable}",
            "identity holds" if rep.passed else "identity FAILS",
        ]
        return spec, result, lines
    seq = VoteSequence.parse(args.sequence)
    spec = seq.spec(mu)
    rep = rotation_count_bounds_check(seq, spec)
    result = {
        "sequence": seq,
        "cute_rotations": rep.cute_rotations,
        "desirable_rotations": rep.desirable_rotations,
        "cute_bound": rep.cute_bound,
        "desirable_bound": rep.desirable_bound,
        "passed": rep.passed,
        "analysis": None,
    }
    lines = [
        f"{seq} ({spec})",
        f"cute rotations {rep.cute_rotations} (bound {_fmt(rep.cute_bound)})",
        f"desirable rotations {rep.desirable_rotations} (bound {_fmt(rep.desirable_bound)})",
    ]
    if spec.margin >= 0:
        an = analyze_rotations(seq, mu)
        result["analysis"] = an
        lines += [
            f"canonical rotation by {an.pivot_index}: {an.base_sequence}",
            "S' = " + ", ".join(_fmt(s) for s in an.prefix_sums),
            f"cute offsets {sorted(an.cute_rotation_offsets)}",
            f"desirable offsets {sorted(an.desirable_rotation_offsets)}",
        ]
    return spec, result, lines


def cmd_weighted(args):
    weights = [parse_ratio(w) for w in args.weights.split(",") if w.strip()] if args.weights else []
    wspec = WeightedBallotSpec(args.a, tuple(weights), args.mu)
    counts = count_exact_weighted(wspec, args.budget)
    wb = weighted_bounds(wspec)
    inp = {"a": wspec.a, "weights": list(wspec.weights), "mu": wspec.mu}
    result = {
        "arrangements": counts.total,
        "desirable": counts.desirable,
        "cute": counts.cute,
        "P": counts.P,
        "P_star": counts.P_star,
        "bounds": {"lower": wb.lower, "upper": wb.upper, "integer_upper": wb.integer_upper},
    }
    lines = [
        f"a={wspec.a} weights={[_fmt(w) for w in wspec.weights]} mu={_fmt(wspec.mu)}",
        f"{counts.total} arrangements, P = {_fmt(counts.P)}, P* = {_fmt(counts.P_star)}",
        f"bounds [{_fmt(wb.lower)}, {_fmt(wb.upper)}]"
        + (f", integer-weight upper {_fmt(wb.integer_upper)}" if wb.integer_upper is not None else ""),
    ]
    return inp, result, lines


def cmd_sample(args):
    spec = _spec(args)
    est = sample_probability(spec, args.n, args.seed, args.workers)
    result = asdict(est)
    lines = [
        f"{spec}: n={est.n} seed={est.seed} workers={est.workers}",
        f"P  ~ {est.p_hat:.6f} +- {est.std_err_p:.6f} ({est.desirable} desirable)",
        f"P* ~ {est.p_star_hat:.6f} +- {est.std_err_p_star:.6f} ({est.cute} cute)",
    ]
    return spec, result, lines


def _range(text: str) -> range:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError as exc:
        raise ParseError(f"bad range {text!r}; use LO:HI (inclusive) or N") from exc


def cmd_scan(args, out):
    mus = [parse_ratio(m) for m in args.mu_set.split(",") if m.strip()]
    for row in tightness_scan(_range(args.a_range), _range(args.b_range), mus, args.budget):
        rec = {
            "spec": row.spec,
            "P": row.P,
            "P_star": row.P_star,
            "theorem1": row.theorem1 and {"lower": row.theorem1.lower, "upper": row.theorem1.upper},
            "theorem2": row.theorem2 and {"lower": row.theorem2.lower, "upper": row.theorem2.upper},
            "closed_forms": row.closed and {"P": row.closed.P, "P_star": row.closed.P_star},
            "tight": row.tight,
            "note": row.note,
        }
        print(json.dumps(_jsonable(rec)), file=out)


COMMANDS = {
    "exact": cmd_exact,
    "bounds": cmd_bounds,
    "takacs": cmd_takacs,
    "cycle": cmd_cycle,
    "weighted": cmd_weighted,
    "sample": cmd_sample,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _mu(text):
    return parse_ratio(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ballot", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s ({kernels.BACKEND} kernel)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, ab=True, ab_required=True):
        if ab:
            p.add_argument("--a", type=int, required=ab_required, help="votes for A")
            p.add_argument("--b", type=int, required=ab_required, help="votes for B")
        p.add_argument("--mu", type=_mu, required=True, help="ratio: p/q, integer or finite decimal")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--budget", type=int, default=None, help="enumeration budget (default $BALLOT_ENUM_BUDGET or 1e7)")

    common(sub.add_parser("exact", help="exact P and P* by enumeration"))
    p = sub.add_parser("bounds", help="Theorem 1 and 2 bounds")
    common(p)
    p.add_argument("--check", action="store_true", help="also compute the oracle values")
    common(sub.add_parser("takacs", help="P from Takacs' series"))
    p = sub.add_parser("cycle", help="rotation analysis of a sequence, or the averaging identity")
    common(p, ab_required=False)
    p.add_argument("--sequence", help="vote sequence over {A,B}")
    p = sub.add_parser("weighted", help="weighted-vote variant")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--weights", default="", help="comma-separated B-vote weights")
    common(p, ab=False)
    p = sub.add_parser("sample", help="Monte Carlo estimate")
    common(p)
    p.add_argument("--n", type=int, default=100_000, help="number of samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p = sub.add_parser("scan", help="tightness scan, one JSON object per line")
    p.add_argument("--a-range", required=True, help="LO:HI inclusive")
    p.add_argument("--b-range", required=True, help="LO:HI inclusive")
    p.add_argument("--mu-set", required=True, help="comma-separated ratios")
    p.add_argument("--budget", type=int, default=None)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "scan":
            cmd_scan(args, out)
            return 0
        inp, result, lines = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=err)
        return 2
    except BallotError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return 1
    if args.json:
        doc = {"command": args.command, "input": _jsonable(inp), "result": _jsonable(result)}
        print(json.dumps(doc, indent=2), file=out)
    else:
        print("\n".join(lines), file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
