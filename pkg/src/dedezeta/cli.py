"""Command-line front end.

Every computation and verification in the library is reachable as a
subcommand with deterministic output: identical flags produce
byte-identical text. Rationals print exactly as ``p/q`` (``--numeric``
converts them to floats), floats print with 17 significant digits.

Exit codes: 0 success, 2 invalid input (bad flags, malformed
descriptors, non-coprime entries), 3 a verification found a residual
beyond tolerance or a fan that failed its unimodularity probe.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .dedekind import (
    NuVector,
    cos_closed_form,
    dedekind_sum,
    exp_closed_form,
    franel_integral,
    integral_recip_rhs,
    make_report,
    r1_closed_form,
    rademacher_rhs,
    reciprocity_lhs,
    shifted_rhs,
    sin_closed_form,
)
from .exact import SymbolicValue, format_rational
from .lattice import hj_generators, hj_sequence, verify_unimodular
from .periodic import (
    PeriodicFn,
    bernoulli_fn,
    cos_fn,
    descriptor_token,
    exp_fn,
    parse_descriptor,
    sin_fn,
)
from .zeta import (
    TruncationPlan,
    bernoulli_recip_general,
    bernoulli_recip_r2,
    default_plan,
    multiple_zeta_trunc_info,
)

METHODS = (
    "rademacher",
    "shifted",
    "r1",
    "integral",
    "fourier",
    "bernoulli-r2",
    "exp",
    "cos",
    "sin",
)

_DEFAULT_TOL = {
    "rademacher": 0.0,
    "shifted": 0.0,
    "r1": 0.0,
    "integral": 0.0,
    "exp": 1e-9,
    "cos": 1e-9,
    "sin": 1e-9,
    "fourier": 1e-3,
    "bernoulli-r2": 1e-3,
}

_SWEEP_MAX = 100


# ---------------------------------------------------------------------------
# Deterministic serialization


def _fmt_float(x: float) -> str:
    return f"{x:.17g}"


def _json_text(obj) -> str:
    """Compact JSON with floats at 17 significant digits, keys in insertion order."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, Fraction):
        return json.dumps(format_rational(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(json.dumps(str(k)) + ":" + _json_text(v) for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_json_text(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _scalar_out(x, numeric: bool):
    """Render one computed scalar for output: exact string, float, or re/im pair."""
    if isinstance(x, SymbolicValue):
        if x.pi_power == 0 and x.iota_power == 0:
            return _scalar_out(x.coeff, numeric)
        if x.is_real():
            return x.real()
        z = x.numeric()
        return {"re": z.real, "im": z.imag}
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)):
        if numeric:
            return float(x)
        return format_rational(Fraction(x))
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, float):
        return x
    raise TypeError(f"cannot render {type(x).__name__}")


def _cell(v) -> str:
    """One CSV cell from an already-rendered scalar."""
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, dict):
        return _json_text(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(_json_text(doc) + "\n")
    elif fmt == "human":
        for key, val in doc.items():
            out.write(f"{key} = {_cell(val) if not isinstance(val, (list, tuple)) else _json_text(val)}\n")
    else:  # csv: one header row, one value row
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(list(doc.keys()))
        writer.writerow([_cell(v) if not isinstance(v, (list, tuple)) else _json_text(v) for v in doc.values()])


# ---------------------------------------------------------------------------
# Flag parsing helpers


class UsageError(ValueError):
    """Invalid input reported with the offending flag named."""


def _parse_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _parse_nu(text: str) -> NuVector:
    ent = _parse_ints(text, "--nu")
    try:
        return NuVector(ent)
    except ValueError as exc:
        raise UsageError(f"--nu {text}: {exc}") from None


_HEADS = ("b:", "pow:", "shift:", "poly:")
_BARE = ("sin", "cos", "e")


def _parse_fvec(text: str) -> tuple[PeriodicFn, ...]:
    """Split a descriptor list on commas; a fragment that does not start a
    new descriptor continues the previous one (poly coefficient lists)."""
    parts: list[str] = []
    for frag in text.split(","):
        frag = frag.strip()
        if frag.startswith(_HEADS) or frag in _BARE or not parts:
            parts.append(frag)
        else:
            parts[-1] += "," + frag
    try:
        return tuple(parse_descriptor(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"--f {text}: {exc}") from None


def _plan_for(nu_len: int, n_flag: Optional[int]) -> TruncationPlan:
    if n_flag is None:
        return default_plan(nu_len - 1)
    return TruncationPlan(N=n_flag)


# ---------------------------------------------------------------------------
# Report construction shared by recip and verify


def _trig_fvec(method: str, count: int) -> tuple[PeriodicFn, ...]:
    factory = {"exp": exp_fn, "cos": cos_fn, "sin": sin_fn}[method]
    return tuple(factory() for _ in range(count))


def _run_method(args) -> tuple[dict, object]:
    """Dispatch one reciprocity/closed-form verification; returns (doc, residual)."""
    method = args.method
    nu = _parse_nu(args.nu)
    ent = nu.entries
    extra: dict = {}

    if method == "rademacher":
        fvec = _parse_fvec(args.f) if args.f else (bernoulli_fn(1),) * 3
        if len(fvec) != 3 or any(f.kind != "bernoulli" or f.q != 1 for f in fvec):
            raise UsageError("--method rademacher expects --f b:1,b:1,b:1")
        if len(ent) != 3:
            raise UsageError("--method rademacher expects --nu with three entries")
        report = make_report("rademacher", reciprocity_lhs(fvec, nu), rademacher_rhs(nu))
    elif method == "shifted":
        if not args.f:
            raise UsageError("--method shifted requires --f with shift:p/q descriptors")
        fvec = _parse_fvec(args.f)
        if len(fvec) != 3 or any(f.kind != "shiftfrac" for f in fvec):
            raise UsageError("--method shifted expects exactly three shift:p/q descriptors")
        avec = tuple(f.shift for f in fvec)
        report = make_report("shifted", reciprocity_lhs(fvec, nu), shifted_rhs(nu, avec))
        extra["a"] = ",".join(format_rational(a) for a in avec)
    elif method == "r1":
        if len(ent) != 2:
            raise UsageError("--method r1 expects --nu with two entries")
        if not args.q:
            raise UsageError("--method r1 requires --q with one integer")
        qs = _parse_ints(args.q, "--q")
        if len(qs) != 1:
            raise UsageError("--method r1 requires --q with one integer")
        fvec = (bernoulli_fn(1), bernoulli_fn(qs[0]))
        report = make_report("r1", reciprocity_lhs(fvec, nu), r1_closed_form(nu, qs[0]))
        extra["q"] = str(qs[0])
    elif method == "integral":
        if not args.f:
            raise UsageError("--method integral requires --f")
        fvec = _parse_fvec(args.f)
        if len(fvec) != len(ent):
            raise UsageError("--f length must match --nu length")
        if not all(f.is_polynomial for f in fvec):
            raise UsageError("--method integral expects polynomial-family descriptors")
        report = make_report("integral", reciprocity_lhs(fvec, nu), integral_recip_rhs(fvec, nu))
        extra["f"] = ",".join(descriptor_token(f) for f in fvec)
    elif method == "fourier":
        if not args.q:
            raise UsageError("--method fourier requires --q")
        qs = _parse_ints(args.q, "--q")
        if len(qs) != len(ent):
            raise UsageError("--q length must match --nu length")
        report = bernoulli_recip_general(nu, qs, _plan_for(len(ent), args.N))
        extra["q"] = ",".join(str(q) for q in qs)
    elif method == "bernoulli-r2":
        if not args.q:
            raise UsageError("--method bernoulli-r2 requires --q")
        qs = _parse_ints(args.q, "--q")
        if len(ent) != 3 or len(qs) != 3:
            raise UsageError("--method bernoulli-r2 expects three entries in --nu and --q")
        report = bernoulli_recip_r2(nu, qs, _plan_for(len(ent), args.N))
        extra["q"] = ",".join(str(q) for q in qs)
    else:  # exp, cos, sin: closed form of the single sum selected by --k
        if args.k is None:
            raise UsageError(f"--method {method} requires --k")
        k = args.k
        if not 0 <= k < len(ent):
            raise UsageError(f"--k {k} out of range for --nu of length {len(ent)}")
        fvec = _trig_fvec(method, len(ent))
        lhs = dedekind_sum(fvec, nu, k)
        closed = {"exp": exp_closed_form, "cos": cos_closed_form, "sin": sin_closed_form}[method]
        rhs = closed(nu, k)
        if isinstance(rhs, SymbolicValue):
            rhs = rhs.real() if rhs.is_real() else rhs.numeric()
        report = make_report(method, lhs, rhs)
        extra["k"] = str(k)

    doc = {
        "lhs": _scalar_out(report.lhs, args.numeric),
        "rhs": _scalar_out(report.rhs, args.numeric),
        "residual": _scalar_out(report.residual, args.numeric),
        "method": report.method,
        "nu": ",".join(str(v) for v in ent),
    }
    for key, val in report.extra.items():
        doc[key] = val if isinstance(val, (str, int, float, bool)) else _json_text(val)
    doc.update(extra)
    return doc, report.residual


def _residual_magnitude(residual) -> float:
    if isinstance(residual, complex):
        return abs(residual)
    return abs(float(residual))


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_sum(args, out) -> int:
    nu = _parse_nu(args.nu)
    fvec = _parse_fvec(args.f)
    if len(fvec) != len(nu.entries):
        raise UsageError("--f length must match --nu length")
    if not 0 <= args.k < len(nu.entries):
        raise UsageError(f"--k {args.k} out of range")
    value = dedekind_sum(fvec, nu, args.k)
    doc = {
        "value": _scalar_out(value, args.numeric),
        "f": ",".join(descriptor_token(f) for f in fvec),
        "nu": args.nu,
        "k": args.k,
    }
    _emit(doc, args.format, out)
    return 0


def _cmd_recip(args, out) -> int:
    doc, _ = _run_method(args)
    _emit(doc, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    doc, residual = _run_method(args)
    tol = args.tol if args.tol is not None else _DEFAULT_TOL[args.method]
    ok = _residual_magnitude(residual) <= tol
    doc["tol"] = tol
    doc["pass"] = ok
    _emit(doc, args.format, out)
    return 0 if ok else 3


def _cmd_franel(args, out) -> int:
    qs = _parse_ints(args.q, "--q")
    ent = _parse_ints(args.nu, "--nu")
    if len(qs) != len(ent):
        raise UsageError("--q length must match --nu length")
    if any(v < 1 for v in ent):
        raise UsageError("--nu entries must be positive")
    value = franel_integral(qs, ent)
    doc = {
        "value": _scalar_out(value, args.numeric),
        "q": args.q,
        "nu": args.nu,
    }
    _emit(doc, args.format, out)
    return 0


def _cmd_hj(args, out) -> int:
    ent = _parse_ints(args.nu, "--nu")
    if len(ent) == 2:
        seq = hj_sequence(ent[0], ent[1])
        doc = dict(seq.to_json())
        _emit(doc, args.format, out)
        return 0
    nu = _parse_nu(args.nu)
    if len(nu.entries) != 3:
        raise UsageError("--nu must have two entries (a pair) or three (a fan)")
    if args.l is None:
        raise UsageError("--l is required for a three-entry --nu")
    if not 0 <= args.l <= 2:
        raise UsageError("--l must be 0, 1, or 2")
    fan = hj_generators(nu, args.l)
    probe = 3 * max(nu.entries)
    ok = verify_unimodular(fan, probe)
    doc = {"nu": args.nu, "l": args.l}
    doc.update(fan.to_json())
    doc["probe_bound"] = probe
    doc["unimodular"] = ok
    _emit(doc, args.format, out)
    return 0 if ok else 3


def _cmd_zeta(args, out) -> int:
    nu = _parse_nu(args.nu)
    qs = _parse_ints(args.q, "--q")
    if len(qs) != len(nu.entries):
        raise UsageError("--q length must match --nu length")
    if args.k is not None and not 0 <= args.k < len(nu.entries):
        raise UsageError(f"--k {args.k} out of range")
    if args.k is None and args.variant in ("full", "Y", "Z"):
        raise UsageError(
            f"--variant {args.variant} requires --k; use --variant plain for the unmasked sum"
        )
    plan = _plan_for(len(nu.entries), args.N)
    value, points = multiple_zeta_trunc_info(nu, qs, k=args.k, variant=args.variant, plan=plan)
    doc = {
        "value": value,
        "plan": plan.to_json(),
        "pairing": plan.pairing,
        "points_used": points,
        "variant": args.variant,
        "nu": args.nu,
        "q": args.q,
    }
    if args.k is not None:
        doc["k"] = args.k
    _emit(doc, args.format, out)
    return 0


def _sweep_rows(args):
    """Yield (nu_text, lhs, rhs, residual, method_text) per swept tuple."""
    method = args.method
    bound = args.max
    if method == "rademacher":
        fvec = (bernoulli_fn(1),) * 3
        for a, b, c in combinations(range(1, bound + 1), 3):
            if math.gcd(a, b) != 1 or math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
                continue
            nu = NuVector(a, b, c)
            lhs = reciprocity_lhs(fvec, nu)
            rhs = rademacher_rhs(nu)
            yield f"{a},{b},{c}", lhs, rhs, lhs - rhs, "rademacher"
    elif method == "franel":
        for n in range(2, bound + 1):
            for m in range(1, n):
                value = franel_integral((1, 1), (m, n))
                g = math.gcd(m, n)
                rhs = Fraction(g * g, 12 * m * n)
                yield f"{m},{n}", value, rhs, value - rhs, "franel"
    elif method == "r1":
        qs = _parse_ints(args.q, "--q") if args.q else (2, 4, 6)
        for q in qs:
            fvec = (bernoulli_fn(1), bernoulli_fn(q))
            for a in range(1, bound + 1):
                for b in range(1, bound + 1):
                    if a == b or math.gcd(a, b) != 1:
                        continue
                    nu = NuVector(a, b)
                    lhs = reciprocity_lhs(fvec, nu)
                    rhs = r1_closed_form(nu, q)
                    yield f"{a},{b}", lhs, rhs, lhs - rhs, f"r1:q={q}"
    elif method == "integral":
        if not args.f:
            raise UsageError("sweep --method integral requires --f")
        fvec = _parse_fvec(args.f)
        if not all(f.is_polynomial for f in fvec):
            raise UsageError("sweep --method integral expects polynomial-family descriptors")
        size = len(fvec)
        for ent in combinations(range(1, bound + 1), size):
            if any(math.gcd(x, y) != 1 for x, y in combinations(ent, 2)):
                continue
            nu = NuVector(ent)
            lhs = reciprocity_lhs(fvec, nu)
            rhs = integral_recip_rhs(fvec, nu)
            yield ",".join(str(v) for v in ent), lhs, rhs, lhs - rhs, "integral"
    else:
        raise UsageError(f"sweep supports methods rademacher, franel, r1, integral; got {method}")


def _cmd_sweep(args, out) -> int:
    if args.max < 1 or args.max > _SWEEP_MAX:
        raise UsageError(f"--max must be between 1 and {_SWEEP_MAX}")
    flagged = 0
    header = ["nu", "lhs", "rhs", "residual", "method", "flag"]
    rows = []
    for nu_text, lhs, rhs, residual, method_text in _sweep_rows(args):
        bad = residual != 0
        flagged += bad
        rows.append(
            (
                nu_text,
                _scalar_out(lhs, args.numeric),
                _scalar_out(rhs, args.numeric),
                _scalar_out(residual, args.numeric),
                method_text,
                "RESIDUAL" if bad else "",
            )
        )
    if args.format == "json":
        docs = [dict(zip(header, row)) for row in rows]
        out.write(_json_text({"rows": docs, "flagged": flagged}) + "\n")
    elif args.format == "human":
        for row in rows:
            out.write("  ".join(f"{k}={_cell(v)}" for k, v in zip(header, row)) + "\n")
        out.write(f"rows={len(rows)} flagged={flagged}\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
    return 3 if flagged else 0


# ---------------------------------------------------------------------------
# Argument grammar


def _add_common(p, *, fmt_default: str = "json") -> None:
    p.add_argument("--format", choices=("json", "csv", "human"), default=fmt_default)
    p.add_argument("--numeric", action="store_true", help="convert exact rationals to floats")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedezeta",
        description="Generalized Dedekind sums, reciprocity checks, and lattice zeta values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="one Dedekind sum S(nu | nu_k)")
    p.add_argument("--f", required=True, help="comma-separated descriptors, e.g. b:1,b:2,shift:1/5")
    p.add_argument("--nu", required=True)
    p.add_argument("--k", type=int, required=True, help="index of the modulus entry")
    _add_common(p)
    p.set_defaults(func=_cmd_sum)

    for name, handler in (("recip", _cmd_recip), ("verify", _cmd_verify)):
        p = sub.add_parser(
            name,
            help="reciprocity identity report" if name == "recip" else "reciprocity check with tolerance gate",
        )
        p.add_argument("--nu", required=True)
        p.add_argument("--f", help="function descriptors (rademacher, shifted, integral)")
        p.add_argument("--q", help="exponent vector (r1, fourier, bernoulli-r2)")
        p.add_argument("--k", type=int, help="sum index (exp, cos, sin closed forms)")
        p.add_argument("--N", type=int, help="truncation bound for lattice methods")
        p.add_argument("--method", choices=METHODS, required=True)
        if name == "verify":
            p.add_argument("--tol", type=float, help="absolute residual tolerance (default per method)")
        _add_common(p)
        p.set_defaults(func=handler)

    p = sub.add_parser("franel", help="exact product integral of periodic Bernoulli factors")
    p.add_argument("--q", required=True)
    p.add_argument("--nu", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_franel)

    p = sub.add_parser("hj", help="ceiling continued fraction / unimodular cone fan")
    p.add_argument("--nu", required=True, help="two entries for a sequence, three for a fan")
    p.add_argument("--l", type=int, help="which cone of the triple to subdivide (0, 1, 2)")
    _add_common(p)
    p.set_defaults(func=_cmd_hj)

    p = sub.add_parser("zeta", help="truncated lattice zeta value")
    p.add_argument("--nu", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--k", type=int, help="masked index (principal-value variant)")
    p.add_argument("--N", type=int)
    p.add_argument("--variant", choices=("full", "Y", "Z", "plain"), default="full")
    _add_common(p)
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("sweep", help="bulk verification table")
    p.add_argument("--method", required=True)
    p.add_argument("--max", type=int, default=20, help="entry bound for swept tuples")
    p.add_argument("--q", help="q values for r1 sweeps, e.g. 2,4,6")
    p.add_argument("--f", help="descriptors for integral sweeps")
    _add_common(p, fmt_default="csv")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
