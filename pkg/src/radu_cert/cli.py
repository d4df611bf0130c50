"""Command-line front end.

Exit codes: 0 certified / success, 1 refuted (or no r' found), 2 inapplicable,
3 malformed input, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .oracle import count_colored_regular
from .radu import NotSquareFree, ParameterTuple
from .series import ExponentVector, eta_quotient
from .verifier import (
    RPrimeNotFound,
    Verdict,
    canonical_name,
    certify,
    search_rprime,
    verify_theorem1,
)

EXIT_OK, EXIT_REFUTED, EXIT_INAPPLICABLE, EXIT_MALFORMED, EXIT_IO = 0, 1, 2, 3, 4
VERDICT_EXIT = {
    Verdict.CERTIFIED: EXIT_OK,
    Verdict.REFUTED: EXIT_REFUTED,
    Verdict.INAPPLICABLE: EXIT_INAPPLICABLE,
}


class MalformedJob(ValueError):
    pass


@dataclass
class JobSpec:
    m: int
    M: int
    N: int
    r: list[int]
    t: int
    modulus: int
    rprime: list[int] | None = None
    search_bound: int | None = None

    def __post_init__(self):
        for name in ("m", "M", "N", "t", "modulus"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise MalformedJob(f"{name} must be an integer, got {v!r}")
        if self.rprime is None and self.search_bound is None:
            raise MalformedJob("either rprime or search_bound is required")
        if self.search_bound is not None and self.search_bound < 1:
            raise MalformedJob("search_bound must be positive")
        if self.modulus < 2:
            raise MalformedJob("modulus must be >= 2")
        for name in ("r", "rprime"):
            v = getattr(self, name)
            if v is None:
                continue
            if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                raise MalformedJob(f"{name} must be a list of integers, got {v!r}")

    def parameter_tuple(self) -> ParameterTuple:
        try:
            r = ExponentVector.from_list(self.M, self.r)
            return ParameterTuple(self.m, self.M, self.N, r, self.t)
        except (ValueError, TypeError) as exc:
            raise MalformedJob(str(exc)) from exc

    def rprime_vector(self) -> ExponentVector | None:
        if self.rprime is None:
            return None
        try:
            return ExponentVector.from_list(self.N, self.rprime)
        except (ValueError, TypeError) as exc:
            raise MalformedJob(f"rprime: {exc}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


FIELD_FLAGS = {
    "m": "m", "level_m": "M", "level_n": "N", "r": "r", "t": "t",
    "modulus": "modulus", "rprime": "rprime", "search_bound": "search_bound",
}


def merge_job_data(args, required=("m", "M", "N", "r", "t", "modulus")) -> dict:
    """Merge an optional JSON job file with command-line overrides."""
    data = {}
    if getattr(args, "job", None):
        with open(args.job) as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise MalformedJob("job file must hold a JSON object")
    for flag, key in FIELD_FLAGS.items():
        value = getattr(args, flag, None)
        if value is not None:
            data[key] = value
    missing = [k for k in required if k not in data]
    if missing:
        raise MalformedJob(f"missing job fields: {', '.join(missing)}")
    unknown = set(data) - set(FIELD_FLAGS.values())
    if unknown:
        raise MalformedJob(f"unknown job fields: {', '.join(sorted(unknown))}")
    return data


def load_job(args) -> JobSpec:
    return JobSpec(**merge_job_data(args))


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_certify(args) -> int:
    try:
        job = load_job(args)
        tup = job.parameter_tuple()
        rprime = job.rprime_vector()
    except OSError as exc:
        _err(f"cannot read job file: {exc}")
        return EXIT_IO
    except (MalformedJob, json.JSONDecodeError) as exc:
        _err(f"malformed job: {exc}")
        return EXIT_MALFORMED

    if rprime is None:
        try:
            rprime = search_rprime(tup, job.search_bound)
        except NotSquareFree as exc:
            print(f"INAPPLICABLE: NotSquareFree: {exc}")
            return EXIT_INAPPLICABLE
        except (RPrimeNotFound, ValueError) as exc:
            print(f"INAPPLICABLE: {exc}")
            return EXIT_INAPPLICABLE

    cert = certify(tup, job.modulus, rprime)
    out = Path(args.out) if args.out else Path(canonical_name(cert))
    try:
        _write(out, cert.to_json())
    except OSError as exc:
        _err(f"cannot write certificate: {exc}")
        return EXIT_IO

    head = f"c_r({tup.m}n+{tup.t}) = 0 (mod {job.modulus})"
    if cert.verdict is Verdict.CERTIFIED:
        print(f"CERTIFIED: {head} for all n >= 0, residues {cert.pset}, floor(nu) = {cert.nu_floor} -> {out}")
    elif cert.verdict is Verdict.REFUTED:
        w = cert.witness
        print(f"REFUTED: c_r({w.index(tup.m)}) = {w.residue} (mod {job.modulus}) at t'={w.t}, n={w.n} -> {out}")
    else:
        print(f"INAPPLICABLE: {cert.reason} -> {out}")
    return VERDICT_EXIT[cert.verdict]


def cmd_reproduce_paper(args) -> int:
    outdir = Path(args.out) if args.out else Path.cwd()
    certs = verify_theorem1()
    try:
        for cert in certs:
            _write(outdir / canonical_name(cert), cert.to_json())
    except OSError as exc:
        _err(f"cannot write certificate: {exc}")
        return EXIT_IO
    for cert in certs:
        print(f"{cert.verdict.value}: p_3,3({cert.tuple.m}n+{cert.target}) = 0 (mod {cert.modulus}), "
              f"floor(nu) = {cert.nu_floor} -> {canonical_name(cert)}")
    return EXIT_OK if all(c.certified for c in certs) else EXIT_REFUTED


def _listing(values) -> None:
    for n, c in enumerate(values):
        print(n, c)


def cmd_expand(args) -> int:
    if args.count < 1:
        _err("count must be >= 1")
        return EXIT_MALFORMED
    try:
        r = ExponentVector.from_list(args.level_m, args.r)
    except (ValueError, TypeError) as exc:
        _err(f"malformed exponents: {exc}")
        return EXIT_MALFORMED
    _listing(eta_quotient(r, args.count).coeffs)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.limit < 1 or args.ell < 2 or args.colours < 1:
        _err("need limit >= 1, ell >= 2, colours >= 1")
        return EXIT_MALFORMED
    _listing(count_colored_regular(args.limit, args.ell, args.colours).counts)
    return EXIT_OK


def cmd_search_rprime(args) -> int:
    try:
        data = merge_job_data(args, required=("m", "M", "N", "r", "t"))
        data.pop("rprime", None)
        data.setdefault("search_bound", 60)
        # the modulus plays no part in the search
        data.setdefault("modulus", 2)
        job = JobSpec(**data)
        tup = job.parameter_tuple()
    except OSError as exc:
        _err(f"cannot read job file: {exc}")
        return EXIT_IO
    except (MalformedJob, json.JSONDecodeError) as exc:
        _err(f"malformed job: {exc}")
        return EXIT_MALFORMED
    try:
        rp = search_rprime(tup, job.search_bound)
    except RPrimeNotFound as exc:
        _err(str(exc))
        return EXIT_REFUTED
    except (NotSquareFree, ValueError) as exc:
        _err(str(exc))
        return EXIT_INAPPLICABLE
    print(",".join(str(v) for v in rp.values()))
    return EXIT_OK


def _add_job_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("job", nargs="?", help="JSON job file; flags override its fields")
    p.add_argument("--m", type=int, help="progression modulus m")
    p.add_argument("--level-m", type=int, help="eta-quotient level M")
    p.add_argument("--level-n", type=int, help="congruence subgroup level N")
    p.add_argument("--r", type=_int_list, help="exponents r_delta for delta | M, e.g. --r=-3,3")
    p.add_argument("--t", type=int, help="residue t, 0 <= t < m")
    p.add_argument("--modulus", type=int, help="congruence modulus u")
    p.add_argument("--rprime", type=_int_list, help="exponents r'_delta for delta | N")
    p.add_argument("--search-bound", type=int, help="search r' with entries in [0, bound]")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radu-cert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="certify one congruence and write its certificate")
    _add_job_flags(p)
    p.add_argument("--out", help="certificate path (default: congruence-<m>n<t>.json)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("reproduce-paper", help="certify the four mod-5 congruences for p_{3,3}")
    p.add_argument("--out", help="output directory (default: current directory)")
    p.set_defaults(func=cmd_reproduce_paper)

    p = sub.add_parser("expand", help="list eta-quotient coefficients")
    p.add_argument("--level-m", type=int, required=True)
    p.add_argument("--r", type=_int_list, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oracle", help="list coloured regular partition counts by brute force")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--colours", type=int, default=3)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("search-rprime", help="find an auxiliary r' satisfying the cusp bounds")
    _add_job_flags(p)
    p.set_defaults(func=cmd_search_rprime)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, which would collide with INAPPLICABLE
        return EXIT_OK if exc.code == 0 else EXIT_MALFORMED
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
