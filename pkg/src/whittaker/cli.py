"""Command-line surface.

Subcommands: schur, spherical, essential, lfactor, verify, cauchy,
derivatives.  Results go to stdout, diagnostics to stderr.  Exit codes:
0 success / verified, 1 verification mismatch, 2 invalid input or
configuration, 3 internal invariant violation.  Output is byte-stable for
identical configurations.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import ConfigError, InvariantViolation, WhittakerError
from .repdata import GenericRep, UnramifiedLanglandsRep, parse_rep, parse_scalar_atom
from .ringcore import Scalar
from .rseng import VerificationReport, cauchy_check, euler_expand, l_factor, verify_essential
from .symfunc import Partition, schur_detailed
from .whitfun import essential_value, spherical_value

DEFAULT_DEGREE = 8
DEGREE_ENV = "WHITTAKER_DEGREE"


@dataclass
class RunConfig:
    command: str
    degree: int = DEFAULT_DEGREE
    seed: int = 0
    rep: Optional[GenericRep] = None
    pi_prime: Optional[UnramifiedLanglandsRep] = None
    satake: Tuple[Scalar, ...] = field(default_factory=tuple)
    weight: Tuple[int, ...] = field(default_factory=tuple)
    partition: Optional[Partition] = None
    var_count: int = 0
    algorithm: str = "jacobi-trudi"
    order: int = 0
    n: int = 0
    m: int = 0
    drop_integrality: bool = False


def _parse_int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse integer list {text!r}") from None


def _parse_atom_list(text: str) -> Tuple[Scalar, ...]:
    return tuple(parse_scalar_atom(x) for x in text.split(","))


def _load_rep(path: str) -> GenericRep:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from None
    return parse_rep(document)


def _resolve_degree(flag_value: Optional[int]) -> int:
    if flag_value is None:
        raw = os.environ.get(DEGREE_ENV)
        if raw is None:
            return DEFAULT_DEGREE
        try:
            flag_value = int(raw)
        except ValueError:
            raise ConfigError(f"{DEGREE_ENV} must be an integer, got {raw!r}") from None
    if flag_value < 1:
        raise ConfigError("degree must be a positive integer")
    return flag_value


def _spot_check(report: VerificationReport, seed: int) -> Optional[str]:
    """Substitute seeded random nonzero rationals into both series.

    Run only for passing symbolic reports, where substitution must commute
    with the whole pipeline; disagreement would be an internal bug.
    """
    if not report.passed:
        return None
    variables = set()
    for series in (report.lhs_series, report.rhs_series):
        for c in series.coeffs:
            variables.update(c.variables())
    if not variables:
        return None
    rng = random.Random(seed)
    for _ in range(32):
        bindings = {}
        for v in sorted(variables):
            num = rng.choice([x for x in range(-9, 10) if x])
            den = rng.randint(1, 9)
            bindings[v] = Fraction(num, den)
        try:
            for lc, rc in zip(report.lhs_series.coeffs, report.rhs_series.coeffs):
                if lc.substitute(bindings) != rc.substitute(bindings):
                    raise InvariantViolation(
                        "numeric substitution disagrees with symbolic comparison")
        except InvariantViolation:
            raise
        except WhittakerError:
            continue  # pole at the sample point: resample
        return f"numeric spot-check (seed {seed}): pass"
    return f"numeric spot-check (seed {seed}): skipped (no pole-free sample found)"


def _print_report(report: VerificationReport, seed: int) -> int:
    for line in report.summary_lines():
        print(line)
    note = _spot_check(report, seed)
    if note:
        print(note)
    return 0 if report.passed else 1


def _cmd_schur(config: RunConfig) -> int:
    variables = [Scalar.variable(f"x{i + 1}") for i in range(config.var_count)]
    result = schur_detailed(config.partition, variables, config.algorithm)
    if result.vanishes_by_length:
        print("note: partition is longer than the variable count; "
              "the Schur polynomial vanishes", file=sys.stderr)
    print(result.value)
    return 0


def _cmd_spherical(config: RunConfig) -> int:
    print(spherical_value(config.satake, config.weight))
    return 0


def _cmd_essential(config: RunConfig) -> int:
    print(essential_value(config.rep, config.weight))
    return 0


def _cmd_lfactor(config: RunConfig) -> int:
    factor = l_factor(config.rep, config.pi_prime)
    roots = ", ".join(str(c) for c in factor.sorted_roots())
    print(f"roots: [{roots}]")
    print(f"series: {euler_expand(factor, config.degree)}")
    return 0


def _cmd_verify(config: RunConfig) -> int:
    report = verify_essential(config.rep, config.pi_prime, config.degree,
                              drop_integrality=config.drop_integrality)
    return _print_report(report, config.seed)


def _cmd_cauchy(config: RunConfig) -> int:
    xs = [Scalar.variable(f"x{i + 1}") for i in range(config.n)]
    ys = [Scalar.variable(f"y{j + 1}") for j in range(config.m)]
    report = cauchy_check(config.n, config.m, xs, ys, config.degree)
    return _print_report(report, config.seed)


def _cmd_derivatives(config: RunConfig) -> int:
    from .repdata import derivative_subquotients

    products = derivative_subquotients(config.rep, config.order)
    print(f"order {config.order}: {len(products)} subquotients")
    for product in products:
        print("- " + (" x ".join(str(s) for s in product) if product else "1"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whittaker",
        description="Exact spherical/essential Whittaker values and "
                    "Rankin-Selberg series verification for GL(n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, degree=False, seed=False):
        if degree:
            p.add_argument("--degree", type=int, default=None,
                           help=f"truncation order (default {DEFAULT_DEGREE}; "
                                f"env {DEGREE_ENV} overrides)")
        if seed:
            p.add_argument("--seed", type=int, default=0,
                           help="seed for randomized numeric spot-checks")

    p = sub.add_parser("schur", help="print a Schur polynomial in x1..xk")
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 2,1")
    p.add_argument("--vars", type=int, required=True, help="number of variables")
    p.add_argument("--algorithm", choices=("jacobi-trudi", "bialternant"),
                   default="jacobi-trudi")

    p = sub.add_parser("spherical", help="spherical Whittaker value on the torus")
    p.add_argument("--satake", required=True, help="comma-separated Satake values")
    p.add_argument("--weight", required=True, help="comma-separated torus exponents")

    p = sub.add_parser("essential", help="essential Whittaker value on the torus")
    p.add_argument("--rep", required=True, help="path to a representation JSON file")
    p.add_argument("--weight", required=True, help="comma-separated torus exponents")

    p = sub.add_parser("lfactor", help="Euler roots and expansion of L(pi, pi', s)")
    p.add_argument("--rep", required=True)
    p.add_argument("--satake-prime", required=True, dest="satake_prime")
    add_common(p, degree=True)

    p = sub.add_parser("verify", help="check I(W_ess, W'_0, s) = L(pi, pi', s) exactly")
    p.add_argument("--rep", required=True)
    p.add_argument("--satake-prime", required=True, dest="satake_prime")
    p.add_argument("--drop-integrality-indicator", action="store_true",
                   dest="drop_integrality",
                   help="diagnostic hook: remove the lattice indicator from the "
                        "essential function; the comparison then fails whenever "
                        "the indicator carries weight (m equal to the unramified "
                        "rank r >= 2)")
    add_common(p, degree=True, seed=True)

    p = sub.add_parser("cauchy", help="unramified pairing identity with symbolic parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    add_common(p, degree=True, seed=True)

    p = sub.add_parser("derivatives", help="derivative subquotients of a representation")
    p.add_argument("--rep", required=True)
    p.add_argument("--order", type=int, required=True)

    return parser


def _build_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command, seed=getattr(args, "seed", 0))
    if hasattr(args, "degree"):
        config.degree = _resolve_degree(args.degree)
    if args.command == "schur":
        parts = _parse_int_list(args.partition)
        config.partition = Partition(parts)
        if args.vars < 0:
            raise ConfigError("--vars must be nonnegative")
        config.var_count = args.vars
        config.algorithm = args.algorithm
    elif args.command == "spherical":
        config.satake = _parse_atom_list(args.satake)
        config.weight = _parse_int_list(args.weight)
    elif args.command == "essential":
        config.rep = _load_rep(args.rep)
        config.weight = _parse_int_list(args.weight)
    elif args.command in ("lfactor", "verify"):
        config.rep = _load_rep(args.rep)
        config.pi_prime = UnramifiedLanglandsRep(_parse_atom_list(args.satake_prime))
        config.drop_integrality = getattr(args, "drop_integrality", False)
    elif args.command == "cauchy":
        if args.n < 1 or args.m < 1:
            raise ConfigError("--n and --m must be positive")
        config.n, config.m = args.n, args.m
    elif args.command == "derivatives":
        config.rep = _load_rep(args.rep)
        config.order = args.order
    return config


_HANDLERS = {
    "schur": _cmd_schur,
    "spherical": _cmd_spherical,
    "essential": _cmd_essential,
    "lfactor": _cmd_lfactor,
    "verify": _cmd_verify,
    "cauchy": _cmd_cauchy,
    "derivatives": _cmd_derivatives,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        config = _build_config(args)
        return _HANDLERS[args.command](config)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except WhittakerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
