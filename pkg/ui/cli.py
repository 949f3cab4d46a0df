"""
Command-line surface.

Responsibilities:
- Subcommands nf, lcm, torsion, verify, conjcheck, frac and reverse
- Shared flags (--monoid, --json, --seed, --trials, --pmax, --max-word-len,
  --bfs-bound, --verbose) folded into one Settings value
- Exit codes: 0 success, 1 usage/parse/domain error, 2 property violation,
  3 internal invariant violation
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, Sequence

from core.braid import BraidMonoid
from core.config import DEFAULT_SETTINGS, Settings
from core.errors import InternalInvariantViolation, MonoidError
from core.instances import build_monoid, parse_monoid_selector
from core.klein import KleinMonoid, certify_nonconjugate
from core.monoid import Monoid
from core.ore import Fraction, OreGroup
from core.storage import (
    certificate_to_json,
    conjugacy_to_json,
    dumps,
    element_to_json,
    fraction_to_json,
    report_to_json,
    save_report,
    verdict_to_json,
)
from core.torsion import torsion_check
from core.verify import SUITES, run_verify
from core.words import parse_positive_word, parse_signed_word
from data_logger import DataLogger
from ui.render import (
    render_certificate,
    render_conjugacy,
    render_fraction,
    render_reversing,
    render_verdict,
)

logger = logging.getLogger("lcmtorsion")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_INTERNAL = 3

DEFAULT_MONOID = "braid:3"
FRAC_OPS = ("eval", "eq", "mul", "inv", "pow", "norm")


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"[ERROR] {message}\n")


class Context:
    """Everything a subcommand needs: settings, the selected monoid and output mode."""

    def __init__(self, args: argparse.Namespace, default_monoid: str = DEFAULT_MONOID) -> None:
        self.args = args
        self.settings: Settings = DEFAULT_SETTINGS.with_overrides(
            seed=args.seed,
            trials=args.trials,
            pmax=args.pmax,
            max_word_len=args.max_word_len,
            bfs_bound=args.bfs_bound,
        )
        self.monoid: Monoid = build_monoid(parse_monoid_selector(args.monoid or default_monoid), self.settings)
        self.group = OreGroup(self.monoid)

    def positive(self, text: str):
        return self.monoid.from_word(parse_positive_word(self.monoid, text, self.settings.max_word_len))

    def signed(self, text: str) -> list[tuple[int, int]]:
        return parse_signed_word(self.monoid, text, self.settings.max_word_len)

    def fraction(self, text: str) -> Fraction:
        return self.group.eval_signed_word(self.signed(text))

    def emit(self, payload: Any, lines: Sequence[str] | str) -> None:
        if self.args.json:
            print(dumps(payload))
            return
        print(lines if isinstance(lines, str) else "\n".join(lines))


# ----- subcommands --------------------------------------------------------
def cmd_nf(args: argparse.Namespace) -> int:
    ctx = Context(args)
    a = ctx.positive(args.word)
    ctx.emit(element_to_json(ctx.monoid, a), ctx.monoid.render_normal_form(a))
    return EXIT_OK


def cmd_lcm(args: argparse.Namespace) -> int:
    ctx = Context(args)
    cert = ctx.monoid.right_lcm(ctx.positive(args.left), ctx.positive(args.right))
    ctx.emit(certificate_to_json(ctx.monoid, cert), render_certificate(ctx.monoid, cert))
    return EXIT_OK


def cmd_torsion(args: argparse.Namespace) -> int:
    ctx = Context(args)
    z = ctx.fraction(args.word)
    verdict = torsion_check(ctx.group, z, ctx.settings.pmax)
    ctx.emit(verdict_to_json(ctx.monoid, verdict), render_verdict(ctx.monoid, verdict))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ctx = Context(args)
    sink = DataLogger(args.csv) if args.csv else None
    report = run_verify(ctx.monoid, args.suite, settings=ctx.settings, sink=sink)
    if sink is not None:
        sink.flush()
    if args.report:
        save_report(report, args.report)
        logger.info("report written to %s", args.report)
    ctx.emit(report_to_json(report), report.lines())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_conjcheck(args: argparse.Namespace) -> int:
    ctx = Context(args, default_monoid="klein")
    if not isinstance(ctx.monoid, KleinMonoid):
        logger.error("conjcheck only certifies words of the klein monoid, not %s", ctx.monoid.key)
        return EXIT_USAGE
    cert = certify_nonconjugate(ctx.signed(args.left), ctx.signed(args.right))
    ctx.emit(conjugacy_to_json(cert), render_conjugacy(cert))
    return EXIT_OK


def cmd_frac(args: argparse.Namespace) -> int:
    ctx = Context(args)
    group, m = ctx.group, ctx.monoid
    f = ctx.fraction(args.word)
    if args.op in ("eq", "mul"):
        if args.other is None:
            logger.error("frac %s needs a second word", args.op)
            return EXIT_USAGE
        g = ctx.fraction(args.other)
        if args.op == "eq":
            equal = group.eq(f, g)
            ctx.emit({"equal": equal}, "true" if equal else "false")
            return EXIT_OK
        result = group.mul(f, g)
    elif args.op == "inv":
        result = group.inv(f)
    elif args.op == "pow":
        result = group.pow_direct(f, args.power)
    elif args.op == "norm":
        result = group.normalize(f)
    else:
        result = f
    ctx.emit(fraction_to_json(m, result), render_fraction(m, result))
    return EXIT_OK


def cmd_reverse(args: argparse.Namespace) -> int:
    ctx = Context(args)
    if not isinstance(ctx.monoid, BraidMonoid):
        logger.error("reverse works on braid monoids, not %s", ctx.monoid.key)
        return EXIT_USAGE
    den = parse_positive_word(ctx.monoid, args.den, ctx.settings.max_word_len)
    num = parse_positive_word(ctx.monoid, args.num, ctx.settings.max_word_len)
    result = ctx.monoid.reverse(den, num)
    payload = {
        "pos": [ctx.monoid.token(i) for i in result.pos],
        "neg": [ctx.monoid.token(i) for i in result.neg],
        "steps": result.steps,
    }
    ctx.emit(payload, render_reversing(ctx.monoid, result))
    return EXIT_OK


# ----- parser -------------------------------------------------------------
def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--monoid", default=None, help=f"braid:<n>, klein, nk:<k> or cyclic:<n> (default {DEFAULT_MONOID})")
    common.add_argument("--json", action="store_true", help="Output machine-readable JSON")
    common.add_argument("--seed", type=int, default=None, help=f"Random seed (default {DEFAULT_SETTINGS.seed})")
    common.add_argument("--trials", type=int, default=None, help=f"Trials per suite (default {DEFAULT_SETTINGS.trials})")
    common.add_argument("--pmax", type=int, default=None, help=f"Largest torsion order tried (default {DEFAULT_SETTINGS.pmax})")
    common.add_argument(
        "--max-word-len", type=int, default=None, help=f"Longest accepted word (default {DEFAULT_SETTINGS.max_word_len})"
    )
    common.add_argument(
        "--bfs-bound", type=int, default=None, help=f"Word-length bound of oracle searches (default {DEFAULT_SETTINGS.bfs_bound})"
    )
    common.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")

    ap = ArgumentParser(prog="lcmtorsion", description="Lcm monoids, right fractions and torsion witnesses")
    sub = ap.add_subparsers(dest="command", required=True)

    nf = sub.add_parser("nf", parents=[common], help="Print the normal form of a positive word")
    nf.add_argument("word")
    nf.set_defaults(func=cmd_nf)

    lcm = sub.add_parser("lcm", parents=[common], help="Right lcm certificate of two positive words")
    lcm.add_argument("left")
    lcm.add_argument("right")
    lcm.set_defaults(func=cmd_lcm)

    tor = sub.add_parser("torsion", parents=[common], help="Torsion witness search for a signed word")
    tor.add_argument("word")
    tor.set_defaults(func=cmd_torsion)

    ver = sub.add_parser("verify", parents=[common], help="Run seeded property suites")
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ver.add_argument("--report", default="", help="Also write the report as JSON to this path")
    ver.add_argument("--csv", default="", help="Write per-trial records as CSV to this path")
    ver.set_defaults(func=cmd_verify)

    conj = sub.add_parser("conjcheck", parents=[common], help="Abelianization non-conjugacy certificate (klein)")
    conj.add_argument("left")
    conj.add_argument("right")
    conj.set_defaults(func=cmd_conjcheck)

    frac = sub.add_parser("frac", parents=[common], help="Arithmetic on right fractions given as signed words")
    frac.add_argument("op", choices=FRAC_OPS)
    frac.add_argument("word")
    frac.add_argument("other", nargs="?", default=None)
    frac.add_argument("--power", type=int, default=2, help="Exponent for `pow` (default 2)")
    frac.set_defaults(func=cmd_frac)

    rev = sub.add_parser("reverse", parents=[common], help="Subword reversing of den^-1 num (braid)")
    rev.add_argument("den")
    rev.add_argument("num")
    rev.set_defaults(func=cmd_reverse)
    return ap


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="[%(levelname)s] %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except InternalInvariantViolation as exc:
        logger.error("internal invariant violated: %s", exc)
        print(json.dumps(exc.dump, ensure_ascii=False, indent=2), file=sys.stderr)
        return EXIT_INTERNAL
    except (MonoidError, ValueError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
