"""
Seeded property suites behind `verify`.

Responsibilities:
- uniq: lcm sets found by exhaustive search equal join·units
- rlcm: composing two grid cells gives an lcm certificate of the product
- eq123: the three chain identities on random fractions
- torsion: torsion_check verdicts against the known torsion of the instance

Each suite draws from its own random.Random seeded with (seed, suite name),
so reports are byte-identical across runs with the same flags.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Protocol

from core.config import DEFAULT_SETTINGS, Settings
from core.errors import MonoidError
from core.monoid import Monoid, certificate_is_sound, compose_certificates
from core.oracle import BfsOracle
from core.ore import Fraction, OreGroup
from core.torsion import (
    NoTorsionUpTo,
    PairSequence,
    Witness,
    build_pairs,
    check_eq1,
    check_eq2,
    check_eq3,
    monoid_torsion_free,
    torsion_check,
    witness_is_sound,
    x_product,
    y_product,
)

logger = logging.getLogger(__name__)

SUITES = ("uniq", "rlcm", "eq123", "torsion")

# Word lengths of random samples; oracle searches stay small with short inputs.
ORACLE_SAMPLE_LEN = 2
SAMPLE_LEN = 4
# Extra letters the oracle may search beyond |a| + |b|.
ORACLE_SLACK = 4
EQ_MAX_KL = 3
EQ3_MAX_K = 6
# Fractions with at most this many letters also get the lcm half of eq1,
# for k, l <= EQ1_LCM_MAX_KL.
EQ1_LCM_MAX_LEN = 3
EQ1_LCM_MAX_KL = 2


class TrialSink(Protocol):
    def log(self, payload: dict) -> None: ...


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerifyReport:
    monoid: str
    suite: str
    seed: int
    trials: int
    results: list[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = [f"verify {self.monoid} suite={self.suite} seed={self.seed} trials={self.trials}"]
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            out.append(f"  {r.name}: {status} ({r.checked} checks)")
            out.extend(f"    {note}" for note in r.notes)
            out.extend(f"    repro: {failure}" for failure in r.failures)
        out.append("result: " + ("pass" if self.passed else "FAIL"))
        return out


class _Runner:
    def __init__(self, monoid: Monoid, settings: Settings, sink: TrialSink | None) -> None:
        self.monoid = monoid
        self.group = OreGroup(monoid)
        self.settings = settings
        self.sink = sink
        self._oracles: dict[int, BfsOracle] = {}

    def oracle(self, bound: int) -> BfsOracle:
        if bound not in self._oracles:
            self._oracles[bound] = BfsOracle(self.monoid, bound)
        return self._oracles[bound]

    def eq1_oracle(self, seq: PairSequence, k: int, l: int) -> BfsOracle:
        """An oracle reaching exactly the common value of eq1, searched level by level."""
        m = self.monoid
        common = m.mul(x_product(m, seq, 1, k), y_product(m, seq, k + 1, k + l))
        return BfsOracle(m, bound=m.length(common), slack=0)

    def word(self, a) -> str:
        return self.monoid.render_word(a)

    def record(self, result: SuiteResult, case: int, ok: bool, repro: str) -> None:
        result.checked += 1
        if not ok:
            result.failures.append(repro)
        if self.sink is not None:
            self.sink.log({"monoid": self.monoid.key, "suite": result.name, "case": case, "passed": ok, "repro": repro})

    def guarded(self, result: SuiteResult, case: int, repro: str, check: Callable[[], bool]) -> None:
        try:
            ok = check()
        except MonoidError as exc:
            logger.debug("case %d of %s raised %s", case, result.name, exc)
            ok, repro = False, f"{repro}  [{type(exc).__name__}: {exc}]"
        self.record(result, case, ok, repro)

    def pairs(self, rng: random.Random, trials: int, max_len: int):
        m = self.monoid
        if m.capabilities.finite_order is not None:
            yield from product(m.elements(), repeat=2)
            return
        for _ in range(trials):
            yield m.random_element(rng, max_len), m.random_element(rng, max_len)

    # ----- suites -----------------------------------------------------
    def uniq(self, rng: random.Random, trials: int) -> SuiteResult:
        m = self.monoid
        result = SuiteResult("uniq")
        sizes: set[int] = set()
        for case, (a, b) in enumerate(self.pairs(rng, trials, ORACLE_SAMPLE_LEN)):
            bound = min(self.settings.bfs_bound, m.length(a) + m.length(b) + ORACLE_SLACK)
            oracle = self.oracle(bound)

            def check(a=a, b=b, oracle=oracle) -> bool:
                sizes.add(len(oracle.lcm_set(a, b)))
                return oracle.lcm_set_matches_units(a, b)

            self.guarded(result, case, f'lcm --monoid {m.key} "{self.word(a)}" "{self.word(b)}"', check)
        if sizes:
            result.notes.append("lcm-set size " + ", ".join(str(s) for s in sorted(sizes)))
        return result

    def rlcm(self, rng: random.Random, trials: int) -> SuiteResult:
        m = self.monoid
        result = SuiteResult("rlcm")
        for case in range(trials):
            x, y1, y2 = (m.random_element(rng, SAMPLE_LEN) for _ in range(3))

            def check(x=x, y1=y1, y2=y2) -> bool:
                first = m.right_lcm(x, y1)
                second = m.right_lcm(first.right_comp, y2)
                composed = compose_certificates(m, first, second)
                direct = m.right_lcm(x, m.mul(y1, y2))
                return certificate_is_sound(m, composed) and composed.join in {
                    m.mul(direct.join, u) for u in m.units()
                }

            repro = f'x="{self.word(x)}" y1="{self.word(y1)}" y2="{self.word(y2)}"'
            self.guarded(result, case, repro, check)
        return result

    def eq123(self, rng: random.Random, trials: int) -> SuiteResult:
        m = self.monoid
        result = SuiteResult("eq123")
        for case in range(trials):
            z = Fraction(m.random_element(rng, SAMPLE_LEN), m.random_element(rng, SAMPLE_LEN))

            def check(z=z) -> bool:
                seq = build_pairs(self.group, z, max(2 * EQ_MAX_KL, EQ3_MAX_K) + 1)
                kl = range(1, EQ_MAX_KL + 1)
                short = m.length(z.num) + m.length(z.den) <= EQ1_LCM_MAX_LEN

                def oracle(k: int, l: int) -> BfsOracle | None:
                    return self.eq1_oracle(seq, k, l) if short and max(k, l) <= EQ1_LCM_MAX_KL else None

                return (
                    all(check_eq1(self.group, seq, k, l, oracle(k, l)) for k in kl for l in kl)
                    and all(check_eq2(self.group, seq, z, k) for k in kl)
                    and all(check_eq3(self.group, seq, z, k) for k in range(1, EQ3_MAX_K + 1))
                )

            self.guarded(result, case, f'z="{self.word(z.num)}" / "{self.word(z.den)}"', check)
        return result

    def torsion(self, rng: random.Random, trials: int) -> SuiteResult:
        m = self.monoid
        result = SuiteResult("torsion")
        p_max = self.settings.pmax
        torsion_free = monoid_torsion_free(m)
        for case, (a, b) in enumerate(self.pairs(rng, trials, SAMPLE_LEN)):
            if a == b:
                continue
            z = Fraction(a, b)

            def check(z=z) -> bool:
                verdict = torsion_check(self.group, z, p_max)
                if torsion_free:
                    return verdict == NoTorsionUpTo(p_max)
                order = next((p for p in range(1, p_max + 1) if self.group.is_identity(self.group.pow_direct(z, p))), None)
                if order is None:
                    return verdict == NoTorsionUpTo(p_max)
                return (
                    isinstance(verdict, Witness)
                    and verdict.witness.order == order
                    and witness_is_sound(self.group, z, verdict.witness)
                )

            self.guarded(result, case, f'torsion --monoid {m.key} "{self.word(a)} {_inverse_word(m, b)}"', check)
        return result


def _inverse_word(monoid: Monoid, a) -> str:
    word = monoid.word_of(a)
    return " ".join(monoid.token(i) + "^-1" for i in reversed(word))


def run_verify(
    monoid: Monoid,
    suite: str = "all",
    seed: int | None = None,
    trials: int | None = None,
    settings: Settings = DEFAULT_SETTINGS,
    sink: TrialSink | None = None,
) -> VerifyReport:
    """Run one suite, or all of them in a fixed order."""
    seed = settings.seed if seed is None else seed
    trials = settings.trials if trials is None else trials
    names = SUITES if suite == "all" else (suite,)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; expected one of {', '.join(SUITES + ('all',))}")
    runner = _Runner(monoid, settings, sink)
    results = []
    for name in names:
        logger.info("running %s on %s (seed %d, %d trials)", name, monoid.key, seed, trials)
        rng = random.Random(f"{seed}:{name}")
        results.append(getattr(runner, name)(rng, trials))
    return VerifyReport(monoid=monoid.key, suite=suite, seed=seed, trials=trials, results=results)
