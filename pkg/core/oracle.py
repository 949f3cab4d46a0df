"""
Brute-force oracles for desk-scale cross-checks.

Responsibilities:
- Enumerate elements by word length (or all elements of a finite instance)
- Left quotients, common right multiples and lcm sets by exhaustive search
- Uniqueness check: the lcm set equals join·units
- Word equivalence classes under length-preserving relations

Searches never truncate silently: when the bound cuts a search short they
raise SearchBoundExceeded.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Generic, Sequence

from core.errors import SearchBoundExceeded
from core.monoid import E, Monoid

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


class BfsOracle(Generic[E]):
    """Exhaustive search over a monoid, bounded by word length.

    Homogeneous instances are searched level by level up to `bound` letters;
    finite instances are searched completely and ignore the bound.

    With `slack` set, lcm searches on homogeneous instances stop `slack`
    levels after the first level holding a common right multiple instead of
    running to the bound.
    """

    def __init__(self, monoid: Monoid[E], bound: int = 12, slack: int | None = None) -> None:
        self.monoid = monoid
        self.bound = bound
        self.slack = slack
        self._levels: list[set[E]] = [{monoid.one()}]
        self._multiples: dict[E, frozenset[E]] = {}

    @property
    def finite(self) -> bool:
        return self.monoid.capabilities.finite_order is not None

    def level(self, n: int) -> set[E]:
        """All elements of length exactly n."""
        if n > self.bound:
            raise SearchBoundExceeded(f"length {n} is beyond the search bound {self.bound}")
        m = self.monoid
        gens = m.generators()
        while len(self._levels) <= n:
            nxt = {m.mul(e, g) for e in self._levels[-1] for g in gens}
            logger.debug("%s: %d elements of length %d", m.key, len(nxt), len(self._levels))
            self._levels.append(nxt)
        return self._levels[n]

    def multiples(self, a: E) -> frozenset[E]:
        """Right multiples of a, all of them when finite, else those of length <= bound."""
        if a in self._multiples:
            return self._multiples[a]
        m = self.monoid
        if self.finite:
            found = frozenset(m.mul(a, w) for w in m.elements())
        else:
            start = m.length(a)
            if start > self.bound:
                raise SearchBoundExceeded(f"{m.render(a)} is longer than the search bound {self.bound}")
            found = frozenset(m.mul(a, w) for n in range(self.bound - start + 1) for w in self.level(n))
        self._multiples[a] = found
        return found

    def left_quotients(self, a: E, c: E) -> set[E]:
        """Every w with a·w = c."""
        m = self.monoid
        if self.finite:
            candidates = m.elements()
        else:
            gap = m.length(c) - m.length(a)
            candidates = self.level(gap) if gap >= 0 else set()
        return {w for w in candidates if m.mul(a, w) == c}

    def common_multiples(self, a: E, b: E) -> set[E]:
        return self.multiples(a) & self.multiples(b)

    def lcm_set(self, a: E, b: E) -> set[E]:
        """Common right multiples that left-divide every common right multiple."""
        m = self.monoid
        if self.slack is not None and m.capabilities.homogeneous and not self.finite:
            return self._lcm_set_by_levels(a, b, self.slack)
        common = self.common_multiples(a, b)
        if not common:
            raise SearchBoundExceeded(
                f"no common right multiple of {m.render(a)} and {m.render(b)} within {self.bound} letters"
            )
        if self.finite:
            candidates = common
        else:
            shortest = min(m.length(c) for c in common)
            candidates = {c for c in common if m.length(c) == shortest}
        found = {c for c in candidates if common <= self.multiples(c)}
        if not found:
            raise SearchBoundExceeded(f"no right lcm of {m.render(a)} and {m.render(b)} within {self.bound} letters")
        return found

    def _lcm_set_by_levels(self, a: E, b: E, slack: int) -> set[E]:
        # right multiples of x of length n+1 are those of length n times a generator
        m = self.monoid
        gens = m.generators()

        def grow(frontier: set[E]) -> set[E]:
            return {m.mul(x, g) for x in frontier for g in gens}

        n = max(m.length(a), m.length(b))
        if n > self.bound:
            raise SearchBoundExceeded(f"operands are longer than the search bound {self.bound}")
        above_a, above_b = {a}, {b}
        for _ in range(n - m.length(a)):
            above_a = grow(above_a)
        for _ in range(n - m.length(b)):
            above_b = grow(above_b)

        candidates: set[E] | None = None
        stop = self.bound
        while True:
            common = above_a & above_b
            if candidates is None and common:
                candidates = set(common)
                stop = min(n + slack, self.bound)
            if candidates is not None:
                candidates = {c for c in candidates if all(m.left_divides(c, d) for d in common)}
            if n >= stop:
                break
            above_a, above_b = grow(above_a), grow(above_b)
            n += 1

        if candidates is None:
            raise SearchBoundExceeded(
                f"no common right multiple of {m.render(a)} and {m.render(b)} within {self.bound} letters"
            )
        if not candidates:
            raise SearchBoundExceeded(f"no right lcm of {m.render(a)} and {m.render(b)} within {stop} letters")
        logger.debug("%s: lcm search stopped at length %d", m.key, n)
        return candidates

    def lcm_set_matches_units(self, a: E, b: E) -> bool:
        m = self.monoid
        join = m.right_lcm(a, b).join
        return self.lcm_set(a, b) == {m.mul(join, u) for u in m.units()}


def word_class(word: Sequence[int], relations: Sequence[tuple[Word, Word]], bound: int = 100_000) -> set[Word]:
    """All words reachable from `word` by applying relations in both directions."""
    rules = [(lhs, rhs) for lhs, rhs in relations] + [(rhs, lhs) for lhs, rhs in relations]
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for lhs, rhs in rules:
            size = len(lhs)
            for i in range(len(current) - size + 1):
                if current[i : i + size] == lhs:
                    nxt = current[:i] + rhs + current[i + size :]
                    if nxt not in seen:
                        if len(seen) >= bound:
                            raise SearchBoundExceeded(f"equivalence class of {start} exceeds {bound} words")
                        seen.add(nxt)
                        queue.append(nxt)
    return seen
