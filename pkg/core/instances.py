"""Monoid selectors `braid:<n>`, `klein`, `nk:<k>`, `cyclic:<n>`."""

from __future__ import annotations

from dataclasses import dataclass

from core.braid import BraidMonoid
from core.config import DEFAULT_SETTINGS, Settings
from core.errors import DomainError, ParseError
from core.klein import KleinMonoid
from core.monoid import Monoid
from core.toy import CyclicGroup, FreeAbelianMonoid

KINDS = ("braid", "klein", "nk", "cyclic")
MINIMUM = {"braid": 2, "nk": 1, "cyclic": 1}


@dataclass(frozen=True)
class MonoidSelector:
    kind: str
    parameter: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ParseError(f"unknown monoid kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.kind == "klein":
            if self.parameter is not None:
                raise ParseError("klein takes no parameter")
            return
        if self.parameter is None:
            raise ParseError(f"{self.kind} needs a parameter, e.g. {self.kind}:3")
        if self.parameter < MINIMUM[self.kind]:
            raise DomainError(f"{self.kind} needs parameter >= {MINIMUM[self.kind]}")

    def __str__(self) -> str:
        return self.kind if self.parameter is None else f"{self.kind}:{self.parameter}"


def parse_monoid_selector(text: str) -> MonoidSelector:
    kind, _, raw = text.strip().partition(":")
    if not raw:
        return MonoidSelector(kind)
    if not raw.isdigit():
        raise ParseError(f"monoid parameter {raw!r} is not a natural number")
    return MonoidSelector(kind, int(raw))


def build_monoid(selector: MonoidSelector, settings: Settings = DEFAULT_SETTINGS) -> Monoid:
    if selector.kind == "braid":
        return BraidMonoid(selector.parameter, max_strands=settings.max_strands, step_cap=settings.reversing_step_cap)
    if selector.kind == "klein":
        return KleinMonoid()
    if selector.kind == "nk":
        return FreeAbelianMonoid(selector.parameter)
    return CyclicGroup(selector.parameter)
