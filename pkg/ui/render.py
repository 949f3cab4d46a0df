"""
Plain-text rendering of CLI results.

Responsibilities:
- Certificates, fractions, torsion verdicts and conjugacy certificates as
  short human-readable lines
- Word forms come from the owning monoid (`s1 s2`, `D y`, `(2,1)`)
"""

from __future__ import annotations

from core.braid import ReversingResult
from core.klein import AbelianImage, ConjugacyCertificate
from core.monoid import LcmCertificate, Monoid
from core.ore import Fraction
from core.torsion import NoTorsionUpTo, TorsionVerdict


def render_certificate(monoid: Monoid, cert: LcmCertificate) -> list[str]:
    return [
        f"join: {monoid.render(cert.join)}",
        f"leftComp: {monoid.render(cert.left_comp)}",
        f"rightComp: {monoid.render(cert.right_comp)}",
    ]


def render_fraction(monoid: Monoid, f: Fraction) -> str:
    return f"{monoid.render(f.num)} / {monoid.render(f.den)}"


def render_verdict(monoid: Monoid, verdict: TorsionVerdict) -> str:
    if isinstance(verdict, NoTorsionUpTo):
        return f"no torsion up to {verdict.p_max}"
    w = verdict.witness
    return f"witness: order {w.order}, conjugator {monoid.render(w.conjugator)}, torsion {monoid.render(w.torsion)}"


def render_image(image: AbelianImage) -> str:
    return f"({image.degree}, {image.parity})"


def render_conjugacy(cert: ConjugacyCertificate) -> str:
    return f"{cert.verdict.value}: {render_image(cert.left_image)} vs {render_image(cert.right_image)}"


def render_reversing(monoid: Monoid, result: ReversingResult) -> list[str]:
    def word(letters: tuple[int, ...]) -> str:
        return " ".join(monoid.token(i) for i in letters) if letters else "1"

    return [f"pos: {word(result.pos)}", f"neg: {word(result.neg)}", f"steps: {result.steps}"]
