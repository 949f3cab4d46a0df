"""
JSON encoding of every value the CLI prints, and report persistence.

Responsibilities:
- Element, LcmCertificate, Fraction, TorsionVerdict, ConjugacyCertificate
  and VerifyReport to and from plain dicts
- Write and read JSON files, creating parent directories on demand

Decoders take the monoid the value lives in, so that forms are validated
by the instance that owns them.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from core.errors import DomainError, ParseError
from core.klein import AbelianImage, Conjugacy, ConjugacyCertificate
from core.monoid import Element, LcmCertificate, Monoid
from core.ore import Fraction
from core.torsion import NoTorsionUpTo, TorsionVerdict, TorsionWitness, Witness
from core.verify import SuiteResult, VerifyReport


def _require(data: Any, *keys: str) -> dict[str, Any]:
    if not isinstance(data, dict):
        raise ParseError(f"expected a JSON object, got {type(data).__name__}")
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParseError(f"missing key {missing[0]!r}")
    return data


# ----- elements and certificates -----------------------------------------
def element_to_json(monoid: Monoid, a: Element) -> dict[str, Any]:
    monoid.check(a)
    return {"monoid": monoid.key, **monoid.form_to_json(a)}


def element_from_json(monoid: Monoid, data: Any) -> Element:
    data = _require(data, "monoid")
    if data["monoid"] != monoid.key:
        raise DomainError(f"element of {data['monoid']!r} read as {monoid.key!r}")
    form = {k: v for k, v in data.items() if k != "monoid"}
    try:
        return monoid.form_from_json(form)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed {monoid.key} element: {exc}") from exc


CERT_KEYS = {"left": "left", "right": "right", "leftComp": "left_comp", "rightComp": "right_comp", "join": "join"}


def certificate_to_json(monoid: Monoid, cert: LcmCertificate) -> dict[str, Any]:
    return {key: element_to_json(monoid, getattr(cert, attr)) for key, attr in CERT_KEYS.items()}


def certificate_from_json(monoid: Monoid, data: Any) -> LcmCertificate:
    data = _require(data, *CERT_KEYS)
    return LcmCertificate(**{attr: element_from_json(monoid, data[key]) for key, attr in CERT_KEYS.items()})


def fraction_to_json(monoid: Monoid, f: Fraction) -> dict[str, Any]:
    return {"num": element_to_json(monoid, f.num), "den": element_to_json(monoid, f.den)}


def fraction_from_json(monoid: Monoid, data: Any) -> Fraction:
    data = _require(data, "num", "den")
    return Fraction(element_from_json(monoid, data["num"]), element_from_json(monoid, data["den"]))


# ----- verdicts ---------------------------------------------------------
def verdict_to_json(monoid: Monoid, verdict: TorsionVerdict) -> dict[str, Any]:
    if isinstance(verdict, NoTorsionUpTo):
        return {"verdict": "none", "pMax": verdict.p_max}
    w = verdict.witness
    return {
        "verdict": "witness",
        "order": w.order,
        "conjugator": element_to_json(monoid, w.conjugator),
        "torsion": element_to_json(monoid, w.torsion),
    }


def verdict_from_json(monoid: Monoid, data: Any) -> TorsionVerdict:
    data = _require(data, "verdict")
    if data["verdict"] == "none":
        return NoTorsionUpTo(int(_require(data, "pMax")["pMax"]))
    if data["verdict"] == "witness":
        _require(data, "order", "conjugator", "torsion")
        return Witness(
            TorsionWitness(
                order=int(data["order"]),
                conjugator=element_from_json(monoid, data["conjugator"]),
                torsion=element_from_json(monoid, data["torsion"]),
            )
        )
    raise ParseError(f"unknown verdict {data['verdict']!r}")


def image_to_json(image: AbelianImage) -> dict[str, int]:
    return {"degree": image.degree, "parity": image.parity}


def image_from_json(data: Any) -> AbelianImage:
    data = _require(data, "degree", "parity")
    return AbelianImage(int(data["degree"]), int(data["parity"]))


def conjugacy_to_json(cert: ConjugacyCertificate) -> dict[str, Any]:
    return {"verdict": cert.verdict.value, "left": image_to_json(cert.left_image), "right": image_to_json(cert.right_image)}


def conjugacy_from_json(data: Any) -> ConjugacyCertificate:
    data = _require(data, "verdict", "left", "right")
    try:
        verdict = Conjugacy(data["verdict"])
    except ValueError as exc:
        raise ParseError(f"unknown conjugacy verdict {data['verdict']!r}") from exc
    return ConjugacyCertificate(verdict, image_from_json(data["left"]), image_from_json(data["right"]))


# ----- verify reports ---------------------------------------------------
def report_to_json(report: VerifyReport) -> dict[str, Any]:
    return {
        "monoid": report.monoid,
        "suite": report.suite,
        "seed": report.seed,
        "trials": report.trials,
        "passed": report.passed,
        "results": [
            {"name": r.name, "checked": r.checked, "failures": list(r.failures), "notes": list(r.notes)}
            for r in report.results
        ],
    }


def report_from_json(data: Any) -> VerifyReport:
    data = _require(data, "monoid", "suite", "seed", "trials", "results")
    results = [
        SuiteResult(name=r["name"], checked=int(r["checked"]), failures=list(r["failures"]), notes=list(r["notes"]))
        for r in (_require(r, "name", "checked", "failures", "notes") for r in data["results"])
    ]
    return VerifyReport(
        monoid=data["monoid"], suite=data["suite"], seed=int(data["seed"]), trials=int(data["trials"]), results=results
    )


# ----- files ------------------------------------------------------------
def dumps(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def save_json(data: Any, path: str | Path) -> None:
    """Write JSON to `path`, creating its directory."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps(data) + "\n", encoding="utf-8")


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def save_report(report: VerifyReport, path: str) -> None:
    save_json(report_to_json(report), path)


def load_report(path: str) -> VerifyReport:
    return report_from_json(load_json(path))
