"""Genus-spectrum audits, maximality verification reports and run configuration."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Optional

from .bounds import (
    classification_notes,
    conjecture_excludes,
    ihara_bound,
    known_examples,
    trichotomy_classify,
)
from .counting import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    DEFAULT_Q_CAP,
    count_curve,
    maximal_count,
    predicted_extension_count,
    projective_plane_count,
)
from .curves import CurveFamily, family_field, family_genus, family_instances, family_plane_model
from .field_core import is_prime_power

SCHEMA_VERSION = 1
FORMATS = ("csv", "json", "text")
MIN_BUDGET = 10**6
CONJECTURE_RS = (3, 4, 5, 6)


@dataclass(frozen=True)
class Config:
    budget: int = DEFAULT_BUDGET
    q_cap: int = DEFAULT_Q_CAP
    format: str = "text"
    workers: int = 1

    def __post_init__(self):
        if self.budget < MIN_BUDGET:
            raise ValueError(f"budget must be >= {MIN_BUDGET:.0e}, got {self.budget}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.workers < 1 or self.q_cap < 2:
            raise ValueError("workers must be >= 1 and q_cap >= 2")

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        """Defaults, then $MAXCURVE_BUDGET, then explicit non-None overrides."""
        kwargs = {}
        env = os.environ.get(BUDGET_ENV)
        if env:
            kwargs["budget"] = int(float(env))
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)


# -- spectrum audit ------------------------------------------------------------


@dataclass(frozen=True)
class AuditRecord:
    q: int
    g: int
    status: str  # "possible", "excluded" or "non-existent"
    trichotomy: str
    max_count: int
    conjecture: dict[int, bool] = field(default_factory=dict)
    known_examples: tuple[str, ...] = ()
    families: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        d = asdict(self)
        d["conjecture"] = {str(r): v for r, v in self.conjecture.items()}
        for key in ("known_examples", "families", "notes"):
            d[key] = list(d[key])
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AuditRecord":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
        return cls(
            q=d["q"], g=d["g"], status=d["status"], trichotomy=d["trichotomy"],
            max_count=d["max_count"],
            conjecture={int(r): bool(v) for r, v in d["conjecture"].items()},
            known_examples=tuple(d["known_examples"]), families=tuple(d["families"]),
            notes=tuple(d["notes"]), schema_version=d["schema_version"],
        )

    @property
    def conjecturally_excluded(self) -> bool:
        return any(self.conjecture.values())

    @property
    def notable(self) -> bool:
        return bool(self.known_examples or self.families or self.notes)


def audit_genus(q: int, g: int, rs: tuple[int, ...] = CONJECTURE_RS) -> AuditRecord:
    verdict = trichotomy_classify(q, g)
    notes = tuple(classification_notes(q, g))
    if "non-existent" in notes:
        status = "non-existent"
    elif verdict.excluded:
        status = "excluded"
    else:
        status = "possible"
    return AuditRecord(
        q=q, g=g, status=status, trichotomy=verdict.tag, max_count=maximal_count(q, g),
        conjecture={r: conjecture_excludes(q, g, r) for r in rs if q >= r},
        known_examples=tuple(sorted({e.label for e in known_examples(q) if e.genus == g})),
        families=tuple(f.id for f in family_instances(q) if family_genus(f) == g),
        notes=notes,
    )


@dataclass(frozen=True)
class SpectrumAudit:
    q: int
    records: tuple[AuditRecord, ...]

    @property
    def possible(self) -> list[int]:
        return [r.g for r in self.records if r.status == "possible"]

    def summary(self) -> dict[str, int]:
        counts = Counter(r.status for r in self.records)
        counts["conjecturally_excluded"] = sum(
            r.conjecturally_excluded for r in self.records if r.status == "possible")
        return {k: counts.get(k, 0) for k in ("possible", "excluded", "non-existent", "conjecturally_excluded")}


def spectrum_audit(q: int, rs: tuple[int, ...] = CONJECTURE_RS) -> SpectrumAudit:
    """Audit every genus 0..q(q-1)/2 for F_{q^2}-maximal curves."""
    if not is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")
    return SpectrumAudit(q, tuple(audit_genus(q, g, rs) for g in range(ihara_bound(q) + 1)))


# -- maximality verification ---------------------------------------------------


@dataclass(frozen=True)
class CountRow:
    family: str
    k: int
    affine: int
    at_infinity: int
    observed: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.observed == self.expected

    def to_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def verify_family(f: CurveFamily, k_max: int = 1, config: Optional[Config] = None) -> list[CountRow]:
    """Count f over F_{q^{2k}}, k = 1..k_max, against the extension law of a maximal curve."""
    cfg = config or Config.from_env()
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    g = family_genus(f)
    rows = []
    for k in range(1, k_max + 1):
        pc = count_curve(f, k, budget=cfg.budget, workers=cfg.workers, q_cap=cfg.q_cap)
        rows.append(CountRow(f.id, k, pc.affine, pc.at_infinity, pc.total,
                             predicted_extension_count(f.q, g, k)))
    return rows


def plane_model_residual(f: CurveFamily, k: int = 1, config: Optional[Config] = None) -> tuple[int, int]:
    """(points of the projective plane model, nonsingular total minus that)."""
    cfg = config or Config.from_env()
    pc = count_curve(f, k, budget=cfg.budget, workers=cfg.workers, q_cap=cfg.q_cap)
    plane = projective_plane_count(family_plane_model(f, family_field(f, k)), budget=cfg.budget)
    return plane, pc.total - plane
