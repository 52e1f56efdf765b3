"""Relator-by-relator verification of the representations."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from . import burau, gassner
from .laurent import ALPHA, BETA, ONE, LaurentPoly, Param
from .presentations import Family, Relator, expand_xi, relators
from .words import FreeAutomorphism, format_word, from_free, word_to_auto

ARTIN = "artin"
BURAU_SYMBOLIC = "burau-symbolic"
BURAU_EVALUATED = "burau-evaluated"
GASSNER_SYMBOLIC = "gassner-symbolic"
GASSNER_EVALUATED = "gassner-evaluated"

REPS = (ARTIN, BURAU_SYMBOLIC, BURAU_EVALUATED, GASSNER_SYMBOLIC, GASSNER_EVALUATED, "iterated:R")

# the specializations singled out by the factorization claims
CANDIDATE_SUBSTITUTIONS: Dict[str, Dict[Param, LaurentPoly]] = {
    "b=1": {BETA: ONE},
    "b=a": {BETA: LaurentPoly.var(ALPHA)},
    "a=1": {ALPHA: ONE},
}

_SIGMA_TAU = {Family.BRAID, Family.SYMMETRIC, Family.VIRTUAL, Family.WELDED, Family.TWIN_WELDED}


class InapplicableRepresentation(ValueError):
    pass


@dataclass(frozen=True)
class RelatorRecord:
    label: str
    passed: bool
    witness: Optional[dict] = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"label": self.label, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    family: str
    n: int
    rep: str
    substitutions: List[str]
    records: List[RelatorRecord] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> List[RelatorRecord]:
        return [r for r in self.records if not r.passed]

    def record(self, label: str) -> RelatorRecord:
        for r in self.records:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "rep": self.rep,
            "substitutions": list(self.substitutions),
            "all_pass": self.all_passed,
            "relators": [r.to_json() for r in self.records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)

    def render(self) -> str:
        subs = ", ".join(self.substitutions) or "none"
        lines = [f"{self.family} n={self.n} rep={self.rep} substitutions={subs}"]
        for r in self.records:
            line = f"  {r.status.upper():4}  {r.label}"
            if r.witness:
                w = r.witness
                line += f"  first difference at {w['position']}: lhs={w['lhs']} rhs={w['rhs']}"
            lines.append(line)
        passed = sum(r.passed for r in self.records)
        lines.append(f"{passed}/{len(self.records)} relators pass")
        return "\n".join(lines)


def parse_rep(rep: str) -> Tuple[str, int]:
    """Split ``iterated:2`` / ``iterated(2)`` into ("iterated", 2); others have depth 0."""
    m = re.fullmatch(r"iterated[:(](\d+)\)?", rep)
    if m:
        return "iterated", int(m.group(1))
    if rep not in REPS:
        raise ValueError(f"unknown representation {rep!r}; choose from {', '.join(REPS)}")
    return rep, 0


def _artin_witness(a: FreeAutomorphism, b: FreeAutomorphism) -> dict:
    for k, (x, y) in enumerate(zip(a.images, b.images), 1):
        if x != y:
            return {
                "position": f"x{k}",
                "lhs": format_word(from_free(x)) or "1",
                "rhs": format_word(from_free(y)) or "1",
            }
    return {}


def _image_function(fam: Family, n: int, rep: str) -> Callable:
    kind, depth = parse_rep(rep)
    if kind == ARTIN:
        return lambda w: word_to_auto(expand_xi(w, n), n)
    if kind in (BURAU_SYMBOLIC, BURAU_EVALUATED):
        if fam not in _SIGMA_TAU:
            raise InapplicableRepresentation(f"{rep} is defined on sigma/tau generators, not on {fam.value}")
        params = burau.BurauParams(n)
        mode = burau.SYMBOLIC if kind == BURAU_SYMBOLIC else burau.EVALUATED
        return lambda w: burau.word_matrix(w, params, mode)
    if fam is not Family.PURE_WELDED:
        raise InapplicableRepresentation(f"{rep} is defined on the McCool group (pwb), not on {fam.value}")
    if kind == GASSNER_SYMBOLIC:
        return lambda w: gassner.gassner_word_matrix(w, n, gassner.SYMBOLIC)
    if kind == GASSNER_EVALUATED:
        return lambda w: gassner.gassner_word_matrix(w, n, gassner.EVALUATED)
    base = n + depth - 1
    if depth < 1:
        raise InapplicableRepresentation("iteration depth must be at least 1")
    return lambda w: gassner.iterated_word_matrix(w, base, depth)


def _compare(lhs, rhs, bindings) -> Tuple[bool, Optional[dict]]:
    if isinstance(lhs, FreeAutomorphism):
        if lhs == rhs:
            return True, None
        return False, _artin_witness(lhs, rhs)
    if bindings:
        lhs, rhs = lhs.substitute(bindings), rhs.substitute(bindings)
    pos = lhs.first_difference(rhs)
    if pos is None:
        return True, None
    r, c = pos
    return False, {
        "position": f"({r + 1},{c + 1})",
        "lhs": str(lhs[r, c]),
        "rhs": str(rhs[r, c]),
    }


def _format_bindings(bindings: Mapping[Param, LaurentPoly]) -> List[str]:
    return [f"{p.name}={v}" for p, v in sorted(bindings.items())]


def check_relator(rel: Relator, fam, n: int, rep: str, bindings: Optional[Mapping[Param, LaurentPoly]] = None) -> RelatorRecord:
    fam = Family(fam) if not isinstance(fam, Family) else fam
    image = _image_function(fam, n, rep)
    if bindings and parse_rep(rep)[0] == ARTIN:
        raise InapplicableRepresentation("the Artin representation has no parameters to substitute")
    ok, witness = _compare(image(rel.lhs), image(rel.rhs), bindings or {})
    return RelatorRecord(rel.label, ok, witness)


def verify_rep(family, n: int, rep: str, substitutions: Optional[Mapping[Param, LaurentPoly]] = None) -> VerificationReport:
    """Compare the images of both sides of every defining relator exactly."""
    fam = Family(family) if not isinstance(family, Family) else family
    bindings = dict(substitutions or {})
    # resolve applicability before touching any relator
    _image_function(fam, n, rep)
    if bindings and parse_rep(rep)[0] == ARTIN:
        raise InapplicableRepresentation("the Artin representation has no parameters to substitute")
    report = VerificationReport(fam.value, n, rep, _format_bindings(bindings))
    for rel in relators(fam, n):
        report.records.append(check_relator(rel, fam, n, rep, bindings))
    return report


def factor_analysis(rel: Relator, rep: str, n: int, family=Family.TWIN_WELDED) -> Dict[str, bool]:
    """Outcome of ``rel`` generically and under each candidate specialization."""
    out = {"generic": check_relator(rel, family, n, rep).passed}
    for name, bindings in CANDIDATE_SUBSTITUTIONS.items():
        out[name] = check_relator(rel, family, n, rep, bindings).passed
    return out
