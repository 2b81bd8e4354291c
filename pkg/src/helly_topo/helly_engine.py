"""Hypothesis/conclusion verifiers for homological Helly-type criteria.

Each verifier evaluates every required vanishing condition on the relevant
subfamilies (the hypothesis ledger), then checks the asserted conclusion by
direct simplex-set computation.  A verdict where the hypotheses hold but
the conclusion fails would contradict a theorem and is surfaced loudly by
callers; the sweep harness tallies exactly that.

Degree conventions: a required vanishing at degree -1 means nonemptiness;
degrees below -1 or above the ambient dimension are recorded as vacuous.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .complex_core import (
    SubcomplexFamily,
    Subcomplex,
    face_closure,
    grid_complex,
    intersect_members,
    union_members,
)
from .errors import ContractViolation
from .homology import GF2, CoefficientField, betti_number, is_n_acyclic, reduced_betti

ENGINE_THEOREMS = ("prop-a", "thm-b", "helly", "sigma", "breen")


@dataclass(frozen=True)
class LedgerEntry:
    """One required vanishing condition and its observed outcome."""

    indices: tuple
    kind: str  # "intersection" | "union"
    degree: int
    observed: object  # Betti number (degree -1: 0 iff nonempty), None if vacuous
    status: str  # "pass" | "fail" | "vacuous"

    @property
    def j(self) -> int:
        return len(self.indices)

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "j": self.j,
            "kind": self.kind,
            "degree": self.degree,
            "observed": self.observed,
            "status": self.status,
        }


@dataclass(frozen=True)
class HypothesisLedger:
    entries: tuple
    lam: object = None  # int where the theorem is lambda-indexed
    d: object = None  # int where the theorem is dimension-indexed

    @property
    def all_satisfied(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def failed_entries(self):
        return [e for e in self.entries if e.status == "fail"]

    def to_dict(self) -> dict:
        out = {"entries": [e.to_dict() for e in self.entries]}
        if self.lam is not None:
            out["lambda"] = self.lam
        if self.d is not None:
            out["d"] = self.d
        return out


@dataclass(frozen=True)
class Verdict:
    theorem: str
    field: CoefficientField
    ledger: HypothesisLedger
    hypotheses_hold: bool
    conclusion_holds: bool
    witness: dict

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "field": self.field.value,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
            "ledger": self.ledger.to_dict(),
            "witness": self.witness,
        }


def _entry(family, indices, kind, degree, field) -> LedgerEntry:
    if degree < -1 or degree > family.ambient.dimension:
        return LedgerEntry(tuple(indices), kind, degree, None, "vacuous")
    sub = (intersect_members if kind == "intersection" else union_members)(family, indices)
    observed = betti_number(sub, degree, field)
    return LedgerEntry(tuple(indices), kind, degree, observed, "pass" if observed == 0 else "fail")


def _subfamilies(m, j):
    return itertools.combinations(range(m), j)


def verify_prop_a(family: SubcomplexFamily, lam: int = 0, field: CoefficientField = GF2) -> Verdict:
    """Union-vanishing from intersection-vanishing.

    Hypotheses: for every subfamily of size j (1 <= j <= m) the intersection
    has vanishing reduced homology in degree m-1-j+lam.  Conclusion: the
    union of the whole family has vanishing homology in degree m-2+lam.
    """
    m = family.size
    if m < 2:
        raise ContractViolation("family size must be >= 2")
    if lam < 0:
        raise ContractViolation("lambda must be >= 0")
    entries = []
    for j in range(1, m + 1):
        for combo in _subfamilies(m, j):
            entries.append(_entry(family, combo, "intersection", m - 1 - j + lam, field))
    ledger = HypothesisLedger(tuple(entries), lam=lam)
    union = union_members(family, range(m))
    degree = m - 2 + lam
    observed = betti_number(union, degree, field)
    witness = {"kind": "union", "degree": degree, "observed": observed}
    return Verdict("prop-a", field, ledger, ledger.all_satisfied, observed == 0, witness)


def verify_theorem_b(family: SubcomplexFamily, lam: int = 0, field: CoefficientField = GF2) -> Verdict:
    """Intersection-vanishing from one union condition plus smaller intersections.

    Hypotheses: (a) the union of the whole family has vanishing homology in
    degree m-2+lam; (b) every subfamily of size j <= m-1 has intersection
    homology vanishing in degree m-2-j+lam.  Conclusion: the intersection of
    the whole family has vanishing homology in degree lam-1 (for lam = 0,
    that the intersection is nonempty).
    """
    m = family.size
    if m < 2:
        raise ContractViolation("family size must be >= 2")
    if lam < 0:
        raise ContractViolation("lambda must be >= 0")
    entries = [_entry(family, tuple(range(m)), "union", m - 2 + lam, field)]
    for j in range(1, m):
        for combo in _subfamilies(m, j):
            entries.append(_entry(family, combo, "intersection", m - 2 - j + lam, field))
    ledger = HypothesisLedger(tuple(entries), lam=lam)
    inter = intersect_members(family, range(m))
    degree = lam - 1
    observed = betti_number(inter, degree, field)
    witness = {"kind": "intersection", "degree": degree, "observed": observed}
    return Verdict("thm-b", field, ledger, ledger.all_satisfied, observed == 0, witness)


def verify_helly(family: SubcomplexFamily, d: int, field: CoefficientField = GF2) -> Verdict:
    """Nonempty acyclic total intersection from small-subfamily vanishing.

    Hypotheses: every subfamily of size j (1 <= j <= min(d+1, m)) has
    intersection homology vanishing in degree d-j (degree -1 meaning
    nonemptiness).  Conclusion: the intersection of the whole family is
    nonempty and acyclic.
    """
    if d <= 0:
        raise ContractViolation("d must be positive")
    if family.ambient.declared_embedding_dim > d:
        raise ContractViolation(
            f"ambient declared embedding dimension {family.ambient.declared_embedding_dim} "
            f"exceeds d={d}"
        )
    m = family.size
    entries = []
    for j in range(1, min(d + 1, m) + 1):
        for combo in _subfamilies(m, j):
            entries.append(_entry(family, combo, "intersection", d - j, field))
    ledger = HypothesisLedger(tuple(entries), d=d)
    inter = intersect_members(family, range(m))
    conclusion = is_n_acyclic(inter, max(family.ambient.dimension, -1), field)
    witness = {"kind": "intersection", "betti": reduced_betti(inter, field).to_dict()}
    return Verdict("helly", field, ledger, ledger.all_satisfied, conclusion, witness)


def verify_sigma(family: SubcomplexFamily, field: CoefficientField = GF2) -> Verdict:
    """Common point from union-vanishing at every subfamily size.

    Hypotheses: every subfamily of size j (1 <= j <= m) has union homology
    vanishing in degree j-2 (j=1: members nonempty, j=2: pairwise unions
    connected, ...).  Conclusion: the whole family has a common point.
    """
    m = family.size
    if m < 2:
        raise ContractViolation("family size must be >= 2")
    entries = []
    for j in range(1, m + 1):
        for combo in _subfamilies(m, j):
            entries.append(_entry(family, combo, "union", j - 2, field))
    ledger = HypothesisLedger(tuple(entries))
    inter = intersect_members(family, range(m))
    nonempty = not inter.is_empty
    witness = {"kind": "intersection", "nonempty": nonempty, "size": len(inter.member_simplices)}
    return Verdict("sigma", field, ledger, ledger.all_satisfied, nonempty, witness)


def verify_breen(family: SubcomplexFamily, d: int, field: CoefficientField = GF2) -> Verdict:
    """Common point from union-vanishing on subfamilies of size at most d+1."""
    if d <= 0:
        raise ContractViolation("d must be positive")
    if family.ambient.declared_embedding_dim > d:
        raise ContractViolation(
            f"ambient declared embedding dimension {family.ambient.declared_embedding_dim} "
            f"exceeds d={d}"
        )
    m = family.size
    if m < 2:
        raise ContractViolation("family size must be >= 2")
    entries = []
    for j in range(1, min(d + 1, m) + 1):
        for combo in _subfamilies(m, j):
            entries.append(_entry(family, combo, "union", j - 2, field))
    ledger = HypothesisLedger(tuple(entries), d=d)
    inter = intersect_members(family, range(m))
    nonempty = not inter.is_empty
    witness = {"kind": "intersection", "nonempty": nonempty, "size": len(inter.member_simplices)}
    return Verdict("breen", field, ledger, ledger.all_satisfied, nonempty, witness)


@lru_cache(maxsize=8)
def _grid_setup(n):
    ambient = grid_complex(n)
    tris = sorted(s for s in ambient.simplices if len(s) == 3)
    edge_to_tris = {}
    for t in tris:
        for e in itertools.combinations(t, 2):
            edge_to_tris.setdefault(e, []).append(t)
    adjacency = {}
    for t in tris:
        nbs = set()
        for e in itertools.combinations(t, 2):
            nbs.update(edge_to_tris[e])
        nbs.discard(t)
        adjacency[t] = sorted(nbs)
    return ambient, tris, adjacency


def random_family(grid_n: int, m: int, growth_steps: int, seed: int) -> SubcomplexFamily:
    """Random blob family on the triangulated grid, deterministic per seed.

    Each member is the face closure of an edge-connected triangle set grown
    by `growth_steps` accretions from a random start triangle (each step
    adds one uniformly chosen frontier triangle).
    """
    if grid_n < 2:
        raise ContractViolation("grid_n must be >= 2")
    if m < 1:
        raise ContractViolation("m must be >= 1")
    if growth_steps < 0:
        raise ContractViolation("growth_steps must be >= 0")
    ambient, tris, adjacency = _grid_setup(grid_n)
    rng = random.Random(f"random-family:{grid_n}:{m}:{growth_steps}:{seed}")
    members = []
    for _ in range(m):
        start = rng.choice(tris)
        chosen = {start}
        frontier = set(adjacency[start])
        for _ in range(growth_steps):
            if not frontier:
                break
            tri = rng.choice(sorted(frontier))
            chosen.add(tri)
            frontier.discard(tri)
            for nb in adjacency[tri]:
                if nb not in chosen:
                    frontier.add(nb)
        members.append(Subcomplex(ambient, face_closure(chosen)))
    labels = tuple(f"A{i + 1}" for i in range(m))
    return SubcomplexFamily(ambient, tuple(members), labels)


@dataclass(frozen=True)
class SweepReport:
    theorem: str
    field: CoefficientField
    trials: int
    seed: int
    generator: dict
    params: dict
    total: int
    hypotheses_satisfied: int
    conclusion_held: int
    conclusion_violated: int
    hypotheses_failed_conclusion_failed: int
    failure_histogram: tuple  # ((j, degree, count), ...) sorted

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "field": self.field.value,
            "trials": self.trials,
            "seed": self.seed,
            "generator": self.generator,
            "params": self.params,
            "counts": {
                "total": self.total,
                "hypotheses_satisfied": self.hypotheses_satisfied,
                "conclusion_held": self.conclusion_held,
                "conclusion_violated": self.conclusion_violated,
                "hypotheses_failed_conclusion_failed": self.hypotheses_failed_conclusion_failed,
            },
            "hypothesis_failure_histogram": [
                {"j": j, "degree": degree, "count": count}
                for (j, degree, count) in self.failure_histogram
            ],
        }


def _trial_seed(seed: int, trial: int) -> int:
    # flat integer derivation keeps trials schedule-independent
    return seed * 1_000_003 + trial


def run_verifier(theorem: str, family: SubcomplexFamily, field: CoefficientField = GF2,
                 d: int = 2, lam: int = 0) -> Verdict:
    if theorem == "prop-a":
        return verify_prop_a(family, lam, field)
    if theorem == "thm-b":
        return verify_theorem_b(family, lam, field)
    if theorem == "helly":
        return verify_helly(family, d, field)
    if theorem == "sigma":
        return verify_sigma(family, field)
    if theorem == "breen":
        return verify_breen(family, d, field)
    raise ContractViolation(f"unknown theorem tag {theorem!r}")


def sweep(theorem: str, trials: int, *, grid_n: int = 12, m: int = 4,
          growth_steps: int = 40, seed: int = 0, field: CoefficientField = GF2,
          d: int = 2, lam: int = 0) -> SweepReport:
    """Tally hypothesis satisfaction and conclusion outcomes over random families.

    `conclusion_violated` counts trials where the hypotheses held but the
    conclusion failed; any nonzero value contradicts a theorem and means an
    implementation bug.  `hypotheses_failed_conclusion_failed` witnesses the
    checks are not vacuous.
    """
    if theorem not in ENGINE_THEOREMS:
        raise ContractViolation(f"unknown theorem tag {theorem!r}")
    if trials < 1:
        raise ContractViolation("trials must be >= 1")
    satisfied = held = violated = failed_failed = 0
    histogram = {}
    for trial in range(trials):
        family = random_family(grid_n, m, growth_steps, _trial_seed(seed, trial))
        verdict = run_verifier(theorem, family, field, d=d, lam=lam)
        if verdict.hypotheses_hold:
            satisfied += 1
            if verdict.conclusion_holds:
                held += 1
            else:
                violated += 1
        else:
            if not verdict.conclusion_holds:
                failed_failed += 1
            for entry in verdict.ledger.failed_entries():
                key = (entry.j, entry.degree)
                histogram[key] = histogram.get(key, 0) + 1
    params = {}
    if theorem in ("prop-a", "thm-b"):
        params["lambda"] = lam
    if theorem in ("helly", "breen"):
        params["d"] = d
    return SweepReport(
        theorem=theorem,
        field=field,
        trials=trials,
        seed=seed,
        generator={"grid_n": grid_n, "m": m, "growth_steps": growth_steps},
        params=params,
        total=trials,
        hypotheses_satisfied=satisfied,
        conclusion_held=held,
        conclusion_violated=violated,
        hypotheses_failed_conclusion_failed=failed_failed,
        failure_histogram=tuple(sorted((j, deg, c) for (j, deg), c in histogram.items())),
    )
