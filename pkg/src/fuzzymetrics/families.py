"""Family- and sequence-level certificates: union cuts, total boundedness,
equi-right-continuity at 0, relative compactness, closedness witnesses and
Cauchy tail profiles.

Infinite families are represented by generator tags plus parameter sweeps;
"for all n" claims are decided as tail trends over the member order with the
same hysteresis rule as the convergence diagnostics. A fixed finite family is
always totally bounded and equi-right-continuous, so untagged families PASS
with their evidence recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .certificates import (
    Certificate,
    Verdict,
    check_window,
    combine_verdicts,
    trend_verdict,
)
from .common import InputError, fmt
from .fuzzy import StepFuzzySet, alpha_cut, same_representation, support
from .metrics import endograph_metric, sendograph_metric
from .sets import FiniteSet, covering_number, hausdorff, union_family


@dataclass(frozen=True)
class GeneratorTag:
    """Name and parameter sequence of a parametrized family."""

    kind: str
    params: tuple[float, ...]


@dataclass(frozen=True)
class FuzzyFamily:
    members: tuple[StepFuzzySet, ...]
    names: tuple[str, ...]
    generator: GeneratorTag | None = None


def fuzzy_family(
    members: Sequence[StepFuzzySet],
    names: Sequence[str] | None = None,
    generator: GeneratorTag | None = None,
) -> FuzzyFamily:
    """Validated family constructor: nonempty, one space, unique names."""
    members = tuple(members)
    if not members:
        raise InputError("family must be nonempty")
    space = members[0].space
    for u in members:
        if u.space != space:
            raise InputError("family members live in different spaces")
    if names is None:
        names = tuple(f"u{i + 1}" for i in range(len(members)))
    else:
        names = tuple(str(n) for n in names)
    if len(names) != len(members):
        raise InputError("names and members differ in length")
    if len(set(names)) != len(names):
        raise InputError("member names must be unique")
    return FuzzyFamily(members=members, names=names, generator=generator)


def family_union_cut(family: FuzzyFamily, alpha: float) -> FiniteSet:
    """Union of the member cuts at a level in (0,1]."""
    return union_family([alpha_cut(u, alpha) for u in family.members])


def _prefix_net_sizes(cuts: Sequence[FiniteSet], eps: float) -> tuple[int, ...]:
    """Greedy net size of each prefix union; nondecreasing since greedy
    centers are stable under appending points."""
    sizes = []
    acc: FiniteSet | None = None
    for c in cuts:
        acc = c if acc is None else union_family([acc, c])
        sizes.append(covering_number(acc, eps))
    return tuple(sizes)


def _growth_witness(family: FuzzyFamily, label: str) -> str:
    return f"net size strictly increasing along {label} (last member {family.names[-1]})"


def tb_end_report(
    family: FuzzyFamily, eps: float, alphas: Sequence[float], window: int | None = None
) -> Certificate:
    """Total-boundedness evidence for the endograph metric: per-level greedy
    net sizes of the union of member cuts.

    Generator-tagged families are judged by the trend of net sizes along the
    prefix unions: FAIL when strictly increasing over the last window, PASS
    when stabilized. Untagged families PASS with the union net size recorded.
    """
    if eps <= 0:
        raise InputError(f"eps must be positive, got {eps}")
    alphas = tuple(float(a) for a in alphas)
    for a in alphas:
        if not 0.0 < a <= 1.0:
            raise InputError(f"alpha {a} outside (0,1]")
    evidence: dict[str, tuple[float, ...]] = {}
    verdicts = []
    witness = None
    window = check_window(len(family.members), window)
    for a in alphas:
        cuts = [alpha_cut(u, a) for u in family.members]
        if family.generator is not None:
            series = _prefix_net_sizes(cuts, eps)
            v = trend_verdict(series, window, failing="increasing")
        else:
            series = (covering_number(union_family(cuts), eps),)
            v = Verdict.PASS
        evidence[f"net_size[alpha={fmt(a)}]"] = tuple(float(s) for s in series)
        verdicts.append(v)
        if v is Verdict.FAIL and witness is None:
            witness = f"alpha={fmt(a)}: " + _growth_witness(family, family.generator.kind)
    verdict = combine_verdicts(verdicts)
    return Certificate(kind="TB_END", verdict=verdict, evidence=evidence, witness=witness)


def tb_send_report(family: FuzzyFamily, eps: float, window: int | None = None) -> Certificate:
    """Total-boundedness evidence for the sendograph metric: greedy net sizes
    of the union of member supports (the 0-cuts), same stabilization rule."""
    if eps <= 0:
        raise InputError(f"eps must be positive, got {eps}")
    supports = [support(u) for u in family.members]
    window = check_window(len(family.members), window)
    if family.generator is not None:
        series = _prefix_net_sizes(supports, eps)
        verdict = trend_verdict(series, window, failing="increasing")
    else:
        series = (covering_number(union_family(supports), eps),)
        verdict = Verdict.PASS
    witness = None
    if verdict is Verdict.FAIL:
        witness = "support union: " + _growth_witness(family, family.generator.kind)
    return Certificate(
        kind="TB_SEND",
        verdict=verdict,
        evidence={"net_size[support]": tuple(float(s) for s in series)},
        witness=witness,
    )


def _member_modulus(u: StepFuzzySet, eps: float) -> float:
    """Largest stored level m such that every cut at a level <= m stays
    within eps of the support. The lowest level always qualifies."""
    supp = support(u)
    best = None
    for a, cut in reversed(u.levels):
        if hausdorff(cut, supp) < eps:
            best = a
        else:
            break
    assert best is not None
    return best


def erc_modulus(family: FuzzyFamily, eps: float, window: int | None = None) -> Certificate:
    """Equi-right-continuity at 0: per-member modulus series and the family
    modulus (their minimum).

    Generator-tagged families FAIL when the modulus series is strictly
    decreasing over the last window (tending to 0 along the parameter)."""
    if eps <= 0:
        raise InputError(f"eps must be positive, got {eps}")
    moduli = tuple(_member_modulus(u, eps) for u in family.members)
    window = check_window(len(family.members), window)
    if family.generator is not None:
        verdict = trend_verdict(moduli, window, failing="decreasing")
    else:
        verdict = Verdict.PASS
    witness = None
    if verdict is Verdict.FAIL:
        witness = (
            f"modulus strictly decreasing along {family.generator.kind} "
            f"(members {family.names[-window]}..{family.names[-1]})"
        )
    return Certificate(
        kind="ERC",
        verdict=verdict,
        evidence={"modulus": moduli, "family_modulus": (min(moduli),)},
        witness=witness,
    )


_COMPLETENESS_NOTE = (
    "total boundedness certifies relative compactness only when the ambient "
    "space is complete"
)


def rel_compact_send_report(family: FuzzyFamily, eps: float, window: int | None = None) -> Certificate:
    """Relative-compactness surrogate for the sendograph metric: conjunction
    of the support total-boundedness report and the equi-right-continuity
    modulus. FAIL carries whichever witness failed."""
    tb = tb_send_report(family, eps, window)
    erc = erc_modulus(family, eps, window)
    verdict = combine_verdicts([tb.verdict, erc.verdict])
    witness = None
    if verdict is Verdict.FAIL:
        parts = []
        if tb.verdict is Verdict.FAIL:
            parts.append(f"TB: {tb.witness}")
        if erc.verdict is Verdict.FAIL:
            parts.append(f"ERC: {erc.witness}")
        witness = "; ".join(parts)
    evidence = {f"tb_{k}": v for k, v in tb.evidence.items()}
    evidence.update({f"erc_{k}": v for k, v in erc.evidence.items()})
    return Certificate(
        kind="REL_COMPACT_SEND",
        verdict=verdict,
        evidence=evidence,
        witness=witness,
        note=_COMPLETENESS_NOTE,
    )


def closedness_witness(
    family: FuzzyFamily, candidate: StepFuzzySet, metric: str, tol: float
) -> Certificate:
    """Witness non-closedness: a candidate within tol of the family under the
    chosen metric ("end" or "send") that is not a member in exact
    representation. PASS means no witness was produced, never a closedness
    proof."""
    if metric == "end":
        dist = endograph_metric
    elif metric == "send":
        dist = sendograph_metric
    else:
        raise InputError(f"metric must be 'end' or 'send', got {metric!r}")
    if tol <= 0:
        raise InputError(f"tol must be positive, got {tol}")
    if candidate.space != family.members[0].space:
        raise InputError("candidate lives in a different space")
    distances = tuple(dist(candidate, u) for u in family.members)
    best = min(distances)
    nearest = family.names[distances.index(best)]
    is_member = any(same_representation(candidate, u) for u in family.members)
    evidence = {"distance": distances, "min_distance": (best,)}
    note = None
    gen = family.generator
    if gen is not None and gen.kind == "crisp_intervals" and len(gen.params) >= 2:
        evidence["discretization_bound"] = ((gen.params[1] - gen.params[0]) / 2.0,)
        note = "interval members discretized; H error at most the recorded discretization_bound"
    if best <= tol and not is_member:
        return Certificate(
            kind="CLOSEDNESS_WITNESS",
            verdict=Verdict.FAIL,
            evidence=evidence,
            witness=f"candidate within {fmt(best)} of member {nearest} but not a member",
            note=note,
        )
    return Certificate(kind="CLOSEDNESS_WITNESS", verdict=Verdict.PASS, evidence=evidence, note=note)


def cauchy_tail_profile(
    seq: Sequence[StepFuzzySet],
    metric: str,
    window: int | None = None,
    tol: float = 1e-3,
) -> Certificate:
    """Cauchy evidence for a fuzzy-set sequence under "end" or "send".

    residual[n] = max distance from member n to any later member. PASS when
    residuals are nonincreasing and the last member sits within tol of the
    tail window; FAIL when the last member stays 2*tol away from the tail or
    residuals increase.
    """
    if len(seq) < 3:
        raise InputError("need at least 3 members")
    if metric == "end":
        dist = endograph_metric
    elif metric == "send":
        dist = sendograph_metric
    else:
        raise InputError(f"metric must be 'end' or 'send', got {metric!r}")
    window = check_window(len(seq), window)
    n = len(seq)
    residuals = []
    for i in range(n):
        later = [dist(seq[i], seq[j]) for j in range(i + 1, n)]
        residuals.append(max(later) if later else 0.0)
    monotone = all(b <= a + 1e-9 for a, b in zip(residuals, residuals[1:]))
    prox = max(dist(seq[-1], seq[j]) for j in range(n - window, n))
    evidence = {"residual": tuple(residuals), "tail_proximity": (prox,)}
    if monotone and prox < tol:
        return Certificate(kind="CAUCHY_LIMIT", verdict=Verdict.PASS, evidence=evidence)
    if not monotone:
        bad = next(i for i, (a, b) in enumerate(zip(residuals, residuals[1:])) if b > a + 1e-9)
        return Certificate(
            kind="CAUCHY_LIMIT",
            verdict=Verdict.FAIL,
            evidence=evidence,
            witness=f"residual increases at step {bad + 1}",
        )
    if prox >= 2 * tol:
        return Certificate(
            kind="CAUCHY_LIMIT",
            verdict=Verdict.FAIL,
            evidence=evidence,
            witness=f"last member stays {fmt(prox)} away from the tail window",
        )
    return Certificate(kind="CAUCHY_LIMIT", verdict=Verdict.INCONCLUSIVE, evidence=evidence)
