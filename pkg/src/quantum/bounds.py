"""
CQC relation and the bounds derived from it.

For a state rho and a quadruple (Q^A, R^A, Q^B, R^B) with each party's pair
mutually unbiased, the complementary-quantum correlation relation reads

    H(Q^A:Q^B) + H(R^A:R^B) <= I(A:B).

`evaluate` computes both sides together with the residual uncertainties,
the classical Berta bounds, the one-time-pad key-rate quantities and the
witnesses. A negative gap is reported, never asserted away: below
-1e-7 bits it is a counterexample candidate, in (-1e-7, 0) numerical noise.
"""
import logging
import math
from typing import Optional, Sequence, Tuple, Union


from src.config import settings
from src.errors import DimensionMismatch, MubViolation, ParamOutOfRange
from src.linalg.core import Subsystem, partial_trace
from src.models.measurement import MUB_TOL, BasisQuadruple, ProjectiveBasis, overlap_deviation
from src.models.report import CqcReport, GapVerdict, WitnessResult
from src.models.state import DensityMatrix
from src.quantum.information import (
    classical_conditional_entropy,
    classical_mutual_information,
    clip_tolerance,
    entropy_of_spectrum,
    marginal_entropies,
    mutual_information_from_entropies,
    subsystem_entropies,
    von_neumann_entropy,
)
from src.quantum.measurement import joint_distribution, outcome_distribution

logger = logging.getLogger(__name__)

WITNESS_TOL = 1e-9


def _check_quadruple(rho: DensityMatrix, bases: BasisQuadruple) -> None:
    if bases.dim_a != rho.dim_a or bases.dim_b != rho.dim_b:
        raise DimensionMismatch(
            f"quadruple {bases.dim_a}x{bases.dim_b} does not match state {rho.dim_a}x{rho.dim_b}"
        )


def classify_gap(gap: float, threshold: Optional[float] = None) -> GapVerdict:
    threshold = settings.violation_threshold if threshold is None else threshold
    if gap < threshold:
        return GapVerdict.COUNTEREXAMPLE
    if gap < 0.0:
        return GapVerdict.NOISE_NEGATIVE
    return GapVerdict.SATISFIED


def correlation_sum(rho: DensityMatrix, bases: BasisQuadruple) -> Tuple[float, float]:
    """(H(Q^A:Q^B), H(R^A:R^B)) for any quadruple, unbiased or not"""
    _check_quadruple(rho, bases)
    mi_qq = classical_mutual_information(joint_distribution(rho, bases.qa, bases.qb))
    mi_rr = classical_mutual_information(joint_distribution(rho, bases.ra, bases.rb))
    return mi_qq, mi_rr


def residual_uncertainty(
    rho: DensityMatrix,
    side: Union[Subsystem, str],
    q: ProjectiveBasis,
    r: ProjectiveBasis,
) -> float:
    """
    H(Q) + H(R) - log2(dim) - S(side) on the reduced state of `side`.

    Zero when the side is maximally mixed or when Q or R commutes with the
    reduced state. The value is returned unclamped.
    """
    side = Subsystem(side)
    dim = rho.dim_a if side is Subsystem.A else rho.dim_b
    if q.dim != dim or r.dim != dim:
        raise DimensionMismatch(f"bases of dims {q.dim}/{r.dim} on a side of dim {dim}")
    deviation = overlap_deviation(q, r)
    if deviation > MUB_TOL:
        raise MubViolation(f"{q.label}/{r.label} deviate from unbiasedness by {deviation:.3e}")

    reduced = partial_trace(rho.matrix, rho.dim_a, rho.dim_b, keep=side)
    h_q = entropy_of_spectrum(outcome_distribution(reduced, q))
    h_r = entropy_of_spectrum(outcome_distribution(reduced, r))
    return h_q + h_r - math.log2(dim) - von_neumann_entropy(reduced)


def berta_classical_bound(
    rho: DensityMatrix, bases: BasisQuadruple, side: Union[Subsystem, str] = Subsystem.A
) -> float:
    """
    S(s) + log2(dim s) - H(Q^s|Q^t) - H(R^s|R^t) for s = side, t = the other.

    Never exceeds the mutual-information sum; the difference is the residual
    uncertainty of `side`.
    """
    _check_quadruple(rho, bases)
    side = Subsystem(side)
    table_q = joint_distribution(rho, bases.qa, bases.qb)
    table_r = joint_distribution(rho, bases.ra, bases.rb)
    reduced = partial_trace(rho.matrix, rho.dim_a, rho.dim_b, keep=side)
    dim = rho.dim_a if side is Subsystem.A else rho.dim_b
    other = side.other
    return (
        von_neumann_entropy(reduced)
        + math.log2(dim)
        - classical_conditional_entropy(table_q, conditioned_on=other)
        - classical_conditional_entropy(table_r, conditioned_on=other)
    )


def eve_information_bound(mi_sum: float, dim_a: int) -> float:
    """Upper bound 2 log2(N^A) - mi_sum on I(A:E); not clamped"""
    if not mi_sum >= 0:
        raise ParamOutOfRange(f"mutual-information sum must be >= 0, got {mi_sum}")
    if dim_a < 1:
        raise ParamOutOfRange(f"dimension must be positive, got {dim_a}")
    return 2.0 * math.log2(dim_a) - mi_sum


def key_rate_lower_bound(mi_sum: float, dim: int) -> float:
    """max(0, 2 (mi_sum - log2 dim)): the one-time-pad rate R >= 2 epsilon"""
    if not mi_sum >= 0:
        raise ParamOutOfRange(f"mutual-information sum must be >= 0, got {mi_sum}")
    if dim < 1:
        raise ParamOutOfRange(f"dimension must be positive, got {dim}")
    return max(0.0, 2.0 * (mi_sum - math.log2(dim)))


def entanglement_witness(mi_sum: float, marginal_entropies: Sequence[float]) -> WitnessResult:
    """
    mi_sum above the least marginal classical entropy implies a negative
    conditional quantum entropy on some side (if the CQC relation holds).
    """
    threshold = min(marginal_entropies)
    margin = mi_sum - threshold
    return WitnessResult(detected=margin > WITNESS_TOL, margin=margin)


def berta_entanglement_witness(mi_sum: float, h_q: float, h_r: float, dim: int) -> WitnessResult:
    """Weaker criterion from Berta's relation alone: mi_sum > H(Q) + H(R) - log2(dim)"""
    margin = mi_sum - (h_q + h_r - math.log2(dim))
    return WitnessResult(detected=margin > WITNESS_TOL, margin=margin)


def steering_witness(mi_sum: float, dim: int) -> WitnessResult:
    """Symmetric EPR steering demonstrated when mi_sum exceeds log2(dim)"""
    if dim < 1:
        raise ParamOutOfRange(f"dimension must be positive, got {dim}")
    margin = mi_sum - math.log2(dim)
    return WitnessResult(detected=margin > WITNESS_TOL, margin=margin)


def evaluate(
    rho: DensityMatrix,
    bases: BasisQuadruple,
    violation_threshold: Optional[float] = None,
) -> CqcReport:
    """
    Evaluate the CQC relation and every derived quantity.

    Raises:
        DimensionMismatch: quadruple and state dimensions differ
        MubViolation: a party's Q/R pair is not mutually unbiased
    """
    _check_quadruple(rho, bases)
    bases.check_unbiased()

    dim_a, dim_b = rho.dim_a, rho.dim_b
    table_q = joint_distribution(rho, bases.qa, bases.qb)
    table_r = joint_distribution(rho, bases.ra, bases.rb)

    mi_qq = classical_mutual_information(table_q)
    mi_rr = classical_mutual_information(table_r)
    mi_sum = mi_qq + mi_rr

    s_a, s_b, s_ab = subsystem_entropies(rho)
    qmi = mutual_information_from_entropies(s_a, s_b, s_ab, tol=clip_tolerance(dim_a, dim_b))
    gap = qmi - mi_sum

    h_qa, h_qb = marginal_entropies(table_q)
    h_ra, h_rb = marginal_entropies(table_r)
    log_a, log_b = math.log2(dim_a), math.log2(dim_b)

    residual_a = h_qa + h_ra - log_a - s_a
    residual_b = h_qb + h_rb - log_b - s_b

    h_qa_given_qb = classical_conditional_entropy(table_q, conditioned_on=Subsystem.B)
    h_ra_given_rb = classical_conditional_entropy(table_r, conditioned_on=Subsystem.B)
    h_qb_given_qa = classical_conditional_entropy(table_q, conditioned_on=Subsystem.A)
    h_rb_given_ra = classical_conditional_entropy(table_r, conditioned_on=Subsystem.A)
    berta_a = s_a + log_a - h_qa_given_qb - h_ra_given_rb
    berta_b = s_b + log_b - h_qb_given_qa - h_rb_given_ra

    key_a = key_rate_lower_bound(mi_sum, dim_a)
    key_b = key_rate_lower_bound(mi_sum, dim_b)
    log_max = max(log_a, log_b)

    entangled = entanglement_witness(mi_sum, (h_qa, h_ra, h_qb, h_rb))
    berta_entangled = berta_entanglement_witness(mi_sum, h_qa, h_ra, dim_a).detected or \
        berta_entanglement_witness(mi_sum, h_qb, h_rb, dim_b).detected
    # steering must beat both local thresholds
    steering = steering_witness(mi_sum, max(dim_a, dim_b))

    return CqcReport(
        dim_a=dim_a,
        dim_b=dim_b,
        basis_label=bases.label,
        mi_qq=mi_qq,
        mi_rr=mi_rr,
        mi_sum=mi_sum,
        qmi=qmi,
        gap=gap,
        verdict=classify_gap(gap, violation_threshold),
        h_qa=h_qa,
        h_ra=h_ra,
        h_qb=h_qb,
        h_rb=h_rb,
        s_a=s_a,
        s_b=s_b,
        s_ab=s_ab,
        cond_a_given_b=s_ab - s_b,
        cond_b_given_a=s_ab - s_a,
        residual_a=residual_a,
        residual_b=residual_b,
        berta_bound_a=berta_a,
        berta_bound_b=berta_b,
        eve_bound=eve_information_bound(mi_sum, dim_a),
        eve_bound_b=eve_information_bound(mi_sum, dim_b),
        eve_bound_tight=2.0 * s_a - mi_sum,
        epsilon=max(0.0, mi_sum - log_max),
        key_rate_lower_a=key_a,
        key_rate_lower_b=key_b,
        key_rate_lower=min(key_a, key_b),
        entangled_witness=entangled.detected,
        entangled_margin=entangled.margin,
        berta_entangled_witness=berta_entangled,
        steering_witness=steering.detected,
        steering_margin=steering.margin,
        steering_feasible=qmi > log_max + WITNESS_TOL,
    )


def witness_is_sound(rho: DensityMatrix, tol: float = WITNESS_TOL) -> bool:
    """Direct check behind a positive entanglement witness: S(A|B) or S(B|A) below tol"""
    s_a, s_b, s_ab = subsystem_entropies(rho)
    return (s_ab - s_b) < tol or (s_ab - s_a) < tol


__all__ = [
    "classify_gap",
    "correlation_sum",
    "residual_uncertainty",
    "berta_classical_bound",
    "eve_information_bound",
    "key_rate_lower_bound",
    "entanglement_witness",
    "berta_entanglement_witness",
    "steering_witness",
    "evaluate",
    "witness_is_sound",
]
