"""Entropy-based replacement for the interference phase term.

The cosine of a phase difference has no geometric derivation in this model,
so the interference degree is computed from the amplitude products instead.
For a query with exactly one unobserved binary variable, each query outcome X
yields a pair (alpha_X, beta_X): the amplitude products with the unobserved
variable in its first and second declared state. Each pair condenses to a
Belief Distance

    B_d = | alpha + (alpha - beta) / |alpha + beta - 1| |

valid when alpha is the argument nearer 0.5 (the arguments swap roles
otherwise: the distance is symmetric). The distances over all query outcomes
then act like masses whose negated Deng entropy is the Belief Degree

    D_b = sum over distances B of  B * log2( B / (2^n - 1) )

with n the number of unobserved variables, clamped into [-1, 1]. The degree
is shared by every outcome of the query.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .bayesnet import Assignment
from .errors import SingularDenominatorError, UnsupportedStructureError
from .quantum import AmplitudeNetwork, completion_magnitudes

# Below this, |alpha + beta - 1| counts as zero.
SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class OutcomeVectorPair:
    """Amplitude products for one query outcome across the unobserved variable's states.

    alpha belongs to the unobserved variable's first declared outcome and beta
    to its second; belief_distance applies its own role swap, so this order
    carries no modelling weight.
    """

    outcome: str
    alpha: float
    beta: float


def extract_outcome_vectors(
    anet: AmplitudeNetwork, query: str, evidence: Assignment | None = None
) -> list[OutcomeVectorPair]:
    """One (alpha, beta) pair per query outcome, in the query's declared outcome order.

    Requires exactly one unobserved variable besides the query; anything else
    raises UnsupportedStructureError because the distance construction is
    defined on pairs only.
    """
    evidence = evidence or {}
    net = anet.net
    free = [n for n in net.names() if n != query and n not in evidence]
    if len(free) != 1:
        raise UnsupportedStructureError(
            f"query {query!r} leaves {len(free)} unobserved variables {free}; "
            "the degree heuristic needs exactly one"
        )
    magnitudes = completion_magnitudes(anet, query, evidence)
    return [
        OutcomeVectorPair(outcome, mags[0], mags[1])
        for outcome, mags in magnitudes.items()
    ]


def belief_distance(alpha: float, beta: float) -> float:
    """Belief Distance of an amplitude-product pair; symmetric in its arguments.

    The argument nearer 0.5 takes the alpha role (ties keep the given order).
    Equal arguments return themselves, including the fully ignorant pair
    (0.5, 0.5) -> 0.5. For alpha != beta with alpha + beta = 1 the denominator
    vanishes and SingularDenominatorError is raised. Results can exceed 1.
    """
    for value in (alpha, beta):
        if not math.isfinite(value) or value < 0.0 or value > 1.0:
            raise ValueError(f"amplitude products must lie in [0, 1], got {value!r}")
    if abs(alpha - 0.5) > abs(beta - 0.5):
        alpha, beta = beta, alpha
    denominator = abs(alpha + beta - 1.0)
    if denominator < SINGULAR_TOL:
        if alpha == beta:
            return 0.5
        raise SingularDenominatorError(
            f"|alpha + beta - 1| = {denominator!r} for pair ({alpha!r}, {beta!r})"
        )
    return abs(alpha + (alpha - beta) / denominator)


@dataclass(frozen=True)
class BeliefDegree:
    """An interference degree: raw entropy sum plus the value clamped to [-1, 1]."""

    value: float
    raw: float

    @property
    def clamped(self) -> bool:
        return self.value != self.raw


def belief_degree(distances: Sequence[float], num_unobserved: int = 1) -> BeliefDegree:
    """Condense Belief Distances into a single signed degree.

    Computes sum of B * log2(B / (2^num_unobserved - 1)) over the distances
    (zero distances contribute nothing) and clamps into [-1, 1]. Two distances
    of 0.5 give exactly -1, total destructive interference under ignorance.
    """
    if not distances:
        raise ValueError("at least one distance is required")
    if num_unobserved < 1:
        raise ValueError(f"num_unobserved must be >= 1, got {num_unobserved}")
    denominator = 2.0 ** num_unobserved - 1.0
    raw = math.fsum(
        b * math.log2(b / denominator) for b in distances if b > 0.0
    )
    return BeliefDegree(min(1.0, max(-1.0, raw)), raw)


def degree_for_query(
    anet: AmplitudeNetwork, query: str, evidence: Assignment | None = None
) -> BeliefDegree:
    """The full chain: outcome vectors -> distances -> degree, shared by all outcomes.

    num_unobserved is fixed at 1, matching the single-unobserved-variable
    regime extract_outcome_vectors enforces; belief_degree keeps the parameter
    open for experimentation outside this entry point.
    """
    pairs = extract_outcome_vectors(anet, query, evidence)
    distances = [belief_distance(p.alpha, p.beta) for p in pairs]
    return belief_degree(distances, num_unobserved=1)
