"""Entanglement-swapping network between three parties.

Two two-qubit states rho_AB and rho_BC are shared along a chain; the middle
party measures its pair (B1, B2) in the Bell basis and broadcasts the
outcome, leaving the outer parties in one of four conditional states.  The
retrieval predicate asks whether states inside the absolute
conditional-entropy class can be steered back out of it this way: both
inputs must satisfy S >= 1 while at least one conditional state does not.

Outcome labels follow the Bell convention fixed in states.bell_state:
(00, 01, 10, 11) <-> (psi+, psi-, phi+, phi-).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import is_acvenn
from .entropy import von_neumann
from .errors import DimensionMismatch
from .linalg import kron, partial_trace
from .states import DensityMatrix, bell_state
from .tolerances import PROB_FLOOR

OUTCOME_LABELS = ("00", "01", "10", "11")

_EYE2 = np.eye(2, dtype=complex)
# projectors I_A (x) |Bell><Bell|_{B1 B2} (x) I_C on the A B1 B2 C ordering
_PROJECTORS = tuple(
    kron(kron(_EYE2, bell_state(i).matrix), _EYE2) for i in range(4)
)


@dataclass(frozen=True)
class SwapOutcome:
    """One Bell-measurement branch: its label, probability, and the state
    Alice and Charlie share afterwards (None below the probability floor)."""

    label: str
    probability: float
    conditional_state: DensityMatrix | None


@dataclass(frozen=True)
class RetrievalReport:
    """Everything the retrieval predicate looked at."""

    input_entropies: tuple
    outcomes: tuple
    conditional_entropies: tuple
    reason: str


def _require_two_qubit(rho: DensityMatrix, name: str) -> None:
    if rho.dims != (2, 2):
        raise DimensionMismatch(f"{name} must have dims (2, 2), got {rho.dims}")


def swap_conditionals(rho_ab: DensityMatrix, rho_bc: DensityMatrix) -> list[SwapOutcome]:
    """The four post-measurement states of the outer pair (A, C).

    For each Bell projector P on (B1, B2): probability = Tr[(I x P x I) rho]
    and conditional = Tr_{B1 B2}[(I x P x I) rho (I x P x I)] / probability,
    with rho = rho_AB (x) rho_BC.
    """
    _require_two_qubit(rho_ab, "rho_ab")
    _require_two_qubit(rho_bc, "rho_bc")
    joint = kron(rho_ab.matrix, rho_bc.matrix)
    outcomes = []
    for label, proj in zip(OUTCOME_LABELS, _PROJECTORS):
        sandwiched = proj @ joint @ proj
        prob = float(np.real(np.trace(sandwiched)))
        if prob > PROB_FLOOR:
            reduced = partial_trace(sandwiched, [2, 2, 2, 2], keep=[0, 3]) / prob
            cond = DensityMatrix(reduced, (2, 2))
        else:
            cond = None
        outcomes.append(SwapOutcome(label, prob, cond))
    return outcomes


def retrieval_success(rho_ab: DensityMatrix, rho_bc: DensityMatrix) -> tuple[bool, RetrievalReport]:
    """Probabilistic retrieval out of the absolute regime.

    Succeeds when both inputs are inside the absolute conditional-entropy
    class (S >= 1) yet some Bell branch leaves the outer pair strictly
    outside it (S < 1).
    """
    in_ab, s_ab = is_acvenn(rho_ab)
    in_bc, s_bc = is_acvenn(rho_bc)
    if not (in_ab and in_bc):
        report = RetrievalReport((s_ab, s_bc), (), (), "input not in the absolute class")
        return False, report
    outcomes = swap_conditionals(rho_ab, rho_bc)
    entropies = tuple(
        von_neumann(o.conditional_state) if o.conditional_state is not None else None
        for o in outcomes
    )
    success = any(s is not None and s < 1.0 - 1e-12 for s in entropies)
    reason = (
        "some conditional state left the absolute class"
        if success
        else "every conditional state stayed inside the absolute class"
    )
    return success, RetrievalReport((s_ab, s_bc), tuple(outcomes), entropies, reason)
