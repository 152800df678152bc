"""Homogeneous actuation problems: free equibiaxial and prestretched membranes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional

from . import solvers
from .domain import CriticalPoint, critical_activation, natural_width, vertices
from .errors import UnboundedError
from .material import MaterialModel, reference_modulus
from .stress import TAU_B, _check_kv


@dataclass(frozen=True)
class EquilibriumState:
    stretch: float
    branch: str


@dataclass(frozen=True)
class EquilibriumBranch:
    """Stress-free equibiaxial states at one activation.

    The smaller stretch is the ``lower`` (actuation) branch, the larger the
    ``upper`` one; when D is unbounded only the lower state exists.
    """

    k_v: float
    states: List[EquilibriumState]

    def stretches(self) -> List[float]:
        return [s.stretch for s in self.states]

    def to_record(self) -> dict:
        return {"k_v": self.k_v, "states": [{"lambda": s.stretch, "branch": s.branch} for s in self.states]}


@dataclass(frozen=True)
class PrestretchSolution:
    """Equilibrium with ``lambda2`` clamped at ``prestretch`` and ``t1 = 0``.

    ``margin`` is ``prestretch - nu(lambda1)``: non-negative (within
    ``TAU_B``) when the state lies in the closure of D.
    """

    prestretch: float
    k_v: float
    lambda1: Optional[float]
    feasible: bool
    margin: Optional[float] = None
    diagnostic: Optional[str] = None

    def to_record(self) -> dict:
        return {
            "prestretch": self.prestretch,
            "k_v": self.k_v,
            "lambda1": self.lambda1,
            "feasible": self.feasible,
            "margin": self.margin,
            "diagnostic": self.diagnostic,
        }


class OptimalPrestretch(NamedTuple):
    prestretch: float
    activation: float


def free_actuation(model: MaterialModel, k_v: float) -> EquilibriumBranch:
    """Equibiaxial equilibria of an unclamped membrane (the vertices of D)."""
    k_v = _check_kv(k_v)
    roots = vertices(model, k_v)
    states = []
    for i, lam in enumerate(roots):
        if i == 0:
            branch = "lower"
        elif i == len(roots) - 1:
            branch = "upper"
        else:
            branch = "intermediate"
        states.append(EquilibriumState(lam, branch))
    return EquilibriumBranch(k_v, states)


def pull_in(model: MaterialModel) -> CriticalPoint:
    """Pull-in activation: beyond it no equibiaxial equilibrium exists."""
    return critical_activation(model)


def _check_prestretch(prestretch):
    prestretch = float(prestretch)
    if not (math.isfinite(prestretch) and prestretch > 0):
        raise ValueError(f"prestretch must be positive and finite, got {prestretch!r}")
    return prestretch


def prestretched_actuation(model: MaterialModel, prestretch: float, k_v: float) -> PrestretchSolution:
    """Stretch along 1 of a membrane clamped at ``prestretch`` along 2.

    ``lambda1`` is the natural width of the prestretch (``t1 = 0``); the
    state is feasible when it lies in the closure of D.
    """
    prestretch = _check_prestretch(prestretch)
    k_v = _check_kv(k_v)
    lam1 = natural_width(model, prestretch, k_v)
    if lam1 is None:
        return PrestretchSolution(prestretch, k_v, None, False, None, "prestretch beyond asymptote")
    width = natural_width(model, lam1, k_v)
    if width is None:
        return PrestretchSolution(prestretch, k_v, lam1, False, None, "transverse width beyond asymptote")
    margin = prestretch - width
    return PrestretchSolution(prestretch, k_v, lam1, margin >= -TAU_B, margin)


def max_activation_for_prestretch(model: MaterialModel, prestretch: float, tol: Optional[float] = None) -> float:
    """Largest ``k_v`` at which the prestretched state stays feasible.

    Bisection on the feasibility predicate over ``[0, 1e3 max(mu, 1)]``;
    ``tol`` defaults to ``1e-9 max(mu, 1)`` and ``tol=0`` bisects to
    machine resolution.  Returns 0 when the prestretch is infeasible even
    without voltage.
    """
    prestretch = _check_prestretch(prestretch)
    scale = reference_modulus(model)
    tol = 1e-9 * scale if tol is None else tol
    k_cap = 1e3 * scale

    def feasible(k):
        return prestretched_actuation(model, prestretch, k).feasible

    if not feasible(0.0):
        return 0.0
    if feasible(k_cap):
        raise UnboundedError("prestretched state feasible at the activation cap", k_cap=k_cap)
    lo, hi = 0.0, k_cap
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo


def optimal_prestretch(model: MaterialModel, xtol: float = 1e-7) -> OptimalPrestretch:
    """Prestretch maximising the survivable activation.

    Golden-section search over ``[1, 4 lambda_crit]`` of
    :func:`max_activation_for_prestretch`; it lands on the coalescence point
    of the vertices.
    """
    cp = critical_activation(model)
    best, value = solvers.golden_max(
        lambda p: max_activation_for_prestretch(model, p, tol=0.0),
        1.0, 4.0 * cp.lambda_crit, xtol,
    )
    return OptimalPrestretch(best, value)
