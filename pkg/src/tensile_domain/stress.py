"""Plane-stress kernel for electrically activated incompressible membranes.

The through-thickness stress is eliminated with ``t3 = 0``; the electric
field enters only through the activation parameter ``k_v = eps V^2/(2 h^2)``
as the scalar ``2 k_v l1^2 l2^2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from . import kernels
from .errors import InvalidLoad, InvalidState, MaterialEvaluationError, NotAvailable
from .material import MaterialModel

# on-boundary tolerance, stretch units
TAU_B = 1e-9


class Regime(str, enum.Enum):
    TENSE = "tense"
    WRINKLED_1 = "wrinkled-along-1"
    WRINKLED_2 = "wrinkled-along-2"
    SLACK = "slack"

    def __str__(self):
        return self.value


_REGIME_CODES = {
    kernels.TENSE: Regime.TENSE,
    kernels.WRINKLED_1: Regime.WRINKLED_1,
    kernels.WRINKLED_2: Regime.WRINKLED_2,
    kernels.SLACK: Regime.SLACK,
}


def regime_from_code(code: int) -> Regime:
    return _REGIME_CODES[int(code)]


@dataclass(frozen=True)
class StretchState:
    """In-plane principal stretches; the thickness stretch follows from incompressibility."""

    lambda1: float
    lambda2: float

    def __post_init__(self):
        for name in ("lambda1", "lambda2"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise InvalidState(f"{name} must be positive and finite, got {v!r}")

    @property
    def lambda3(self) -> float:
        return 1.0 / (self.lambda1 * self.lambda2)

    def swapped(self) -> "StretchState":
        return StretchState(self.lambda2, self.lambda1)


StateLike = Union[StretchState, Tuple[float, float]]


def as_state(s: StateLike) -> StretchState:
    if isinstance(s, StretchState):
        return s
    l1, l2 = s
    return StretchState(float(l1), float(l2))


@dataclass(frozen=True)
class ElectricLoad:
    """Electric loading, either as (permittivity, voltage, thickness) or as ``k_v`` directly.

    ``permittivity`` is the absolute permittivity ``eps0 * eps_r`` and
    ``thickness`` the reference (undeformed) thickness.
    """

    permittivity: Optional[float] = None
    voltage: Optional[float] = None
    thickness: Optional[float] = None
    k_v: Optional[float] = None

    def __post_init__(self):
        triple = (self.permittivity, self.voltage, self.thickness)
        given = [v is not None for v in triple]
        if self.k_v is not None:
            if any(given):
                raise InvalidLoad("give either k_v or (permittivity, voltage, thickness), not both")
            if not (math.isfinite(self.k_v) and self.k_v >= 0):
                raise InvalidLoad(f"k_v must be non-negative and finite, got {self.k_v!r}")
            return
        if not all(given):
            raise InvalidLoad("permittivity, voltage and thickness are all required")
        if not (math.isfinite(self.permittivity) and self.permittivity > 0):
            raise InvalidLoad(f"permittivity must be positive, got {self.permittivity!r}")
        if not (math.isfinite(self.thickness) and self.thickness > 0):
            raise InvalidLoad(f"thickness must be positive, got {self.thickness!r}")
        if not (math.isfinite(self.voltage) and self.voltage >= 0):
            raise InvalidLoad(f"voltage must be non-negative, got {self.voltage!r}")

    @property
    def activation(self) -> float:
        return activation_parameter(self)


def activation_parameter(load: ElectricLoad) -> float:
    """Electric energy density ``eps V^2 / (2 h^2)`` used as the loading scalar."""
    if load.k_v is not None:
        return float(load.k_v)
    return load.permittivity * load.voltage ** 2 / (2.0 * load.thickness ** 2)


@dataclass(frozen=True)
class PlaneStress:
    """In-plane principal Cauchy stresses with their regime.

    ``diagnostic`` is set when relaxation could not produce a uniaxial state
    (``"no-natural-width"`` past the asymptote, ``"uniaxial-not-tensile"``
    when the uniaxial stress is not positive); the regime is then slack.
    """

    t1: float
    t2: float
    regime: Regime
    on_boundary: bool = False
    diagnostic: Optional[str] = None


def _check_kv(k_v: float) -> float:
    k_v = float(k_v)
    if not (math.isfinite(k_v) and k_v >= 0):
        raise InvalidLoad(f"k_v must be non-negative and finite, got {k_v!r}")
    return k_v


def _generic_stress(model: MaterialModel, l1: float, l2: float, k_v: float) -> Tuple[float, float]:
    b1 = model.beta1(l1, l2)
    b2 = model.beta2(l1, l2)
    try:
        b1 = float(b1)
        b2 = float(b2)
    except (TypeError, ValueError):
        raise MaterialEvaluationError(f"response functions returned non-numeric values at ({l1}, {l2})")
    if not (math.isfinite(b1) and math.isfinite(b2)):
        raise MaterialEvaluationError(
            f"response functions not finite at ({l1!r}, {l2!r}): beta1={b1!r}, beta2={b2!r}"
        )
    a = l1 * l1
    b = l2 * l2
    ab = a * b
    l3sq = 1.0 / ab
    t1 = b1 * (a - l3sq) + b2 * (1.0 / a - ab) - 2.0 * k_v * ab
    t2 = b1 * (b - l3sq) + b2 * (1.0 / b - ab) - 2.0 * k_v * ab
    return t1, t2


def stresses(model: MaterialModel, l1: float, l2: float, k_v: float) -> Tuple[float, float]:
    """Raw ``(t1, t2)`` without classification; no argument validation."""
    if model.is_constant:
        return kernels.mr_stress(model.c1, model.c2, k_v, l1, l2)
    return _generic_stress(model, l1, l2, k_v)


def reduced_energy(model: MaterialModel, s: StateLike, k_v: float) -> float:
    """Stored energy minus electric energy density, per unit reference volume.

    ``W = c1 (I1 - 3) + c2 (I2 - 3) - k_v l1^2 l2^2``; the stresses satisfy
    ``t_i = l_i dW/dl_i``.  Only defined for Mooney-Rivlin models.
    """
    if not model.is_constant:
        raise NotAvailable("reduced energy needs constant response functions")
    s = as_state(s)
    k_v = _check_kv(k_v)
    a = s.lambda1 ** 2
    b = s.lambda2 ** 2
    i1 = a + b + 1.0 / (a * b)
    i2 = 1.0 / a + 1.0 / b + a * b
    return model.c1 * (i1 - 3.0) + model.c2 * (i2 - 3.0) - k_v * a * b


def _margins(model, l1, l2, k_v):
    from .domain import natural_width

    w1 = natural_width(model, l2, k_v)
    w2 = natural_width(model, l1, k_v)
    m1 = -math.inf if w1 is None else l1 - w1
    m2 = -math.inf if w2 is None else l2 - w2
    return w1, w2, m1, m2


def _evaluate(model: MaterialModel, s: StretchState, k_v: float):
    """Shared path of plane_stress/classify/relaxed_stress.

    Returns ``(t1, t2, r1, r2, regime, flags)`` with the kernels' flag bits.
    """
    l1, l2 = s.lambda1, s.lambda2
    if model.is_constant:
        t1, t2, r1, r2, code, flags = kernels.mr_point(model.c1, model.c2, k_v, l1, l2, TAU_B)
        return t1, t2, r1, r2, regime_from_code(code), flags

    t1, t2 = _generic_stress(model, l1, l2, k_v)
    w1, w2, m1, m2 = _margins(model, l1, l2, k_v)
    flags = kernels.FLAG_BOUNDARY if (abs(m1) <= TAU_B or abs(m2) <= TAU_B) else 0
    tense1, tense2 = m1 > TAU_B, m2 > TAU_B
    if tense1 and tense2:
        return t1, t2, t1, t2, Regime.TENSE, flags
    if tense1 or tense2:
        regime = Regime.WRINKLED_1 if tense1 else Regime.WRINKLED_2
        width = w2 if tense1 else w1
        if width is None:
            return t1, t2, 0.0, 0.0, regime, flags | kernels.FLAG_NO_WIDTH
        if tense1:
            r = _generic_stress(model, l1, width, k_v)[0]
        else:
            r = _generic_stress(model, width, l2, k_v)[1]
        if r <= 0.0:
            return t1, t2, 0.0, 0.0, regime, flags | kernels.FLAG_UNIAXIAL
        return (t1, t2, r, 0.0, regime, flags) if tense1 else (t1, t2, 0.0, r, regime, flags)
    return t1, t2, 0.0, 0.0, Regime.SLACK, flags


def plane_stress(model: MaterialModel, s: StateLike, k_v: float) -> PlaneStress:
    """Principal stresses ``(t1, t2)`` with ``t3 = 0`` imposed.

    For Mooney-Rivlin::

        t1 = 2 [c1 (l1^2 - l1^-2 l2^-2) - c2 (l1^-2 - l1^2 l2^2) - k_v l1^2 l2^2]

    and symmetrically for ``t2``.  Generic models use the response-function
    form with the pressure eliminated through ``t3 = 0``.  The regime tag is
    that of :func:`classify`.
    """
    s = as_state(s)
    k_v = _check_kv(k_v)
    t1, t2, _, _, regime, flags = _evaluate(model, s, k_v)
    return PlaneStress(t1, t2, regime, bool(flags & kernels.FLAG_BOUNDARY))


def classify(model: MaterialModel, s: StateLike, k_v: float) -> Regime:
    """Tense / wrinkled / slack from the natural-width test.

    Direction ``i`` is in tension when its stretch exceeds the natural
    width induced by the other stretch by more than ``TAU_B``.  A missing
    natural width (past the asymptote) counts as not in tension.
    """
    return plane_stress(model, s, k_v).regime


def on_boundary(model: MaterialModel, s: StateLike, k_v: float) -> bool:
    """Whether either stretch is within ``TAU_B`` of its natural width."""
    return plane_stress(model, s, k_v).on_boundary


def relaxed_stress(model: MaterialModel, s: StateLike, k_v: float) -> PlaneStress:
    """Tension-field relaxed stresses.

    Wrinkled states carry the uniaxial stress of the tensioned direction at
    its natural width; slack states carry nothing.  If the uniaxial state
    does not exist or is not tensile the result is slack with a diagnostic.
    """
    s = as_state(s)
    k_v = _check_kv(k_v)
    _, _, r1, r2, regime, flags = _evaluate(model, s, k_v)
    diagnostic = None
    if flags & kernels.FLAG_NO_WIDTH:
        regime, diagnostic = Regime.SLACK, "no-natural-width"
    elif flags & kernels.FLAG_UNIAXIAL:
        regime, diagnostic = Regime.SLACK, "uniaxial-not-tensile"
    return PlaneStress(r1, r2, regime, bool(flags & kernels.FLAG_BOUNDARY), diagnostic)


def diagonal_stress(model: MaterialModel, lam: float, k_v: float) -> float:
    """Equibiaxial stress ``t1 = t2`` at ``l1 = l2 = lam``."""
    return stresses(model, lam, lam, k_v)[0]
