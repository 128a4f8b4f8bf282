"""Physical parameters and the dimensionless reduction.

Everything downstream works in dimensionless variables

    t' = gamma * t,   p' = p / sqrt(kTm),   x' = sqrt(kTm) x / hbar,
    V'(x') = V(x) / kT,

so that the whole model is controlled by the single parameter
eps = kT / (gamma * hbar).  Small eps is the quantum regime, large eps
the classical one.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Tuple

import numpy as np

HBAR = 1.054571817e-34      # J s
K_BOLTZMANN = 1.380649e-23  # J / K


class ParameterError(ValueError):
    """Raised for non-physical parameter values."""


_POTENTIAL_KINDS = ("free", "harmonic", "double_well", "polynomial")


@dataclass(frozen=True)
class PotentialSpec:
    """External potential V together with its analytic gradient.

    ``coeffs`` are interpreted in whatever unit system the instance was
    built for: SI inside a PhysicalParams, dimensionless inside a
    DimensionlessParams.  Variants:

    - free:            V = 0
    - harmonic(w):     V(x) = w^2 x^2 / 2
    - double_well(a,b):V(x) = -a x^2 + b x^4
    - polynomial(c):   V(x) = sum_j c[j] x^j
    """

    kind: str
    coeffs: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in _POTENTIAL_KINDS:
            raise ParameterError(f"unknown potential kind {self.kind!r}")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @classmethod
    def free(cls) -> "PotentialSpec":
        return cls("free")

    @classmethod
    def harmonic(cls, omega: float) -> "PotentialSpec":
        if omega <= 0:
            raise ParameterError("harmonic frequency must be positive")
        return cls("harmonic", (omega,))

    @classmethod
    def double_well(cls, a: float, b: float) -> "PotentialSpec":
        if b <= 0:
            raise ParameterError("double-well quartic coefficient must be positive")
        return cls("double_well", (a, b))

    @classmethod
    def polynomial(cls, coeffs) -> "PotentialSpec":
        return cls("polynomial", tuple(coeffs))

    def _poly(self) -> np.ndarray:
        if self.kind == "free":
            return np.zeros(1)
        if self.kind == "harmonic":
            (w,) = self.coeffs
            return np.array([0.0, 0.0, 0.5 * w * w])
        if self.kind == "double_well":
            a, b = self.coeffs
            return np.array([0.0, 0.0, -a, 0.0, b])
        return np.asarray(self.coeffs, dtype=float)

    def value(self, x):
        return np.polynomial.polynomial.polyval(x, self._poly())

    def grad(self, x):
        return np.polynomial.polynomial.polyval(
            x, np.polynomial.polynomial.polyder(self._poly()))


@dataclass(frozen=True)
class PhysicalParams:
    """SI-unit description of the particle and its medium.

    gamma is the medium resistance per unit mass (1/s); c_light may be
    set to zero, in which case the rest-energy term contributes nothing.
    hbar and k are fixed constants, not free parameters.
    """

    mass: float
    temperature: float
    gamma: float
    potential: PotentialSpec = field(default_factory=PotentialSpec.free)
    c_light: float = 0.0
    hbar: float = field(default=HBAR, init=False)
    k: float = field(default=K_BOLTZMANN, init=False)

    def __post_init__(self):
        for name in ("mass", "temperature", "gamma"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise ParameterError(f"{name} must be positive and finite, got {v!r}")
        if self.c_light < 0:
            raise ParameterError("c_light must be nonnegative")

    @property
    def epsilon(self) -> float:
        return self.k * self.temperature / (self.gamma * self.hbar)


@dataclass(frozen=True)
class DimensionlessParams:
    """The dimensionless computational currency.

    scale_x, scale_p, scale_t convert primed quantities back to SI
    (x = scale_x * x' and so on); they are 1.0 for setups built directly
    in dimensionless form.  ``potential`` holds V' as a function of x'.
    """

    epsilon: float
    potential: PotentialSpec = field(default_factory=PotentialSpec.free)
    rest_energy_ratio: float = 0.0       # m c^2 / kT
    scale_x: float = 1.0
    scale_p: float = 1.0
    scale_t: float = 1.0
    scale_energy: float = 1.0            # kT in joules

    def __post_init__(self):
        if not (np.isfinite(self.epsilon) and self.epsilon >= 0):
            raise ParameterError(f"epsilon must be nonnegative and finite, got {self.epsilon!r}")
        if self.rest_energy_ratio < 0:
            raise ParameterError("rest_energy_ratio must be nonnegative")

    # unit round-trips -------------------------------------------------
    def x_to_prime(self, x):
        return np.asarray(x) / self.scale_x

    def x_from_prime(self, xp):
        return np.asarray(xp) * self.scale_x

    def p_to_prime(self, p):
        return np.asarray(p) / self.scale_p

    def p_from_prime(self, pp):
        return np.asarray(pp) * self.scale_p

    def t_to_prime(self, t):
        return np.asarray(t) / self.scale_t

    def t_from_prime(self, tp):
        return np.asarray(tp) * self.scale_t

    # potential shortcuts ----------------------------------------------
    def v_prime(self, xp):
        return self.potential.value(xp)

    def dv_prime(self, xp):
        return self.potential.grad(xp)

    def with_epsilon(self, epsilon: float) -> "DimensionlessParams":
        return replace(self, epsilon=float(epsilon))


def _potential_to_dimensionless(pot: PotentialSpec, kT: float, x_scale: float,
                                hbar: float) -> PotentialSpec:
    if pot.kind == "free":
        return pot
    if pot.kind == "harmonic":
        (omega,) = pot.coeffs
        return PotentialSpec.harmonic(hbar * omega / kT)
    if pot.kind == "double_well":
        a, b = pot.coeffs
        return PotentialSpec.double_well(a * x_scale**2 / kT, b * x_scale**4 / kT)
    coeffs = tuple(c * x_scale**j / kT for j, c in enumerate(pot.coeffs))
    return PotentialSpec.polynomial(coeffs)


def nondimensionalize(params: PhysicalParams) -> DimensionlessParams:
    """Pass to the primed variables; returns the dimensionless parameter set."""
    kT = params.k * params.temperature
    scale_p = np.sqrt(kT * params.mass)
    scale_x = params.hbar / scale_p
    scale_t = 1.0 / params.gamma
    eps = kT / (params.gamma * params.hbar)
    rest = params.mass * params.c_light**2 / kT
    pot = _potential_to_dimensionless(params.potential, kT, scale_x, params.hbar)
    return DimensionlessParams(
        epsilon=eps,
        potential=pot,
        rest_energy_ratio=rest,
        scale_x=scale_x,
        scale_p=scale_p,
        scale_t=scale_t,
        scale_energy=kT,
    )
