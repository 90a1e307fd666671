"""Positive harmonic functions on the unit disc from atomic Herglotz measures.

A measure with atoms (theta_j, w_j) defines

    f(z) = sum_j w_j (e^{i theta_j} + z) / (e^{i theta_j} - z)

which maps U into the right half-plane with f(0) = sum_j w_j.  Its real
part u is a positive harmonic function (a sum of Poisson kernels) and,
by the Cauchy-Riemann equations, f' = u_x - i u_y.
"""

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, InvalidMeasureError
from .hyperbolic import BOUNDARY_MARGIN, _check_disc, one_minus_abs2

DEFAULT_FD_STEP = 1e-5


class GradientVector(NamedTuple):
    ux: float
    uy: float

    @property
    def norm(self):
        return math.hypot(self.ux, self.uy)


@dataclass(frozen=True)
class HerglotzMeasure:
    """Finite positive atomic measure on the unit circle.

    ``atoms`` is a tuple of ``(theta, w)`` pairs; repeated angles are
    allowed and simply add.
    """

    atoms: tuple

    def __post_init__(self):
        atoms = tuple((float(t), float(w)) for t, w in self.atoms)
        if not atoms:
            raise InvalidMeasureError("a measure needs at least one atom")
        for t, w in atoms:
            if not (math.isfinite(t) and math.isfinite(w)) or w <= 0:
                raise InvalidMeasureError(f"invalid atom (theta={t}, w={w})")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def from_arrays(cls, thetas, weights):
        thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
        weights = np.atleast_1d(np.asarray(weights, dtype=float))
        if thetas.shape != weights.shape:
            raise InvalidMeasureError("thetas and weights differ in length")
        return cls(tuple(zip(thetas.tolist(), weights.tolist())))

    @property
    def thetas(self):
        return np.array([t for t, _ in self.atoms])

    @property
    def weights(self):
        return np.array([w for _, w in self.atoms])

    @property
    def total_mass(self):
        return math.fsum(w for _, w in self.atoms)

    def __len__(self):
        return len(self.atoms)

    def to_json_obj(self):
        return [{"theta": t, "w": w} for t, w in self.atoms]

    @classmethod
    def from_json_obj(cls, obj):
        try:
            return cls(tuple((a["theta"], a["w"]) for a in obj))
        except (KeyError, TypeError) as exc:
            raise InvalidMeasureError(f"malformed measure JSON: {exc}") from None

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


# ---------------------------------------------------------------------------
# Kernels.  thetas/weights have shape (..., K); z broadcasts against (...).
# Atoms are accumulated left to right so that zero-weight padding and the
# batch size never change a result.
# ---------------------------------------------------------------------------

def _boundary_points(thetas):
    return np.cos(thetas) + 1j * np.sin(thetas)


def atom_sum(terms):
    """Sum over the trailing atom axis, strictly left to right."""
    acc = terms[..., 0]
    for j in range(1, terms.shape[-1]):
        acc = acc + terms[..., j]
    return acc


def f_kernel(thetas, weights, z):
    zeta = _boundary_points(thetas)
    z = np.asarray(z)[..., None]
    return atom_sum(weights * ((zeta + z) / (zeta - z)))


def u_kernel(thetas, weights, z):
    # Poisson form of Re f: strictly positive term by term
    zeta = _boundary_points(thetas)
    z = np.asarray(z)
    num = one_minus_abs2(z)[..., None]
    return atom_sum(weights * (num / np.abs(zeta - z[..., None]) ** 2))


def f_prime_kernel(thetas, weights, z):
    zeta = _boundary_points(thetas)
    z = np.asarray(z)[..., None]
    return atom_sum(2.0 * weights * zeta / (zeta - z) ** 2)


def hyperbolic_derivative_zero_kernel(thetas, weights):
    # f'(0) = 2 sum w_j e^{-i theta_j},  f(0) = sum w_j
    zeta = _boundary_points(thetas)
    return np.abs(atom_sum(weights * np.conj(zeta))) / atom_sum(weights)


def _unwrap(x):
    return x[()] if isinstance(x, np.ndarray) and x.ndim == 0 else x


def _measure(m):
    if not isinstance(m, HerglotzMeasure):
        raise InvalidMeasureError(f"expected a HerglotzMeasure, got {type(m).__name__}")
    return m


# ---------------------------------------------------------------------------
# Public surface
# ---------------------------------------------------------------------------

def eval_f(m, z):
    """Holomorphic completion f of u with f(0) = u(0); values lie in K."""
    m = _measure(m)
    z = _check_disc(z)
    return _unwrap(f_kernel(m.thetas, m.weights, z))


def eval_u(m, z):
    m = _measure(m)
    z = _check_disc(z)
    return _unwrap(u_kernel(m.thetas, m.weights, z))


def eval_f_prime(m, z):
    m = _measure(m)
    z = _check_disc(z)
    return _unwrap(f_prime_kernel(m.thetas, m.weights, z))


def grad_u(m, z):
    """Gradient (u_x, u_y) read off f' = u_x - i u_y."""
    fp = complex(eval_f_prime(m, complex(z)))
    return GradientVector(fp.real, -fp.imag)


def grad_u_fd(m, z, h=DEFAULT_FD_STEP):
    """Central-difference gradient of eval_u; an oracle for grad_u."""
    m = _measure(m)
    z = complex(z)
    if not h > 0:
        raise DomainError(f"step must be positive, got {h!r}")
    if 1.0 - (abs(z) + h) < BOUNDARY_MARGIN:
        raise DomainError("finite-difference stencil leaves the disc")
    ux = (eval_u(m, z + h) - eval_u(m, z - h)) / (2 * h)
    uy = (eval_u(m, z + 1j * h) - eval_u(m, z - 1j * h)) / (2 * h)
    return GradientVector(float(ux), float(uy))


def hyperbolic_derivative_zero(m):
    """|f^h(0)| = |grad u(0)| / (2 u(0)), always in [0, 1]."""
    m = _measure(m)
    return float(hyperbolic_derivative_zero_kernel(m.thetas, m.weights))


def mean_value_check(m, z0, rho, n):
    """|u(z0) - mean of u over n equispaced points on the circle |z - z0| = rho|."""
    m = _measure(m)
    z0 = complex(z0)
    if not rho > 0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    if n < 8:
        raise DomainError(f"need at least 8 nodes, got {n}")
    if 1.0 - (abs(z0) + rho) < BOUNDARY_MARGIN:
        raise DomainError("averaging circle leaves the disc")
    nodes = z0 + rho * np.exp(2j * np.pi * np.arange(n) / n)
    return abs(float(eval_u(m, z0)) - float(np.mean(eval_u(m, nodes))))
