"""Harnack-type bounds for positive harmonic functions on the unit disc.

For positive harmonic u on U put t = |z| and

    c = |grad u(0)| / (2 u(0))            (0 <= c <= 1)
    B(t, c) = (1 + t^2 + 2 c t) / (1 - t^2)

Then 1/B <= u(z)/u(0) <= B.  At c = 1 this is the classical Harnack
interval [(1-t)/(1+t), (1+t)/(1-t)], and for every c the interval is
attained on the real axis by the extremal functions u1, u2 below.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .herglotz import (
    DEFAULT_FD_STEP,
    HerglotzMeasure,
    eval_f,
    eval_u,
    hyperbolic_derivative_zero,
)
from .hyperbolic import (
    _check_disc,
    disc_automorphism,
    dist_disc,
    dist_halfplane,
    dist_positive_reals,
    one_minus_abs2,
)

# measured c may exceed 1 by rounding; anything up to this is read as 1
C_OVERSHOOT = 1e-12


@dataclass(frozen=True)
class BoundInterval:
    lower: float
    upper: float

    def __post_init__(self):
        if not 0 < self.lower <= self.upper:
            raise DomainError(f"bad interval [{self.lower}, {self.upper}]")

    def contains(self, x, rtol=0.0):
        return self.lower * (1 - rtol) <= x <= self.upper * (1 + rtol)

    def within(self, other):
        return other.lower <= self.lower and self.upper <= other.upper


class InequalitySlack(NamedTuple):
    lhs: float
    rhs: float
    slack: float


def _slack(lhs, rhs):
    lhs = float(lhs)
    rhs = float(rhs)
    return InequalitySlack(lhs, rhs, rhs - lhs)


def check_c(c):
    """Validate c in [0, 1]; tiny rounding overshoot above 1 is read as 1."""
    c = np.asarray(c, dtype=float)
    if not np.all((c >= 0) & (c <= 1 + C_OVERSHOOT)):
        raise DomainError("c must lie in [0, 1]")
    c = np.minimum(c, 1.0)
    return c if c.ndim else float(c)


def _check_t(t):
    t = np.asarray(t, dtype=float)
    if not np.all((t >= 0) & (t < 1)):
        raise DomainError("t must lie in [0, 1)")
    return t


def harnack_upper(t, c):
    """B(t, c) written as 1 + 2t(t + c)/((1 - t)(1 + t)).

    In this form B is monotone in c under rounding, so the c = 1 value
    coincides bit for bit with the classical bound.
    """
    t = _check_t(t)
    c = check_c(c)
    out = 1.0 + 2.0 * t * (t + c) / ((1.0 - t) * (1.0 + t))
    return out if np.ndim(out) else float(out)


def classical_harnack(z):
    t = abs(complex(_check_disc(z)))
    upper = harnack_upper(t, 1.0)
    return BoundInterval(1.0 / upper, upper)


def stronger_harnack(z, c):
    t = abs(complex(_check_disc(z)))
    upper = harnack_upper(t, c)
    return BoundInterval(1.0 / upper, upper)


def beardon_carne_rhs(d, hd):
    """log(cosh d + hd sinh d), evaluated as d + log((1+hd)/2 + (1-hd)/2 e^{-2d})."""
    d = np.asarray(d, dtype=float)
    hd = np.asarray(hd, dtype=float)
    if not np.all(d >= 0):
        raise DomainError("distance must be nonnegative")
    if not np.all((hd >= 0) & (hd <= 1 + C_OVERSHOOT)):
        raise DomainError("hyperbolic derivative must lie in [0, 1]")
    hd = np.minimum(hd, 1.0)
    out = d + np.log((1.0 + hd) / 2.0 + (1.0 - hd) / 2.0 * np.exp(-2.0 * d))
    return out if out.ndim else float(out)


def lemma2_radius(c, t):
    """R = t (c + t)/(1 + c t) = t phi_c(t), the point with d(R, 0) = log((1+t^2+2ct)/(1-t^2))."""
    c = check_c(c)
    t = _check_t(t)
    out = t * (c + t) / (1.0 + c * t)
    return out if np.ndim(out) else float(out)


def lemma2_identity_gap(c, t):
    c = check_c(c)
    t = _check_t(t)
    lhs = beardon_carne_rhs(dist_disc(t, 0.0), c)
    rhs = dist_disc(lemma2_radius(c, t), 0.0)
    out = np.abs(lhs - rhs)
    return out if np.ndim(out) else float(out)


def schwarz_pick_sides(thetas, weights, z):
    """Both sides of |grad u(z)| <= 2 u(z)/(1 - |z|^2) from per-atom magnitudes.

    With p_j = 2 w_j / |e^{i theta_j} - z|^2 the right side is sum p_j and
    |f'(z)| = |sum p_j e^{i beta_j}| is taken from its Gram expansion, so a
    single atom gives bit-identical sides.
    """
    zeta = np.cos(thetas) + 1j * np.sin(thetas)
    z = np.asarray(z)[..., None]
    diff = zeta - z
    p = 2.0 * weights / np.abs(diff) ** 2
    terms = zeta / diff**2
    unit = terms / np.abs(terms)
    k = p.shape[-1]
    rhs = p[..., 0]
    sq = p[..., 0] * p[..., 0]
    for j in range(1, k):
        rhs = rhs + p[..., j]
        sq = sq + p[..., j] * p[..., j]
    for j in range(k):
        for i in range(j + 1, k):
            cos = np.real(unit[..., j] * np.conj(unit[..., i]))
            sq = sq + 2.0 * p[..., j] * p[..., i] * cos
    return np.sqrt(np.maximum(sq, 0.0)), rhs


def schwarz_pick_gradient_slack(m, z):
    """|grad u(z)| <= 2 u(z) / (1 - |z|^2)."""
    z = complex(_check_disc(z))
    lhs, rhs = schwarz_pick_sides(m.thetas, m.weights, z)
    return _slack(lhs, rhs)


def markovic_slack(m, z1, z2):
    """d_K(u(z1), u(z2)) <= d_U(z1, z2)."""
    lhs = dist_positive_reals(eval_u(m, z1), eval_u(m, z2))
    return _slack(lhs, dist_disc(z1, z2))


def beardon_carne_slack(m, z):
    """d_K(f(z), f(0)) <= log(cosh d_U(z, 0) + c sinh d_U(z, 0)), c = |f^h(0)|."""
    c = check_c(hyperbolic_derivative_zero(m))
    lhs = dist_halfplane(eval_f(m, z), eval_f(m, 0.0))
    return _slack(lhs, beardon_carne_rhs(dist_disc(z, 0.0), c))


def _extremal_product(c, z):
    c = check_c(c)
    z = _check_disc(z)
    return z * disc_automorphism(c, z)


def extremal_u1(c, z):
    """u1 = Re (1 + z phi_c(z)) / (1 - z phi_c(z)); attains the upper bound on [0, 1)."""
    p = _extremal_product(c, z)
    out = one_minus_abs2(p) / np.abs(1.0 - p) ** 2
    return out if np.ndim(out) else float(out)


def extremal_u2(c, z):
    """u2 = Re (1 - z phi_c(z)) / (1 + z phi_c(z)); attains the lower bound on [0, 1)."""
    p = _extremal_product(c, z)
    out = one_minus_abs2(p) / np.abs(1.0 + p) ** 2
    return out if np.ndim(out) else float(out)


def gradient_norm_extremal(c, which, h=DEFAULT_FD_STEP):
    """|grad u(0)| of u1 or u2 by central differences."""
    fn = {"u1": extremal_u1, "u2": extremal_u2}.get(which)
    if fn is None:
        raise DomainError(f"which must be 'u1' or 'u2', got {which!r}")
    ux = (fn(c, h) - fn(c, -h)) / (2 * h)
    uy = (fn(c, 1j * h) - fn(c, -1j * h)) / (2 * h)
    return math.hypot(ux, uy)


def extremal_measure(c, which):
    """Atomic measure whose Herglotz function is u1 (or u2).

    z phi_c(z) equals 1 only at z = +1, -1 and -1 only at
    z = -c +- i sqrt(1 - c^2); the atom weights are the reciprocal
    angular derivatives there.
    """
    c = check_c(c)
    if which == "u1":
        atoms = [(0.0, (1 + c) / 2), (math.pi, (1 - c) / 2)]
    elif which == "u2":
        if c == 1.0:
            atoms = [(math.pi, 1.0)]
        else:
            alpha = math.atan2(math.sqrt(1 - c * c), -c)
            atoms = [(alpha, 0.5), (2 * math.pi - alpha, 0.5)]
    else:
        raise DomainError(f"which must be 'u1' or 'u2', got {which!r}")
    return HerglotzMeasure(tuple((t, w) for t, w in atoms if w > 0))
