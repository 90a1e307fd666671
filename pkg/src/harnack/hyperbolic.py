"""Hyperbolic geometry of the unit disc U and the right half-plane K.

Points are plain Python/numpy complex numbers; every function accepts
scalars or arrays and broadcasts.  Conventions:

    U = {|z| < 1},      rho_U(z) = 2 / (1 - |z|^2)
    K = {Re w > 0},     rho_K(w) = 1 / Re w

    psi(w)   = (w - 1) / (w + 1)     K -> U   (cayley_to_disc)
    kappa(z) = (1 + z) / (1 - z)     U -> K   (cayley_to_halfplane)

Inputs closer than ``BOUNDARY_MARGIN`` to the boundary are rejected.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

BOUNDARY_MARGIN = 1e-12
# |c| may overshoot 1 by this much through rounding of e^{i t}
UNIT_SLACK = 1e-12


@dataclass(frozen=True)
class EuclideanDisc:
    """Closed Euclidean disc {w : |w - center| <= radius}."""

    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius >= 0:
            raise DomainError(f"radius must be nonnegative, got {self.radius}")

    def contains(self, w, tol=0.0):
        return np.abs(np.asarray(w) - self.center) <= self.radius + tol

    @property
    def re_interval(self):
        return (self.center.real - self.radius, self.center.real + self.radius)


def _as_complex(z):
    z = np.asarray(z, dtype=complex)
    return z if z.ndim else z[()]


def _check_disc(z, name="z"):
    z = _as_complex(z)
    if not np.all(1.0 - np.abs(z) >= BOUNDARY_MARGIN):
        raise DomainError(f"{name} must lie in the open unit disc")
    return z


def _check_halfplane(w, name="w"):
    w = _as_complex(w)
    if not np.all(np.real(w) > 0):
        raise DomainError(f"{name} must lie in the right half-plane")
    if not np.all(np.isfinite(w)):
        raise DomainError(f"{name} must be finite")
    return w


def artanh(x):
    """Inverse hyperbolic tangent, 0.5*(log1p(x) - log1p(-x))."""
    x = np.asarray(x, dtype=float)
    out = 0.5 * (np.log1p(x) - np.log1p(-x))
    return out if out.ndim else float(out)


def disc_automorphism(c, z):
    """phi_c(z) = (z + c) / (1 + conj(c) z).

    For |c| = 1 the map degenerates to the constant c for every z.
    Broadcasts over both arguments.
    """
    c = _as_complex(c)
    if not np.all(np.abs(c) <= 1.0 + UNIT_SLACK):
        raise DomainError("|c| must be at most 1")
    z = _check_disc(z)
    on_circle = np.abs(c) >= 1.0
    if not np.any(on_circle):
        return (z + c) / (1.0 + np.conj(c) * z)
    inner = np.where(on_circle, 0.0, c)
    out = np.where(on_circle, c, (z + inner) / (1.0 + np.conj(inner) * z))
    return out if out.ndim else complex(out)


def cayley_to_disc(w):
    w = _check_halfplane(w)
    return (w - 1.0) / (w + 1.0)


def cayley_to_halfplane(z):
    z = _check_disc(z)
    return (1.0 + z) / (1.0 - z)


def one_minus_abs2(z):
    """1 - |z|^2 evaluated as (1 - |z|)(1 + |z|)."""
    r = np.abs(z)
    return (1.0 - r) * (1.0 + r)


def density_disc(z):
    z = _check_disc(z)
    return 2.0 / one_minus_abs2(z)


def density_halfplane(w):
    w = _check_halfplane(w)
    return 1.0 / np.real(w)


def dist_disc(z1, z2):
    """Hyperbolic distance in U.

    The pair is moved by the automorphism sending z1 to 0, then the
    radial formula d(q, 0) = 2 artanh|q| is applied.
    """
    z1 = _check_disc(z1, "z1")
    z2 = _check_disc(z2, "z2")
    den = np.abs(1.0 - np.conj(z1) * z2)
    q = np.abs(z2 - z1) / den
    near = 2.0 * artanh(np.minimum(q, 0.5))
    # 1 - q^2 from the factored identity; avoids 1 - q cancellation
    one_minus_q2 = one_minus_abs2(z1) * one_minus_abs2(z2) / den**2
    far = 2.0 * np.log1p(q) - np.log(one_minus_q2)
    out = np.where(q < 0.5, near, far)
    return out if out.ndim else float(out)


def dist_halfplane(w1, w2):
    """Hyperbolic distance in K, pulled back to U through psi."""
    return dist_disc(cayley_to_disc(w1), cayley_to_disc(w2))


def dist_positive_reals(a, b):
    """d_K between positive reals: |log(a / b)|."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if not (np.all(a > 0) and np.all(b > 0)):
        raise DomainError("arguments must be positive reals")
    out = np.abs(np.log(a) - np.log(b))
    return out if out.ndim else float(out)


def _check_b_r(b, r):
    if not (np.isfinite(b) and b > 0):
        raise DomainError(f"b must be a positive real, got {b!r}")
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r!r}")


def halfplane_disc_image(b, r):
    """Image of {|z| <= r} under kappa_b = kappa o phi_{psi(b)}.

    This is the closed hyperbolic disc of K with centre b and radius
    2 artanh(r); as a Euclidean disc its centre is (1+r^2)/(1-r^2) b and
    its radius 2r/(1-r^2) b.
    """
    b = float(b)
    r = float(r)
    _check_b_r(b, r)
    den = (1.0 - r) * (1.0 + r)
    return EuclideanDisc(complex((1.0 + r * r) / den * b), 2.0 * r / den * b)


def halfplane_disc_re_interval(b, r):
    """Range of Re w over the hyperbolic disc of K with centre b, radius 2 artanh r."""
    b = float(b)
    r = float(r)
    _check_b_r(b, r)
    return ((1.0 - r) / (1.0 + r) * b, (1.0 + r) / (1.0 - r) * b)


def halfplane_isometry(b):
    """Return kappa_b, the conformal isomorphism U -> K with kappa_b(0) = b."""
    a = complex(cayley_to_disc(b))

    def kappa_b(z):
        return cayley_to_halfplane(disc_automorphism(a, z))

    return kappa_b
