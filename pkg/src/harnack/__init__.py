"""Stronger Harnack bounds for positive harmonic functions on the unit disc."""

from .bounds import (
    BoundInterval,
    InequalitySlack,
    beardon_carne_rhs,
    beardon_carne_slack,
    classical_harnack,
    extremal_measure,
    extremal_u1,
    extremal_u2,
    gradient_norm_extremal,
    lemma2_identity_gap,
    lemma2_radius,
    markovic_slack,
    schwarz_pick_gradient_slack,
    stronger_harnack,
)
from .errors import DomainError, InvalidMeasureError, UsageError
from .herglotz import (
    GradientVector,
    HerglotzMeasure,
    eval_f,
    eval_f_prime,
    eval_u,
    grad_u,
    grad_u_fd,
    hyperbolic_derivative_zero,
    mean_value_check,
)
from .hyperbolic import (
    EuclideanDisc,
    cayley_to_disc,
    cayley_to_halfplane,
    density_disc,
    density_halfplane,
    disc_automorphism,
    dist_disc,
    dist_halfplane,
    halfplane_disc_image,
    halfplane_disc_re_interval,
)

__version__ = "0.1.0"
