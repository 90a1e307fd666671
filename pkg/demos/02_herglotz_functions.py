# %% [markdown]
# # Positive harmonic functions from boundary atoms
#
# A positive measure on the circle with atoms (theta_j, w_j) gives the
# holomorphic map f(z) = sum w_j (e^{i theta_j} + z)/(e^{i theta_j} - z)
# into K.  Its real part u is positive and harmonic, and u(0) is the
# total mass.

# %%
import math

import numpy as np

from harnack import (
    HerglotzMeasure,
    eval_f,
    eval_u,
    grad_u,
    grad_u_fd,
    hyperbolic_derivative_zero,
    mean_value_check,
)

rng = np.random.default_rng(42)
m = HerglotzMeasure.from_arrays(rng.uniform(0, 2 * np.pi, 5), rng.uniform(0.1, 2.0, 5))
print(m.to_json())
print("u(0) =", eval_u(m, 0), " total mass =", m.total_mass)

# %% [markdown]
# The gradient comes from f' by Cauchy-Riemann.  A central difference
# on u is an independent check.

# %%
z = 0.3 + 0.2j
print("analytic      ", grad_u(m, z))
print("finite diff.  ", grad_u_fd(m, z))

# %% [markdown]
# The number c = |grad u(0)| / (2 u(0)) lies in [0, 1].  It is 1 for a
# single atom and 0 for two equal atoms at opposite points.

# %%
one = HerglotzMeasure(((0.0, 1.0),))
sym = HerglotzMeasure(((0.0, 0.5), (math.pi, 0.5)))
for name, meas in [("random", m), ("single", one), ("symmetric", sym)]:
    print(f"{name:>9}: c = {hyperbolic_derivative_zero(meas):.15f}")

# %% [markdown]
# Harmonic means the mean value property holds on every small circle.

# %%
print("mean value defect:", mean_value_check(m, 0.2j, 0.3, 512))
print("Re f == u:", abs(eval_f(m, z).real - eval_u(m, z)))
