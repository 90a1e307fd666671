# %% [markdown]
# # Hyperbolic geometry of the disc and the half-plane
#
# The disc U carries the density 2/(1-|z|^2), the right half-plane K the
# density 1/Re w.  The Cayley map psi(w) = (w-1)/(w+1) carries one onto
# the other, so it preserves distances.

# %%
import math

import numpy as np
from scipy import integrate

from harnack import (
    cayley_to_disc,
    disc_automorphism,
    dist_disc,
    dist_halfplane,
    halfplane_disc_image,
    halfplane_disc_re_interval,
)

# %% [markdown]
# Along a radius the distance has the closed form log((1+t)/(1-t)).
# Integrating the density numerically gives the same number.

# %%
for t in (0.1, 0.5, 0.9, 0.99):
    quad, _ = integrate.quad(lambda s: 2 / (1 - s * s), 0, t)
    print(f"t={t:<5} closed={dist_disc(t, 0):.15f}  quad={quad:.15f}")

# %% [markdown]
# Moebius automorphisms of U are isometries.

# %%
rng = np.random.default_rng(0)
z1, z2, c = 0.6 * np.exp(2j * np.pi * rng.random(3))
print(dist_disc(z1, z2), dist_disc(disc_automorphism(c, z1), disc_automorphism(c, z2)))

# and so is the Cayley map between K and U
w1, w2 = 0.3 + 2j, 4 - 1j
print(dist_halfplane(w1, w2), dist_disc(cayley_to_disc(w1), cayley_to_disc(w2)))

# on the positive reals d_K is just |log(a/b)|
print(dist_halfplane(1, 3), math.log(3))

# %% [markdown]
# A hyperbolic disc of radius log((1+r)/(1-r)) about a real point b of K
# is a Euclidean disc.  Its real parts fill [b(1-r)/(1+r), b(1+r)/(1-r)],
# which is exactly where the Harnack bounds come from.

# %%
for r in (0.1, 0.5, 0.9):
    disc = halfplane_disc_image(1.0, r)
    lo, hi = halfplane_disc_re_interval(1.0, r)
    print(f"r={r}: center={disc.center.real:.6f} radius={disc.radius:.6f} Re in [{lo:.6f}, {hi:.6f}]")
