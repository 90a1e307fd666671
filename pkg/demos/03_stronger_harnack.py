# %% [markdown]
# # The stronger Harnack inequality
#
# For positive harmonic u on U with c = |grad u(0)| / (2 u(0)),
#
#     1/B(|z|, c) <= u(z)/u(0) <= B(|z|, c),
#     B(t, c) = (1 + t^2 + 2ct) / (1 - t^2).
#
# At c = 1 this is the classical (1-t)/(1+t) <= u(z)/u(0) <= (1+t)/(1-t).

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from harnack import (
    classical_harnack,
    extremal_measure,
    extremal_u1,
    extremal_u2,
    eval_u,
    gradient_norm_extremal,
    stronger_harnack,
)

for c in (0.0, 0.5, 1.0):
    iv = stronger_harnack(0.5, c)
    print(f"c={c}: [{iv.lower:.6f}, {iv.upper:.6f}]   classical {classical_harnack(0.5)}")

# %% [markdown]
# The bound is sharp.  u1 and u2 touch it along the positive real axis,
# and both have |grad u(0)| = 2c.

# %%
x = np.arange(100) / 100
for c in (0.0, 0.25, 0.5, 0.75, 1.0):
    upper = (1 + x**2 + 2 * c * x) / (1 - x**2)
    gap = max(np.max(np.abs(extremal_u1(c, x) - upper) / upper),
              np.max(np.abs(extremal_u2(c, x) * upper - 1)))
    print(f"c={c:<4}  max gap {gap:.1e}   |grad u1(0)| = {gradient_norm_extremal(c, 'u1'):.8f}")

# u1 is itself a two-atom measure
m = extremal_measure(0.5, "u1")
print(m.atoms, eval_u(m, 0.5), extremal_u1(0.5, 0.5))

# %% [markdown]
# The band between the two bounds shrinks as c drops from 1 to 0.

# %%
t = np.linspace(0, 0.9, 200)
fig, ax = plt.subplots(figsize=(6, 4))
for c, col in [(1.0, "k"), (0.5, "C0"), (0.0, "C1")]:
    iv = [stronger_harnack(ti, c) for ti in t]
    ax.fill_between(t, [i.lower for i in iv], [i.upper for i in iv], color=col, alpha=0.2)
    ax.plot(t, [i.upper for i in iv], color=col, label=f"c = {c}")
ax.set_yscale("log")
ax.set_xlabel("|z|")
ax.set_ylabel("u(z)/u(0)")
ax.legend()
fig.tight_layout()
fig.savefig("stronger_harnack.png", dpi=120)
print("wrote stronger_harnack.png")
