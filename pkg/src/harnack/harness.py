"""Seeded property suites and the verification report.

Every suite is a map ``row index -> inputs`` plus a vectorised check
``inputs -> slack``.  A row violates the suite when its slack is below
``-tolerance`` (``<=`` for strict suites).  Random suites draw row ``i``
from its own Philox4x64-10 substream (key = seed, counter word 3 = i), so
results do not depend on chunking, worker count or suite order.  Grid
suites enumerate a fixed parameter grid.

Rows are processed in fixed chunks of ``CHUNK`` and partial records are
merged with an associative, commutative rule (sum of violations, minimum
of (slack, row index)), which keeps parallel and serial reports equal.
"""

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import numpy as np
from scipy import integrate

from . import bounds
from .errors import UsageError
from .herglotz import (
    HerglotzMeasure,
    atom_sum,
    f_kernel,
    f_prime_kernel,
    hyperbolic_derivative_zero_kernel,
    u_kernel,
)
from .hyperbolic import (
    cayley_to_disc,
    cayley_to_halfplane,
    disc_automorphism,
    dist_disc,
    dist_halfplane,
    halfplane_disc_image,
    halfplane_disc_re_interval,
    halfplane_isometry,
    one_minus_abs2,
)

GENERATOR = "numpy Philox4x64-10; key=seed, counter=[0, 0, 0, trial]"
CHUNK = 8192

DEFAULT_TOLERANCES = {
    # hyperbolic core
    "isometry_invariance": 1e-10,
    "cayley_isometry": 1e-10,
    "round_trip": 1e-14,
    "radial_closed_form": 1e-10,
    "radial_quadrature": 1e-6,
    "halfplane_distance": 1e-10,
    "disc_image_boundary": 1e-9,
    "disc_image_interval": 1e-6,
    # Herglotz functions
    "positivity": 0.0,
    "normalization": 1e-12,
    "gradient_consistency": 1e-6,
    "hyperbolic_derivative_bound": 1e-14,
    "hyperbolic_derivative_single": 1e-12,
    "harmonicity": 1e-9,
    # bounds
    "main_theorem": 1e-9,
    "containment": 1e-12,
    "monotonicity": 0.0,
    "extremal_sharpness": 1e-9,
    "extremal_gradient": 1e-6,
    "lemma2_identity": 1e-12,
    "schwarz_pick_gradient": 1e-12,
    "schwarz_pick_equality": 1e-10,
    "markovic": 1e-10,
    "markovic_equality": 1e-10,
    "beardon_carne": 1e-10,
    "beardon_carne_equality": 1e-10,
}


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 1
    trials: int = 100_000
    max_atoms: int = 8
    rmax: float = 0.99
    weight_range: tuple = (0.1, 10.0)
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise UsageError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.trials < 1:
            raise UsageError(f"trials must be positive, got {self.trials}")
        if self.max_atoms < 1:
            raise UsageError(f"max_atoms must be positive, got {self.max_atoms}")
        if not 0 < self.rmax < 1:
            raise UsageError(f"rmax must lie in (0, 1), got {self.rmax}")
        lo, hi = self.weight_range
        if not 0 < lo <= hi:
            raise UsageError(f"weight_range must satisfy 0 < lo <= hi, got {self.weight_range}")
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise UsageError(f"unknown tolerance names: {sorted(unknown)}")
        if any(not v >= 0 for v in self.tolerances.values()):
            raise UsageError("tolerances must be nonnegative")
        object.__setattr__(self, "weight_range", (float(lo), float(hi)))

    def tolerance(self, suite):
        return float(self.tolerances.get(suite, DEFAULT_TOLERANCES[suite]))

    def to_json_obj(self):
        d = asdict(self)
        d["weight_range"] = list(self.weight_range)
        d["tolerances"] = {k: self.tolerance(k) for k in DEFAULT_TOLERANCES}
        return d


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

def trial_rng(seed, trial):
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, trial]))


def sample_measure(rng, max_atoms, weight_range):
    n = int(rng.integers(1, max_atoms + 1))
    thetas = rng.uniform(0.0, 2 * math.pi, n)
    weights = rng.uniform(weight_range[0], weight_range[1], n)
    return HerglotzMeasure.from_arrays(thetas, weights)


def sample_disc_point(rng, rmax):
    """Area-uniform point of {|z| <= rmax}."""
    r = rmax * math.sqrt(rng.random())
    return complex(r * np.exp(1j * rng.uniform(0.0, 2 * math.pi)))


def _draw_trial(seed, trial, max_atoms, rmax, weight_range):
    rng = trial_rng(seed, trial)
    m = sample_measure(rng, max_atoms, weight_range)
    z1 = sample_disc_point(rng, rmax)
    z2 = sample_disc_point(rng, rmax)
    aux = sample_disc_point(rng, rmax)
    extra = rng.random()
    return m, z1, z2, aux, extra


def _empty_block(n, k):
    return {
        "thetas": np.zeros((n, k)),
        "weights": np.zeros((n, k)),
        "natoms": np.zeros(n, dtype=int),
        "z1": np.zeros(n, dtype=complex),
        "z2": np.zeros(n, dtype=complex),
        "aux": np.zeros(n, dtype=complex),
        "extra": np.zeros(n),
        "rmax": np.zeros(n),
    }


def _put_row(block, i, m, z1, z2, aux, extra, rmax):
    k = len(m)
    block["thetas"][i, :k] = m.thetas
    block["weights"][i, :k] = m.weights
    block["natoms"][i] = k
    block["z1"][i] = z1
    block["z2"][i] = z2
    block["aux"][i] = aux
    block["extra"][i] = extra
    block["rmax"][i] = rmax


@lru_cache(maxsize=64)
def _random_block(seed, max_atoms, rmax, weight_range, start, stop):
    block = _empty_block(stop - start, max_atoms)
    for i, trial in enumerate(range(start, stop)):
        _put_row(block, i, *_draw_trial(seed, trial, max_atoms, rmax, weight_range), rmax)
    return block


def random_rows(config, start, stop):
    return _random_block(config.seed, config.max_atoms, config.rmax,
                         config.weight_range, start, stop)


def _measure_of(block, i):
    k = int(block["natoms"][i])
    return HerglotzMeasure.from_arrays(block["thetas"][i, :k], block["weights"][i, :k])


# ---------------------------------------------------------------------------
# Deterministic grids
# ---------------------------------------------------------------------------

T_GRID = np.linspace(0.0, 0.99, 200)
C_GRID = np.linspace(0.0, 1.0, 101)
EXTREMAL_C = np.array([0.0, 0.25, 0.5, 0.75, 1.0])
EXTREMAL_X = np.arange(100) / 100.0
RADIAL_T = np.round(np.arange(0.1, 0.951, 0.05), 2)
DISC_IMAGE_B = np.array([0.5, 1.0, 2.0])
DISC_IMAGE_R = np.round(np.arange(1, 10) / 10.0, 1)
DISC_IMAGE_SAMPLES = 4096
EQ_ANGLES = 2 * np.pi * np.arange(16) / 16
EQ_RADII = np.array([0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99])
REAL_LINE = np.round(np.arange(-0.95, 0.951, 0.05), 2)
HALFPLANE_REALS = np.array([0.01, 0.1, 0.5, 1.0, 2.0, 3.0, 10.0, 100.0])


def _grid(*axes):
    mesh = np.meshgrid(*axes, indexing="ij")
    return [a.ravel() for a in mesh]


def _grid_rows(builder):
    rows = builder()

    def take(config, start, stop):
        return {k: v[start:stop] for k, v in rows.items()}

    n = len(next(iter(rows.values())))
    return take, (lambda config: n)


def _containment_rows():
    t, c = _grid(T_GRID, C_GRID)
    return {"t": t, "c": c}


def _monotone_rows():
    ti, ci = _grid(np.arange(len(T_GRID)), np.arange(len(C_GRID)))
    t = T_GRID[ti]
    c = C_GRID[ci]
    t_next = np.where(ti + 1 < len(T_GRID), T_GRID[np.minimum(ti + 1, len(T_GRID) - 1)], np.nan)
    c_next = np.where(ci + 1 < len(C_GRID), C_GRID[np.minimum(ci + 1, len(C_GRID) - 1)], np.nan)
    return {"t": t, "c": c, "t_next": t_next, "c_next": c_next}


def _extremal_rows():
    c, x = _grid(EXTREMAL_C, EXTREMAL_X)
    return {"c": c, "x": x}


def _extremal_gradient_rows():
    c, which = _grid(EXTREMAL_C, np.array([1.0, 2.0]))
    return {"c": c, "which": which}


def _radial_rows():
    return {"t": RADIAL_T.copy()}


def _halfplane_rows():
    a, b = _grid(HALFPLANE_REALS, HALFPLANE_REALS)
    return {"a": a, "b": b}


def _disc_image_rows():
    b, r = _grid(DISC_IMAGE_B, DISC_IMAGE_R)
    return {"b": b, "r": r}


def _sp_equality_rows():
    theta, rad, arg = _grid(EQ_ANGLES, EQ_RADII, EQ_ANGLES)
    return {"theta": theta, "z": rad * np.exp(1j * arg)}


def _real_pair_rows():
    theta, x1, x2 = _grid(EQ_ANGLES[::2], REAL_LINE, REAL_LINE)
    zeta = np.exp(1j * theta)
    return {"theta": theta, "z1": x1 * zeta, "z2": x2 * zeta}


def _real_point_rows():
    theta, x = _grid(EQ_ANGLES[::2], REAL_LINE)
    return {"theta": theta, "z": x * np.exp(1j * theta)}


def _main_probe_rows():
    """Extremal functions u1, u2 as two-atom measures, evaluated on [0, 1)."""
    block = _empty_block(2 * len(EXTREMAL_C) * len(EXTREMAL_X), 2)
    i = 0
    for which in ("u1", "u2"):
        for c in EXTREMAL_C:
            m = bounds.extremal_measure(float(c), which)
            for x in EXTREMAL_X:
                _put_row(block, i, m, complex(x), 0j, 0j, 0.0, 0.99)
                i += 1
    return block


_MAIN_PROBES = _main_probe_rows()


def _main_rows(config, start, stop):
    n = config.trials
    parts = []
    if start < n:
        parts.append(random_rows(config, start, min(stop, n)))
    if stop > n:
        lo = max(start, n) - n
        hi = stop - n
        probes = {k: v[lo:hi] for k, v in _MAIN_PROBES.items()}
        k = config.max_atoms
        if probes["thetas"].shape[1] < k:
            pad = k - probes["thetas"].shape[1]
            probes["thetas"] = np.pad(probes["thetas"], ((0, 0), (0, pad)))
            probes["weights"] = np.pad(probes["weights"], ((0, 0), (0, pad)))
        parts.append(probes)
    if len(parts) == 1:
        return parts[0]
    return {k: _concat(parts[0][k], parts[1][k]) for k in parts[0]}


def _concat(a, b):
    if a.ndim == 2 and a.shape[1] != b.shape[1]:
        width = max(a.shape[1], b.shape[1])
        a = np.pad(a, ((0, 0), (0, width - a.shape[1])))
        b = np.pad(b, ((0, 0), (0, width - b.shape[1])))
    return np.concatenate([a, b])


# ---------------------------------------------------------------------------
# Checks: inputs -> slack (>= 0 means the property holds)
# ---------------------------------------------------------------------------

def _u_ratio(b, z):
    u0 = u_kernel(b["thetas"], b["weights"], np.zeros(len(z), dtype=complex))
    return u_kernel(b["thetas"], b["weights"], z) / u0


def _c_of(b):
    return hyperbolic_derivative_zero_kernel(b["thetas"], b["weights"])


def check_isometry_invariance(b):
    c = b["aux"]
    moved = dist_disc(disc_automorphism(c, b["z1"]), disc_automorphism(c, b["z2"]))
    return -np.abs(moved - dist_disc(b["z1"], b["z2"]))


def check_cayley_isometry(b):
    z1, z2 = b["z1"], b["z2"]
    pulled = dist_halfplane(cayley_to_halfplane(z1), cayley_to_halfplane(z2))
    return -np.abs(pulled - dist_disc(z1, z2))


def check_round_trip(b):
    z = b["z1"] * (0.999 / b["rmax"])
    return -np.abs(cayley_to_disc(cayley_to_halfplane(z)) - z)


def check_radial_closed_form(b):
    t = b["t"]
    return -np.abs(dist_disc(t, 0.0) - np.log((1 + t) / (1 - t)))


def check_radial_quadrature(b):
    t = b["t"]
    quad = np.array([integrate.quad(lambda s: 2.0 / (1.0 - s * s), 0.0, ti,
                                    epsabs=1e-13, epsrel=1e-13)[0] for ti in t])
    return -np.abs(dist_disc(t, 0.0) - quad)


def check_halfplane_distance(b):
    a, c = b["a"], b["b"]
    quad = np.array([abs(integrate.quad(lambda x: 1.0 / x, lo, hi,
                                        epsabs=0.0, epsrel=1e-12, limit=200)[0])
                     for lo, hi in zip(a, c)])
    return -np.abs(dist_halfplane(a, c) - quad)


def _disc_image_samples(bv, rv):
    z = rv * np.exp(2j * np.pi * np.arange(DISC_IMAGE_SAMPLES) / DISC_IMAGE_SAMPLES)
    return halfplane_isometry(bv)(z)


def check_disc_image_boundary(b):
    out = []
    for bv, rv in zip(b["b"], b["r"]):
        w = _disc_image_samples(bv, rv)
        disc = halfplane_disc_image(bv, rv)
        out.append(-np.max(np.abs(np.abs(w - disc.center) - disc.radius)))
    return np.array(out)


def check_disc_image_interval(b):
    out = []
    for bv, rv in zip(b["b"], b["r"]):
        re = _disc_image_samples(bv, rv).real
        lo, hi = halfplane_disc_re_interval(bv, rv)
        out.append(-max(abs(re.min() - lo) / lo, abs(re.max() - hi) / hi))
    return np.array(out)


def check_positivity(b):
    return u_kernel(b["thetas"], b["weights"], b["z1"])


def check_normalization(b):
    n = len(b["z1"])
    zero = np.zeros(n, dtype=complex)
    f0 = f_kernel(b["thetas"], b["weights"], zero)
    u0 = u_kernel(b["thetas"], b["weights"], zero)
    mass = atom_sum(b["weights"])
    return -np.maximum(np.abs(u0 - mass), np.abs(f0.imag))


def check_gradient_consistency(b, h=1e-5):
    th, w = b["thetas"], b["weights"]
    z = b["z1"] * (0.9 / b["rmax"])
    fp = f_prime_kernel(th, w, z)
    ux = (u_kernel(th, w, z + h) - u_kernel(th, w, z - h)) / (2 * h)
    uy = (u_kernel(th, w, z + 1j * h) - u_kernel(th, w, z - 1j * h)) / (2 * h)
    norm = np.abs(fp)
    err = np.hypot(ux - fp.real, uy + fp.imag)
    return np.where(norm > 1e-8, -err / np.where(norm > 1e-8, norm, 1.0), 0.0)


def check_hyperbolic_derivative_bound(b):
    return 1.0 - _c_of(b)


def check_hyperbolic_derivative_single(b):
    return -np.abs(_c_of({"thetas": b["thetas"][:, :1], "weights": b["weights"][:, :1]}) - 1.0)


def check_harmonicity(b, n=512):
    th, w = b["thetas"], b["weights"]
    z0 = b["z1"] * (0.5 / b["rmax"])
    rho = 0.3 * (1.0 - b["extra"])
    nodes = z0[:, None] + rho[:, None] * np.exp(2j * np.pi * np.arange(n) / n)[None, :]
    vals = u_kernel(th[:, None, :], w[:, None, :], nodes)
    return -np.abs(u_kernel(th, w, z0) - vals.mean(axis=1))


def _relative_harnack_slack(ratio, c, t):
    c_ok = c <= 1.0 + bounds.C_OVERSHOOT
    upper = bounds.harnack_upper(t, np.where(c_ok, c, 1.0))
    lower = 1.0 / upper
    slack = np.minimum((upper - ratio) / upper, (ratio - lower) / lower)
    return np.where(c_ok, slack, -np.inf)


def check_main_theorem(b):
    z = b["z1"]
    return _relative_harnack_slack(_u_ratio(b, z), _c_of(b), np.abs(z))


def check_containment(b):
    t, c = b["t"], b["c"]
    cl_hi = bounds.harnack_upper(t, 1.0)
    st_hi = bounds.harnack_upper(t, c)
    cl_lo, st_lo = 1.0 / cl_hi, 1.0 / st_hi
    slack = np.minimum((cl_hi - st_hi) / cl_hi, (st_lo - cl_lo) / cl_lo)
    # independent classical form; endpoints must coincide at c = 1
    ref = (1 + t) / (1 - t)
    gap = np.maximum(np.abs(st_hi - ref) / ref, np.abs(st_lo - 1.0 / ref) * ref)
    return np.where(c == 1.0, np.minimum(slack, -gap), slack)


def check_monotonicity(b):
    t, c, tn, cn = b["t"], b["c"], b["t_next"], b["c_next"]
    here = bounds.harnack_upper(t, c)
    by_c = np.where(np.isnan(cn) | (t == 0), np.inf,
                    bounds.harnack_upper(t, np.nan_to_num(cn)) - here)
    by_t = np.where(np.isnan(tn), np.inf, bounds.harnack_upper(np.nan_to_num(tn), c) - here)
    return np.minimum(by_c, by_t)


def check_extremal_sharpness(b):
    out = []
    for c, x in zip(b["c"], b["x"]):
        iv = bounds.stronger_harnack(x, c)
        g1 = abs(bounds.extremal_u1(c, x) - iv.upper) / iv.upper
        g2 = abs(bounds.extremal_u2(c, x) - iv.lower) / iv.lower
        out.append(-max(g1, g2))
    return np.array(out)


def check_extremal_gradient(b):
    return np.array([-abs(bounds.gradient_norm_extremal(c, "u1" if k == 1 else "u2") - 2 * c)
                     for c, k in zip(b["c"], b["which"])])


def check_lemma2_identity(b):
    return -bounds.lemma2_identity_gap(b["c"], b["t"])


def check_schwarz_pick_gradient(b):
    lhs, rhs = bounds.schwarz_pick_sides(b["thetas"], b["weights"], b["z1"])
    return rhs - lhs


def _single_atom(theta):
    return {"thetas": theta[:, None], "weights": np.ones((len(theta), 1))}


def check_schwarz_pick_equality(b):
    m, z = _single_atom(b["theta"]), b["z"]
    lhs = np.abs(f_prime_kernel(m["thetas"], m["weights"], z))
    rhs = 2.0 * u_kernel(m["thetas"], m["weights"], z) / one_minus_abs2(z)
    return -np.abs(rhs - lhs) / rhs


def _markovic(b, z1, z2):
    u1 = u_kernel(b["thetas"], b["weights"], z1)
    u2 = u_kernel(b["thetas"], b["weights"], z2)
    return dist_disc(z1, z2) - np.abs(np.log(u1) - np.log(u2))


def check_markovic(b):
    return _markovic(b, b["z1"], b["z2"])


def check_markovic_equality(b):
    return -np.abs(_markovic(_single_atom(b["theta"]), b["z1"], b["z2"]))


def _beardon_carne(b, z):
    zero = np.zeros(len(z), dtype=complex)
    lhs = dist_halfplane(f_kernel(b["thetas"], b["weights"], z),
                         f_kernel(b["thetas"], b["weights"], zero))
    c = _c_of(b)
    c_ok = c <= 1.0 + bounds.C_OVERSHOOT
    rhs = bounds.beardon_carne_rhs(dist_disc(z, zero), np.where(c_ok, c, 1.0))
    return np.where(c_ok, rhs - lhs, -np.inf)


def check_beardon_carne(b):
    return _beardon_carne(b, b["z1"])


def check_beardon_carne_equality(b):
    return -np.abs(_beardon_carne(_single_atom(b["theta"]), b["z"]))


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    name: str
    rows: object          # (config, start, stop) -> inputs
    size: object          # config -> number of rows
    check: object         # inputs -> slack array
    strict: bool = False  # violation iff slack <= -tol instead of < -tol
    random: bool = False


def _random_suite(name, check, divisor=1, strict=False):
    return Suite(name, random_rows, lambda cfg: max(1, cfg.trials // divisor),
                 check, strict, True)


def _grid_suite(name, builder, check, strict=False):
    rows, size = _grid_rows(builder)
    return Suite(name, rows, size, check, strict)


SUITES = {s.name: s for s in [
    _random_suite("isometry_invariance", check_isometry_invariance),
    _random_suite("cayley_isometry", check_cayley_isometry),
    _random_suite("round_trip", check_round_trip),
    _grid_suite("radial_closed_form", _radial_rows, check_radial_closed_form),
    _grid_suite("radial_quadrature", _radial_rows, check_radial_quadrature),
    _grid_suite("halfplane_distance", _halfplane_rows, check_halfplane_distance),
    _grid_suite("disc_image_boundary", _disc_image_rows, check_disc_image_boundary),
    _grid_suite("disc_image_interval", _disc_image_rows, check_disc_image_interval),
    _random_suite("positivity", check_positivity, strict=True),
    _random_suite("normalization", check_normalization),
    _random_suite("gradient_consistency", check_gradient_consistency, divisor=10),
    _random_suite("hyperbolic_derivative_bound", check_hyperbolic_derivative_bound),
    _random_suite("hyperbolic_derivative_single", check_hyperbolic_derivative_single),
    _random_suite("harmonicity", check_harmonicity, divisor=100),
    Suite("main_theorem", _main_rows, lambda cfg: cfg.trials + len(_MAIN_PROBES["z1"]),
          check_main_theorem, False, True),
    _grid_suite("containment", _containment_rows, check_containment),
    _grid_suite("monotonicity", _monotone_rows, check_monotonicity, strict=True),
    _grid_suite("extremal_sharpness", _extremal_rows, check_extremal_sharpness),
    _grid_suite("extremal_gradient", _extremal_gradient_rows, check_extremal_gradient),
    _grid_suite("lemma2_identity", _containment_rows, check_lemma2_identity),
    _random_suite("schwarz_pick_gradient", check_schwarz_pick_gradient),
    _grid_suite("schwarz_pick_equality", _sp_equality_rows, check_schwarz_pick_equality),
    _random_suite("markovic", check_markovic),
    _grid_suite("markovic_equality", _real_pair_rows, check_markovic_equality),
    _random_suite("beardon_carne", check_beardon_carne),
    _grid_suite("beardon_carne_equality", _real_point_rows, check_beardon_carne_equality),
]}

assert set(SUITES) == set(DEFAULT_TOLERANCES)


def _get_suite(name):
    try:
        return SUITES[name]
    except KeyError:
        raise UsageError(f"unknown suite {name!r}") from None


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    x = float(x)
    return x if math.isfinite(x) else repr(x)


def _witness(suite, inputs, i, index):
    wit = {"row": int(index)}
    for key, col in inputs.items():
        if key in ("thetas", "weights", "natoms"):
            continue
        wit[key] = _jsonable(col[i])
    if "thetas" in inputs:
        wit["measure"] = _measure_of(inputs, i).to_json_obj()
    return wit


def _inputs_from_witness(wit):
    inputs = {}
    for key, val in wit.items():
        if key in ("row", "measure"):
            continue
        if isinstance(val, list):
            inputs[key] = np.array([complex(val[0], val[1])])
        else:
            inputs[key] = np.array([float(val)])
    if "measure" in wit:
        m = HerglotzMeasure.from_json_obj(wit["measure"])
        inputs["thetas"] = m.thetas[None, :]
        inputs["weights"] = m.weights[None, :]
        inputs["natoms"] = np.array([len(m)])
    return inputs


def replay_witness(suite, witness):
    """Re-evaluate a recorded witness on its own and return its slack."""
    return float(_get_suite(suite).check(_inputs_from_witness(witness))[0])


# ---------------------------------------------------------------------------
# Execution and merging
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteRecord:
    suite: str
    trials: int
    violations: int
    worst_slack: float
    witness: dict

    def to_json_obj(self):
        return {"suite": self.suite, "trials": self.trials, "violations": self.violations,
                "worst_slack": _jsonable(self.worst_slack), "witness": self.witness}


def _partial(name, config, start, stop):
    suite = _get_suite(name)
    inputs = suite.rows(config, start, stop)
    slack = np.asarray(suite.check(inputs), dtype=float)
    slack = np.where(np.isnan(slack), -np.inf, slack)
    tol = config.tolerance(name)
    bad = slack <= -tol if suite.strict else slack < -tol
    i = int(np.argmin(slack))
    return (stop - start, int(bad.sum()), float(slack[i]), start + i,
            _witness(name, inputs, i, start + i))


def _merge(a, b):
    worst = a if (a[2], a[3]) <= (b[2], b[3]) else b
    return (a[0] + b[0], a[1] + b[1], worst[2], worst[3], worst[4])


def _chunks(n):
    return [(s, min(s + CHUNK, n)) for s in range(0, n, CHUNK)]


def _tasks(names, config):
    return [(name, config, s, e) for name in names
            for s, e in _chunks(_get_suite(name).size(config))]


def _run_task(task):
    return task[0], _partial(*task)


def _execute(names, config, workers):
    tasks = _tasks(names, config)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    merged = {}
    for name, part in results:
        merged[name] = _merge(merged[name], part) if name in merged else part
    return [SuiteRecord(n, merged[n][0], merged[n][1], merged[n][2], merged[n][4])
            for n in names]


def run_suite(name, config, workers=1):
    _get_suite(name)
    return _execute([name], config, workers)[0]


@dataclass(frozen=True)
class VerificationReport:
    config: TrialConfig
    suites: tuple

    @property
    def passed(self):
        return all(r.violations == 0 for r in self.suites)

    def __getitem__(self, name):
        for r in self.suites:
            if r.suite == name:
                return r
        raise KeyError(name)

    def to_json_obj(self):
        return {"generator": GENERATOR, "config": self.config.to_json_obj(),
                "pass": self.passed, "suites": [r.to_json_obj() for r in self.suites]}

    def to_json(self):
        return json.dumps(self.to_json_obj(), indent=2, allow_nan=False) + "\n"


def run_all(config, workers=1, suites=None):
    names = list(SUITES) if suites is None else list(suites)
    return VerificationReport(config, tuple(_execute(names, config, workers)))
