"""Acceptance criteria at their stated tolerances.

The full default campaign (seed 1, 10^5 trials, up to 8 atoms, |z| <= 0.99)
is run twice through the command line; criteria 1-9 read the report and
criterion 10 compares the two runs byte for byte.  Run with ``-s`` to see
the PASS/FAIL lines as they are produced; they are also repeated in the
terminal summary.
"""

import json
import math

import numpy as np
import pytest
from scipy import integrate

from harnack import (
    classical_harnack,
    dist_disc,
    dist_halfplane,
    gradient_norm_extremal,
    stronger_harnack,
)
from harnack.cli import main
from harnack.harness import (
    C_GRID,
    DISC_IMAGE_B,
    DISC_IMAGE_R,
    EXTREMAL_C,
    EXTREMAL_X,
    RADIAL_T,
    T_GRID,
)


@pytest.fixture(scope="module")
def runs(tmp_path_factory):
    root = tmp_path_factory.mktemp("verify")
    texts = []
    for k in range(2):
        path = root / f"report{k}.json"
        argv = ["verify", "--seed", "1", "--trials", "100000", "--max-atoms", "8",
                "--rmax", "0.99", "--out", str(path)]
        assert main(argv) == 0
        texts.append(path.read_bytes())
    return texts


@pytest.fixture(scope="module")
def report(runs):
    obj = json.loads(runs[0])
    return {rec["suite"]: rec for rec in obj["suites"]} | {"_config": obj["config"]}


def clean(report, *names):
    return all(report[n]["violations"] == 0 for n in names)


def summary(report, *names):
    return ", ".join(f"{n} {report[n]['violations']}/{report[n]['trials']} "
                     f"worst {report[n]['worst_slack']}" for n in names)


def test_criterion_1_main_theorem(report, acceptance_log):
    cfg = report["_config"]
    rec = report["main_theorem"]
    ok = (cfg["seed"] == 1 and cfg["max_atoms"] == 8 and cfg["rmax"] == 0.99
          and cfg["tolerances"]["main_theorem"] == 1e-9
          and rec["trials"] >= 100_000 and rec["violations"] == 0)
    assert acceptance_log(1, ok, summary(report, "main_theorem"))


def test_criterion_2_containment(report, acceptance_log):
    rec = report["containment"]
    # endpoints at c = 1 against the textbook interval, checked here as well
    gap = max(max(abs(stronger_harnack(t, 1.0).upper - (1 + t) / (1 - t)) / ((1 + t) / (1 - t)),
                  abs(stronger_harnack(t, 1.0).lower - (1 - t) / (1 + t)) / ((1 - t) / (1 + t)))
              for t in T_GRID)
    within = all(stronger_harnack(t, c).within(classical_harnack(t))
                 for t in T_GRID[::9] for c in C_GRID[::5])
    ok = (rec["trials"] == len(T_GRID) * len(C_GRID) and rec["violations"] == 0
          and gap <= 1e-12 and within)
    assert acceptance_log(2, ok, f"{summary(report, 'containment')}, c=1 endpoint gap {gap:.2e}")


def test_criterion_3_extremal(report, acceptance_log):
    grads = {c: gradient_norm_extremal(c, "u1") for c in EXTREMAL_C}
    grad_err = max(abs(g - 2 * c) for c, g in grads.items())
    ok = (clean(report, "extremal_sharpness", "extremal_gradient")
          and report["extremal_sharpness"]["trials"] == len(EXTREMAL_C) * len(EXTREMAL_X)
          and grad_err <= 1e-6)
    assert acceptance_log(3, ok, f"{summary(report, 'extremal_sharpness', 'extremal_gradient')}, "
                                 f"max ||grad u1(0)| - 2c| {grad_err:.2e}")


def test_criterion_4_disc_image(report, acceptance_log):
    rec = report["disc_image_interval"]
    ok = rec["trials"] == len(DISC_IMAGE_B) * len(DISC_IMAGE_R) and rec["violations"] == 0
    assert acceptance_log(4, ok, summary(report, "disc_image_interval", "disc_image_boundary"))


def test_criterion_5_radius_identity(report, acceptance_log):
    rec = report["lemma2_identity"]
    ok = rec["trials"] == len(T_GRID) * len(C_GRID) and rec["violations"] == 0
    assert acceptance_log(5, ok, summary(report, "lemma2_identity"))


def test_criterion_6_gradient_oracle(report, acceptance_log):
    rec = report["gradient_consistency"]
    ok = rec["trials"] >= 10_000 and rec["violations"] == 0
    assert acceptance_log(6, ok, summary(report, "gradient_consistency"))


def test_criterion_7_schwarz_pick(report, acceptance_log):
    ok = (report["schwarz_pick_gradient"]["trials"] >= 100_000
          and clean(report, "schwarz_pick_gradient", "schwarz_pick_equality"))
    assert acceptance_log(7, ok, summary(report, "schwarz_pick_gradient", "schwarz_pick_equality"))


def test_criterion_8_markovic_beardon_carne(report, acceptance_log):
    names = ("markovic", "beardon_carne", "markovic_equality", "beardon_carne_equality")
    ok = (report["markovic"]["trials"] >= 100_000 and report["beardon_carne"]["trials"] >= 100_000
          and clean(report, *names))
    assert acceptance_log(8, ok, summary(report, *names))


def test_criterion_9_distance_oracle(report, acceptance_log):
    quad_err = max(abs(dist_disc(t, 0) - integrate.quad(lambda s: 2 / (1 - s * s), 0, t)[0])
                   for t in RADIAL_T)
    dk_err = abs(dist_halfplane(1, 3) - math.log(3))
    ok = (clean(report, "radial_quadrature", "radial_closed_form", "halfplane_distance")
          and quad_err <= 1e-6 and dk_err <= 1e-10
          and np.allclose(RADIAL_T, np.arange(0.1, 0.951, 0.05)))
    assert acceptance_log(9, ok, f"{summary(report, 'radial_quadrature')}, max quad error "
                                 f"{quad_err:.2e}, |d_K(1,3) - log 3| {dk_err:.2e}")


def test_criterion_10_determinism(runs, acceptance_log):
    ok = runs[0] == runs[1]
    assert acceptance_log(10, ok, f"two verify runs, {len(runs[0])} bytes each, identical={ok}")
