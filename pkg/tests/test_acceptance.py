"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import math
import time

import pytest

from fcat import profiles, verify
from fcat.verify import Family, Verdict


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
        assert ok, detail
    return emit


def worst(rep):
    """Largest observed/bound ratio over the upper-bound checks of a report."""
    ratios = [c.observed / c.bound for c in rep.checks if c.upper and c.bound > 0]
    return max(ratios) if ratios else 0.0


def test_1_table_reproduction(report):
    start = time.perf_counter()
    du = dI = 0.0
    for C, u1, u2, i1, i2 in profiles.PUBLISHED_TABLE:
        row = profiles.table_row(C)
        rtol = 1e-3 if C == 2.72 else 1e-5
        du = max(du, abs(row.u1 - u1), abs(row.u2 - u2))
        dI = max(dI, abs(row.I1 - i1) / i1 / rtol, abs(row.I2 - i2) / i2 / rtol)
    elapsed = time.perf_counter() - start
    ok = len(profiles.PUBLISHED_TABLE) == 25 and du <= 1e-8 and dI <= 1.0 and elapsed < 10.0
    report(1, "table reproduction", ok,
           f"25 rows, max|du|={du:.2e} (<=1e-8), max rel dI/tol={dI:.2f} (<=1), {elapsed:.3f}s (<10s)")


def test_2_domain_cases(report):
    rep = verify.domain_suite()
    n_roots = sum("roots" in c.label for c in rep.checks)
    report(2, "domain trichotomy", rep.passed and n_roots == 4,
           f"{len(rep.checks)} checks, root residual max {max(c.observed for c in rep.checks if 'roots' in c.label):.1e} (<=1e-9)")


def test_3_zero_f_mean_curvature(report):
    rep = verify.survivor_suite(Family.SPACELIKE, grid=64)
    rep.merge(verify.survivor_suite(Family.TIMELIKE, grid=64))
    cats = [c for c in rep.checks if "catenoid" in c.label]
    top = max(c.observed for c in cats)
    report(3, "zero H_f residuals", rep.passed and len(cats) == 8,
           f"{len(cats)} f-catenoids on 64x64 grids, max|H_f|={top:.2e} (<=1e-6)")


def test_4_corollary(report):
    rep = verify.corollary_suite()
    report(4, "planes and cylinders", rep.passed,
           f"{len(rep.checks)} checks, worst observed/bound ratio {worst(rep):.2e}")


def test_5_classification_sweep(report):
    details, ok = [], True
    for fam in Family:
        rep = verify.theorem_sweep(fam, trials=200, seed=0)
        generic = [t.spread for t in rep.trials if not t.escape]
        escape = [t.spread for t in rep.trials if t.escape]
        ok &= (rep.passed and rep.verdict is Verdict.CONSISTENT and len(rep.trials) == 200
               and min(generic) > 1e-4 and (not escape or max(escape) <= 1e-10))
        details.append(f"{fam.value}: {len(generic)} generic min spread {min(generic):.2e}, "
                       f"{len(escape)} escape max spread {max(escape, default=0.0):.1e}")
    report(5, "classification sweep", ok, "; ".join(details))


def test_6_divergence_at_e(report):
    values = [profiles.divergence_probe(10.0 ** -k) for k in range(2, 6)]
    steps = [b - a for a, b in zip(values, values[1:])]
    spread = max(steps) / min(steps) - 1.0
    ok = min(steps) > 0.0 and spread <= 0.15
    report(6, "divergence at C=e", ok,
           f"increments {', '.join(f'{s:.4f}' for s in steps)} (log growth rate {math.log(10) / math.sqrt(2):.4f}), "
           f"spread {spread:.1%} (<=15%)")


def test_7_pairing_distance_identity(report):
    rep = verify.lemma1_suite(1000, seed=0)
    report(7, "pairing as distance", rep.passed, f"1000 pairs, max|lhs-rhs|={rep.checks[0].observed:.1e} (<=1e-10)")


def test_8_oracle_cross_checks(report):
    formulas = verify.revolution_formula_suite(500, seed=0)
    odes = verify.ode_suite(100, seed=0)
    ok = formulas.passed and odes.passed
    report(8, "oracle cross-checks", ok,
           f"500 points H/pairing max rel gap {max(c.observed for c in formulas.checks):.1e} (<=1e-8); "
           f"ODE residual max {max(c.observed for c in odes.checks):.1e} (<=1e-10)")
