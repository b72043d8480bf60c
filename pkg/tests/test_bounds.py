import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigencount import (
    AdmissibilityError,
    ExteriorDisk,
    NormKind,
    Point,
    RegionSpec,
    Zero,
    approx_numbers,
    count_bound_disk,
    count_bound_disk_simple,
    count_bound_region,
    eigen_count_outside,
    gamma_p_upper,
    induced_norm,
    koenig_count_bound,
    lambert_w,
    moment_bound,
    moment_sum,
    phi_p,
    phi_p_envelope,
    pseudospectral_epsilon,
    shift_example,
    t_star,
)
from eigencount import materialize


def _bisect_w(x: float) -> float:
    lo, hi = 0.0, max(1.0, np.log(max(x, 1.0)) + 1.0)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid * np.exp(mid) < x:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_lambert_w_anchor_and_residual():
    assert lambert_w(1.0) == pytest.approx(0.5671432904097838, abs=1e-13)
    assert lambert_w(0.0) == 0.0
    for x in np.geomspace(1e-10, 1e5, 200):
        w = lambert_w(x)
        assert abs(w * np.exp(w) - x) <= 1e-13 * max(1.0, x)


@settings(deadline=None, max_examples=50)
@given(st.floats(min_value=1e-6, max_value=100.0))
def test_lambert_w_matches_bisection(x):
    assert lambert_w(x) == pytest.approx(_bisect_w(x), abs=1e-9)


def test_lambert_w_rejects_negative():
    with pytest.raises(ValueError):
        lambert_w(-0.5)


def _phi_oracle(p: float, x: float) -> float:
    # 1 / max over t in (x, 1) of (t - x)^p log(1/t), on a dense grid
    t = np.linspace(x, 1.0, 200001)[1:-1]
    return 1.0 / float(np.max((t - x) ** p * np.log(1.0 / t)))


@pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 3.0])
def test_phi_closed_form_vs_maximization(p):
    assert phi_p(p, 0.0) == pytest.approx(p * np.e, rel=1e-12)
    for x in (0.1, 0.3, 0.5, 0.7, 0.9):
        value = phi_p(p, x)
        assert value == pytest.approx(_phi_oracle(p, x), rel=1e-5)
        assert value <= phi_p_envelope(p, x) * (1 + 1e-9)


def test_phi_monotone_in_x():
    xs = np.linspace(0.0, 0.95, 40)
    vals = [phi_p(1.5, x) for x in xs]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_phi_rejects_out_of_range():
    with pytest.raises(AdmissibilityError):
        phi_p(1.0, 1.0)
    with pytest.raises(AdmissibilityError):
        phi_p(1.0, -0.1)
    with pytest.raises(AdmissibilityError):
        phi_p(0.0, 0.5)


def test_t_star_is_the_interior_maximum():
    for p, a, s in ((1.0, 1.0, 2.0), (0.5, 0.3, 1.1), (2.0, 0.0, 5.0)):
        t = t_star(p, a, s)
        assert a < t < s
        grid = np.linspace(a, s, 4001)[1:-1]
        profile = (grid - a) ** p * np.log(s / grid)
        peak = float(np.max(profile))
        assert (t - a) ** p * np.log(s / t) >= peak - 1e-10 * max(1.0, peak)


def _sound_on(entry, l0, k, p, s):
    full = l0 + k
    oracle = eigen_count_outside(full, s)
    for fn in (count_bound_disk, count_bound_disk_simple):
        report = fn(entry.model, p, s)
        assert report.admissible
        assert oracle <= report.bound + 1e-9 * max(1.0, report.bound)
    region = count_bound_region(entry.model, p, RegionSpec(ExteriorDisk(s)))
    assert oracle <= region.bound + 1e-9 * max(1.0, region.bound)


def test_bounds_sound_on_a_few_corpus_models(materialized):
    for entry, l0, k in materialized[:6]:
        norm_l0 = induced_norm(l0, entry.model.norm)
        norm_k = induced_norm(k, entry.model.norm)
        for i, p in enumerate((0.5, 1.0, 2.0)):
            s = norm_l0 + (0.3 + 0.3 * i) * (norm_k + 1.0)
            _sound_on(entry, l0, k, p, s)


def test_phi_bound_never_worse_than_envelope_bound(materialized):
    entry, l0, k = materialized[0]
    norm_l0 = induced_norm(l0, entry.model.norm)
    norm_k = induced_norm(k, entry.model.norm)
    for s in (norm_l0 + 0.4 * norm_k + 0.2, norm_l0 + norm_k + 1.0):
        a = count_bound_disk(entry.model, 1.0, s).bound
        b = count_bound_disk_simple(entry.model, 1.0, s).bound
        assert a <= b * (1 + 1e-12) + 1e-12


def test_region_with_optimal_circle_matches_disk_bound(materialized):
    entry, l0, k = materialized[1]
    norm_l0 = induced_norm(l0, entry.model.norm)
    norm_k = induced_norm(k, entry.model.norm)
    s = norm_l0 + 0.5 * (norm_k + 1.0)
    dim = entry.model.dim
    disk = count_bound_disk(entry.model, 1.0, s, n_rank=dim)
    region = count_bound_region(
        entry.model, 1.0,
        RegionSpec(ExteriorDisk(s), t=t_star(1.0, norm_l0, s)), n_rank=dim)
    assert region.bound == pytest.approx(disk.bound, rel=1e-9)


def test_inadmissible_radius_is_reported():
    model, _ = shift_example(np.array([2.0 + 0j]), 12)
    with pytest.raises(AdmissibilityError) as info:
        count_bound_disk(model, 1.0, 0.8)  # inside the unperturbed norm
    assert "s" in str(info.value) or "radius" in str(info.value)


def test_point_target_region_bound():
    model, _ = shift_example(np.array([2.0 + 0j]), 12)
    l0, k = materialize(model)
    report = count_bound_region(model, 1.0, RegionSpec(Point(2.0 + 0j)))
    assert report.admissible
    assert report.bound >= 1.0 - 1e-9  # lam = 2 is an eigenvalue


def test_compact_case_recovery():
    rng = np.random.default_rng(7)
    m = rng.standard_normal((10, 10)) + 1j * rng.standard_normal((10, 10))
    from eigencount import OperatorModel, Dense
    model = OperatorModel(10, NormKind.L2, Zero(), Dense(m))
    norm_k = induced_norm(m, NormKind.L2)
    alpha = approx_numbers(m, NormKind.L2)
    for p in (0.5, 1.0, 2.0):
        s = 0.4 * norm_k
        report = count_bound_disk(model, p, s, n_rank=10)
        gamma = gamma_p_upper(p)
        expected = (p * np.e * gamma.c_p / s ** p) * alpha.head_power_sum(p, 10)
        assert report.bound == pytest.approx(expected, rel=1e-9)


def test_koenig_count_bound_dominates_oracle():
    rng = np.random.default_rng(13)
    for _ in range(20):
        dim = int(rng.integers(3, 12))
        m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        norm_k = float(np.linalg.norm(m, 2))
        for s in (0.3 * norm_k, 0.7 * norm_k):
            bound = koenig_count_bound(m, 1.0, s)
            assert eigen_count_outside(m, s) <= bound + 1e-9


def test_moment_bound_dominates_oracle(materialized):
    entry, l0, k = materialized[2]
    norm_l0 = induced_norm(l0, entry.model.norm)
    bound = moment_bound(entry.model, 1.0, 2.5)
    lhs = moment_sum(l0 + k, norm_l0, 2.5)
    assert lhs <= bound + 1e-9 * max(1.0, bound)


def test_moment_bound_rejects_small_exponent(materialized):
    entry, _, _ = materialized[2]
    with pytest.raises(AdmissibilityError):
        moment_bound(entry.model, 1.0, 1.5)  # needs q > p + 1 when L0 != 0


def test_pseudospectral_epsilon_at_least_certified_gap():
    model, _ = shift_example(np.array([2.0 + 0j]), 16)
    l0, _ = materialize(model)
    t = 1.4
    eps = pseudospectral_epsilon(l0, t, model.norm)
    assert eps >= (t - 1.0) - 1e-9  # 1 / sup||R|| >= t - ||L0||


def test_empirical_region_bound_tightens_and_is_flagged():
    model, _ = shift_example(np.array([2.0 + 0j]), 16)
    l0, _ = materialize(model)
    s = 1.6
    certified = count_bound_region(model, 1.0, RegionSpec(ExteriorDisk(s)))
    eps = pseudospectral_epsilon(l0, certified.t_star, model.norm)
    empirical = count_bound_region(
        model, 1.0, RegionSpec(ExteriorDisk(s), t=certified.t_star), epsilon=eps)
    assert certified.certified
    assert not empirical.certified
    assert empirical.bound <= certified.bound * (1 + 1e-9)


def test_bound_report_serialization_round_trip(materialized):
    entry, l0, k = materialized[0]
    norm_l0 = induced_norm(l0, entry.model.norm)
    norm_k = induced_norm(k, entry.model.norm)
    s = norm_l0 + 0.5 * (norm_k + 1.0)
    report = count_bound_disk(entry.model, 1.0, s).with_oracle(3)
    doc = report.to_dict()
    assert doc["kind"] == "disk_phi"
    assert doc["oracle_count"] == 3
    assert doc["target"] == [s, 0.0]
    assert set(doc) >= {"p", "n_rank", "t_star", "eps", "gamma_p", "c_p",
                        "phi_value", "alpha_sum", "alpha_mode", "bound",
                        "admissible", "certified"}
