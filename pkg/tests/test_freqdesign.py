import math

import numpy as np
import pytest

from rfda_secrecy import (ConvergenceError, FixtureError, build_design_matrix,
                          default_fixture_path, generate_k, load_frequency_table,
                          rho1, rho2, symmetric_eigen, taylor_gram_constant)


def rho1_brute(k):
    k = np.asarray(k, dtype=float)
    return sum((a - b) ** 2 for a in k for b in k)


def rho2_brute(k):
    k = np.asarray(k, dtype=float)
    return sum((k[m] - k[n]) * (m - n) for m in range(k.size) for n in range(k.size))


def gram_brute(m):
    return sum((a - b) ** 2 for a in range(1, m + 1) for b in range(1, m + 1))


def test_rho1_examples():
    assert rho1([1.0, -1.0]) == pytest.approx(8.0, rel=1e-12)
    assert rho1([1.0, -2.0, 1.0]) == pytest.approx(36.0, rel=1e-12)
    assert rho1([3.7] * 6) == pytest.approx(0.0, abs=1e-9)


def test_rho2_examples():
    assert rho2([1.0, -2.0, 1.0]) == pytest.approx(0.0, abs=1e-12)
    assert rho2([1.0, -1.0]) == pytest.approx(-4.0, rel=1e-12)
    assert rho2([2.5] * 5) == pytest.approx(0.0, abs=1e-9)


def test_rho_closed_forms_match_double_sums():
    rng = np.random.default_rng(11)
    for _ in range(200):
        k = rng.standard_normal(int(rng.integers(1, 20))) * rng.uniform(0.1, 30)
        assert rho1(k) == pytest.approx(rho1_brute(k), rel=1e-9, abs=1e-9)
        assert rho2(k) == pytest.approx(rho2_brute(k), rel=1e-9, abs=1e-9)


def test_taylor_gram_constant():
    assert taylor_gram_constant(1) == 0
    assert taylor_gram_constant(2) == 2
    assert taylor_gram_constant(16) == 10880
    for m in range(1, 101):
        assert taylor_gram_constant(m) == gram_brute(m)
    with pytest.raises(ValueError):
        taylor_gram_constant(0)


def test_design_matrix_small_cases():
    with pytest.raises(ValueError):
        build_design_matrix(1)
    assert np.abs(build_design_matrix(2)).max() == 0.0
    u = np.array([1.0, -2.0, 1.0])
    np.testing.assert_allclose(build_design_matrix(3), 12.0 * np.outer(u, u),
                               atol=1e-9)


def test_design_matrix_symmetric_and_annihilates_infeasible_directions():
    for m in (3, 4, 7, 12, 25):
        a = build_design_matrix(m)
        np.testing.assert_allclose(a, a.T, atol=1e-9 * np.abs(a).max())
        ones = np.ones(m)
        idx = np.arange(1, m + 1, dtype=float)
        scale = np.abs(a).max()
        assert np.abs(a @ ones).max() < 1e-9 * scale
        assert np.abs(a @ idx).max() < 1e-9 * scale


def test_design_matrix_top_eigenspace():
    # top eigenvalue M^3(M^2-1)/3 with multiplicity M-2, orthogonal to the
    # all-ones and index vectors
    for m in range(3, 33):
        a = build_design_matrix(m)
        eig = symmetric_eigen(a)
        lam_expected = m ** 3 * (m ** 2 - 1) / 3.0
        assert eig.eigenvalues[0] == pytest.approx(lam_expected, rel=1e-9)
        top = eig.eigenvectors[:, eig.eigenvalues >= eig.eigenvalues[0] * (1 - 1e-6)]
        assert top.shape[1] == m - 2
        ones = np.ones(m) / math.sqrt(m)
        idx = np.arange(1, m + 1, dtype=float)
        idx /= np.linalg.norm(idx)
        assert np.abs(ones @ top).max() < 1e-8
        assert np.abs(idx @ top).max() < 1e-8


def test_symmetric_eigen_trivial_matrices():
    eig = symmetric_eigen(np.eye(3))
    np.testing.assert_allclose(eig.eigenvalues, [1.0, 1.0, 1.0], atol=1e-12)
    eig = symmetric_eigen(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(eig.eigenvalues, [3.0, 2.0, 1.0], atol=1e-12)
    eig = symmetric_eigen(np.zeros((4, 4)))
    np.testing.assert_allclose(eig.eigenvalues, np.zeros(4), atol=1e-15)


def test_symmetric_eigen_design_matrix_three():
    eig = symmetric_eigen(build_design_matrix(3))
    assert eig.eigenvalues[0] == pytest.approx(72.0, rel=1e-12)
    v = eig.eigenvectors[:, 0]
    u = np.array([1.0, -2.0, 1.0]) / math.sqrt(6.0)
    assert min(np.linalg.norm(v - u), np.linalg.norm(v + u)) < 1e-9


def test_symmetric_eigen_random_against_numpy():
    rng = np.random.default_rng(5)
    for _ in range(60):
        n = int(rng.integers(1, 13))
        x = rng.standard_normal((n, n)) * rng.uniform(0.1, 100)
        a = (x + x.T) / 2.0
        eig = symmetric_eigen(a)
        scale = max(np.linalg.norm(a), 1e-30)
        np.testing.assert_allclose(eig.eigenvalues,
                                   np.sort(np.linalg.eigvalsh(a))[::-1],
                                   atol=1e-8 * scale)
        residual = a @ eig.eigenvectors - eig.eigenvectors * eig.eigenvalues
        assert np.abs(residual).max() < 1e-8 * scale
        gram = eig.eigenvectors.T @ eig.eigenvectors
        np.testing.assert_allclose(gram, np.eye(n), atol=1e-9)


def test_symmetric_eigen_input_validation():
    with pytest.raises(ValueError):
        symmetric_eigen(np.arange(6.0).reshape(2, 3))
    with pytest.raises(ValueError):
        symmetric_eigen(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(ValueError):
        symmetric_eigen(np.eye(2), tol=0.0)
    with pytest.raises(ConvergenceError):
        symmetric_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]), max_sweeps=0)


def test_generate_k_unique_direction_for_three_elements():
    vec = generate_k(3, 6.0, "projection", seed=5)
    scaled = vec.k / vec.k[0]
    np.testing.assert_allclose(scaled, [1.0, -2.0, 1.0], atol=1e-9)
    vec = generate_k(3, 6.0, "eigen", seed=9)
    scaled = vec.k / vec.k[0]
    np.testing.assert_allclose(scaled, [1.0, -2.0, 1.0], atol=1e-6)


def test_generate_k_infeasible_and_bad_inputs():
    with pytest.raises(ValueError):
        generate_k(2, 10.0)
    with pytest.raises(ValueError):
        generate_k(8, -1.0)
    with pytest.raises(ValueError):
        generate_k(8, 10.0, method="magic")


def test_generate_k_deterministic():
    a = generate_k(16, 10405.0, "projection", seed=42)
    b = generate_k(16, 10405.0, "projection", seed=42)
    c = generate_k(16, 10405.0, "projection", seed=43)
    np.testing.assert_array_equal(a.k, b.k)
    assert np.abs(a.k - c.k).max() > 1e-3


@pytest.mark.parametrize("method,sizes", [
    ("projection", (3, 4, 7, 16, 33, 64)),
    ("eigen", (3, 4, 7, 16, 33, 64)),
])
def test_generate_k_postconditions(method, sizes):
    rng = np.random.default_rng(77)
    for m in sizes:
        for _ in range(4):
            k_target = float(rng.uniform(1.0, 2e4))
            seed = int(rng.integers(0, 2 ** 32))
            vec = generate_k(m, k_target, method, seed)
            scale = math.sqrt(k_target)
            assert vec.K == pytest.approx(k_target, rel=1e-9)
            assert abs(vec.k.sum()) < 1e-9 * scale
            centered = np.arange(1, m + 1) - (m + 1) / 2.0
            assert abs(centered @ vec.k) < 1e-9 * scale
            assert rho1(vec) == pytest.approx(2.0 * m * k_target, rel=1e-9)
            assert abs(rho2(vec)) < 2.0 * m * 1e-9 * scale


def test_load_frequency_table_default_fixture():
    rows = load_frequency_table()
    assert [label for label, _ in rows] == ["K10405", "K12905", "K15405"]
    by_label = dict(rows)
    k1 = by_label["K10405"]
    assert len(k1) == 16
    assert k1.k[0] == -15.2
    assert k1.k[12] == 9.73
    # printed entries are rounded to ~3 significant digits
    assert k1.K == pytest.approx(10405.0, rel=0.005)
    assert k1.k.sum() == pytest.approx(0.03, abs=1e-9)
    assert by_label["K12905"].K == pytest.approx(12905.0, rel=0.005)
    assert by_label["K15405"].K == pytest.approx(15405.0, rel=0.005)
    assert default_fixture_path().exists()


def test_load_frequency_table_errors(tmp_path):
    with pytest.raises(FixtureError):
        load_frequency_table(tmp_path / "nope.csv")
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(FixtureError):
        load_frequency_table(empty)
    header_only = tmp_path / "header.csv"
    header_only.write_text("label," + ",".join(f"m{i}" for i in range(1, 17)) + "\n")
    with pytest.raises(FixtureError):
        load_frequency_table(header_only)
    bad_header = tmp_path / "badheader.csv"
    bad_header.write_text("foo,bar\n1,2\n")
    with pytest.raises(FixtureError):
        load_frequency_table(bad_header)
    short_row = tmp_path / "short.csv"
    short_row.write_text("label," + ",".join(f"m{i}" for i in range(1, 17))
                         + "\nK10405,1,2,3\n")
    with pytest.raises(FixtureError, match="row 2"):
        load_frequency_table(short_row)
    bad_value = tmp_path / "badvalue.csv"
    bad_value.write_text("label," + ",".join(f"m{i}" for i in range(1, 17))
                         + "\nK10405," + ",".join(["1"] * 15) + ",oops\n")
    with pytest.raises(FixtureError, match="row 2"):
        load_frequency_table(bad_value)
