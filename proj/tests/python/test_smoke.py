import math

import numpy as np
import pytest

import cohlab


def shannon(p):
    p = np.asarray(p, dtype=float)
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


def test_bell_diagonal_entropy_matches_shannon():
    d = [0.6, 0.2, 0.1, 0.1]
    rho = cohlab.bell_diagonal(d)
    assert rho.dims == [2, 2]
    assert cohlab.von_neumann_entropy(rho) == pytest.approx(shannon(d), abs=1e-12)
    assert np.allclose(np.linalg.eigvalsh(rho.matrix), sorted(d))


def test_coherence_against_numpy():
    rho = cohlab.random_mixed([3], 5)
    basis = cohlab.random_basis(3, 6)
    u = basis.unitary
    p = np.real(np.einsum("ri,rc,ci->i", u.conj(), rho.matrix, u))
    expected = shannon(p) - shannon(np.linalg.eigvalsh(rho.matrix))
    assert cohlab.rel_ent_coherence(rho, basis) == pytest.approx(expected, abs=1e-10)


def test_state_round_trip_through_numpy():
    m = np.diag([0.25, 0.75]).astype(complex)
    rho = cohlab.DensityMatrix(m)
    assert np.array_equal(rho.matrix, m)
    assert rho.purity() == pytest.approx(0.625)


def test_relation_reports():
    r = cohlab.check_two_basis_single(cohlab.maximally_mixed([2]), cohlab.computational_basis(2),
                                      cohlab.hadamard_basis())
    assert r.relation == "eq5"
    assert r.holds
    assert r.lhs == pytest.approx(0.0, abs=1e-12)
    assert r.terms["C"] == pytest.approx(1 / math.sqrt(2))

    bell = cohlab.bell_diagonal([1, 0, 0, 0])
    r = cohlab.check_bipartite_two_basis(bell, cohlab.computational_basis(2), cohlab.hadamard_basis())
    assert r.lhs == pytest.approx(3.0)
    assert r.rhs == pytest.approx(2.0)


def test_correlations():
    bell = cohlab.bell_diagonal([1, 0, 0, 0])
    assert cohlab.discord(bell) == pytest.approx(1.0, abs=1e-9)
    assert cohlab.concurrence(cohlab.bell_diagonal([0.6, 0.2, 0.1, 0.1])) == pytest.approx(0.2)


def test_ls_decompositions():
    ls = cohlab.ls_bell_diagonal([0.6, 0.2, 0.1, 0.1])
    assert ls.lam == pytest.approx(0.8)
    assert ls.K == pytest.approx(1.4)
    assert np.allclose(ls.recompose(), cohlab.bell_diagonal([0.6, 0.2, 0.1, 0.1]).matrix)
    h = cohlab.ls_horodecki(4.0)
    assert h.lam == 0.5
    assert h.rho_e is not None


def test_fuzz_and_figure():
    s = cohlab.fuzz("eq31", seed=7, trials=50)
    assert s["violations"] == 0
    csv = cohlab.figure_panel_csv(0.52, 0.1)
    assert csv.splitlines()[0] == "d3,lhs,rhs_eq27,rhs_eq18,rhs_eq28"
    assert len(csv.splitlines()) == 202


def test_errors_are_python_exceptions():
    with pytest.raises(cohlab.CohlabError):
        cohlab.bell_diagonal([0.5, 0.2, 0.1, 0.1])
    with pytest.raises(ValueError):
        cohlab.horodecki_state(7.0)
    with pytest.raises(cohlab.CohlabError):
        cohlab.fuzz("eq99")
