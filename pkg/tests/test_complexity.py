import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quantlog.complexity import amplification_repetitions, qlsp_cost, total_cost
from quantlog.errors import DomainError


class TestQlspCost:
    def test_substitution(self):
        q, u, g = qlsp_cost(1, 1.0, 0.5)
        assert q == pytest.approx(math.log2(2) ** 2)
        assert u == pytest.approx(1.0)
        assert g == pytest.approx(q * (math.log2(2) + 1.0))

    def test_formula(self):
        d, k, e, N = 3, 5.0, 0.01, 16
        ell = math.log2(d * k / e)
        q, u, g = qlsp_cost(d, k, e, N)
        assert q == pytest.approx(d * k**2 * ell**2, rel=1e-14)
        assert u == pytest.approx(k * ell, rel=1e-14)
        assert g == pytest.approx(q * (4 + ell**2.5), rel=1e-14)

    def test_kappa_doubling(self):
        for k in (1.0, 2.0, 7.5):
            assert qlsp_cost(2, 2 * k, 0.1)[0] >= 4 * qlsp_cost(2, k, 0.1)[0]

    @pytest.mark.parametrize("args", [(0, 1.0, 0.1), (1, 0.5, 0.1), (1, 1.0, 0.0), (1, 1.0, 0.6)])
    def test_domain(self, args):
        with pytest.raises(DomainError):
            qlsp_cost(*args)


class TestTotalCost:
    def test_kappa_relations(self):
        rep = total_cost(0.5, 1, 0.1, 4, 2)
        assert rep.kappa_prime == pytest.approx(2.0)
        assert rep.kappa_A_bound == 2 * rep.kappa_prime == pytest.approx(4.0)

    def test_matches_solver_with_kappa_prime(self):
        rep = total_cost(0.3, 2, 0.05, 8, 4)
        q, u, g = qlsp_cost(2, 1 / 0.7, 0.05, 32)
        assert (rep.pa_queries, rep.pb_uses) == (q, u)
        assert rep.gates == pytest.approx(g + 1 + 3, rel=1e-15)

    def test_L_adds(self):
        a = total_cost(0.3, 2, 0.05, 8, 4, L=0.0)
        b = total_cost(0.3, 2, 0.05, 8, 4, L=100.0)
        assert b.gates - a.gates == pytest.approx(100.0)

    def test_oracle_gates(self):
        rep = total_cost(0.3, 2, 0.05, 8, 4, s=16)
        assert rep.oracle_gates_per_query == 5 + 256

    def test_monotone(self):
        base = dict(rho=0.4, d=2, eps_prime=0.1, M=4, N=4)
        ref = total_cost(**base).gates
        for key, val in (("rho", 0.6), ("d", 3), ("eps_prime", 0.05), ("M", 8), ("N", 8)):
            assert total_cost(**{**base, key: val}).gates > ref

    def test_repetitions_filled(self):
        assert total_cost(0.3, 1, 0.1, 2, 2).aa_repetitions is None
        assert total_cost(0.3, 1, 0.1, 2, 2, p_lower_bound=0.01).aa_repetitions == 10

    @pytest.mark.parametrize("kw", [dict(rho=1.0), dict(M=0), dict(L=-1.0), dict(eps_prime=0.0)])
    def test_domain(self, kw):
        args = {**dict(rho=0.3, d=1, eps_prime=0.1, M=2, N=2), **kw}
        with pytest.raises(DomainError):
            total_cost(**args)


class TestAmplification:
    def test_examples(self):
        assert amplification_repetitions(1.0) == 1
        assert amplification_repetitions(0.25) == 2
        assert amplification_repetitions(1 / 36) == 6

    def test_domain(self):
        with pytest.raises(DomainError):
            amplification_repetitions(0.0)
        with pytest.raises(DomainError):
            amplification_repetitions(1.5)


@given(st.floats(1e-12, 1.0))
def test_repetition_invariant(p):
    reps = amplification_repetitions(p)
    assert 1.0 <= reps * math.sqrt(p) < 2.0
