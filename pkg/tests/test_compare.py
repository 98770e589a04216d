import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import pearsonr

from mcdm_compare import DataError, agreement, spearman_naive, spearman_tie_adjusted

from strategies import permutations, rank_vectors


def naive_by_hand(a, b):
    m = len(a)
    d2 = sum((x - y) ** 2 for x, y in zip(a, b))
    return 1 - 6 * d2 / (m * (m * m - 1)), d2


class TestSpearmanNaive:
    def test_moora_vs_camels(self, published):
        a, b = published.ranks["moora"], published.camels
        expected, d2 = naive_by_hand(list(a), list(b))
        assert d2 == 9109
        assert spearman_naive(a, b) == pytest.approx(expected, abs=1e-15)
        assert spearman_naive(a, b) == pytest.approx(-1.0265, abs=1e-4)
        assert spearman_naive(a, b) < -1

    def test_identical(self, camels):
        assert spearman_naive(camels.ranks, camels.ranks) == 1.0

    def test_reversal(self):
        assert spearman_naive([1, 2, 3, 4, 5], [5, 4, 3, 2, 1]) == -1.0

    def test_errors(self):
        with pytest.raises(DataError, match="length mismatch"):
            spearman_naive([1, 2], [1, 2, 3])
        with pytest.raises(DataError, match="m >= 2"):
            spearman_naive([1], [1])


class TestSpearmanTieAdjusted:
    def test_self_with_ties(self, camels):
        assert spearman_tie_adjusted(camels.ranks, camels.ranks) == pytest.approx(1.0, abs=1e-15)

    def test_reversal(self):
        assert spearman_tie_adjusted([1, 2, 3, 4], [4, 3, 2, 1]) == pytest.approx(-1.0, abs=1e-15)

    def test_moora_vs_camels_against_pearson(self, published):
        a, b = published.ranks["moora"], published.camels
        oracle = pearsonr(a, b).statistic
        value = spearman_tie_adjusted(a, b)
        assert value == pytest.approx(oracle, abs=1e-12)
        assert -1 <= value < 0

    def test_constant_vector(self):
        with pytest.raises(DataError, match="constant"):
            spearman_tie_adjusted([1, 1, 1], [1, 2, 3])


class TestAgreement:
    def test_fuca_published_vs_camels(self, published):
        rep = agreement(published.ranks["fuca"], published.camels)
        assert rep.exact_matches == 28
        assert rep.sum_sq_diff == 2
        assert rep.max_abs_diff == 1
        assert rep.spearman_naive == pytest.approx(0.99955, abs=1e-5)

    def test_curli_published_vs_camels(self, published):
        rep = agreement(published.ranks["curli"], published.camels)
        assert rep.exact_matches == 23
        assert rep.sum_sq_diff == 7
        assert rep.spearman_naive == pytest.approx(0.99844, abs=1e-5)

    def test_self(self, camels):
        rep = agreement(camels.ranks, camels.ranks)
        assert rep.exact_matches == 30 and rep.sum_sq_diff == 0 and rep.max_abs_diff == 0
        assert rep.spearman_naive == 1.0
        assert rep.spearman_tie_adjusted == pytest.approx(1.0, abs=1e-15)

    def test_constant_input_has_no_adjusted_value(self):
        assert agreement([1, 1], [1, 2]).spearman_tie_adjusted is None


@given(a=rank_vectors(), data=st.data())
@settings(max_examples=1000)
def test_symmetry_and_self(a, data):
    b = data.draw(st.lists(st.integers(0, 6), min_size=len(a), max_size=len(a)))
    assert spearman_naive(a, b) == spearman_naive(b, a)
    assert spearman_naive(a, a) == 1.0
    if len(set(a)) > 1 and len(set(b)) > 1:
        assert spearman_tie_adjusted(a, b) == pytest.approx(spearman_tie_adjusted(b, a), abs=1e-15)
        assert -1 <= spearman_tie_adjusted(a, b) <= 1


@given(p=permutations(), data=st.data())
@settings(max_examples=1000)
def test_naive_equals_adjusted_on_permutations(p, data):
    q = data.draw(st.permutations(p))
    assert abs(spearman_naive(p, q) - spearman_tie_adjusted(p, q)) <= 1e-12
    assert -1 <= spearman_naive(p, q) <= 1


@given(m=st.integers(2, 30), d1=st.floats(0, 1e4), d2=st.floats(0, 1e4))
def test_naive_decreasing_in_sum_sq(m, d1, d2):
    # build vectors realising a given sum of squared differences
    base = np.zeros(m)
    f = lambda d: spearman_naive(base, np.r_[np.sqrt(d), np.zeros(m - 1)])
    if d1 < d2:
        assert f(d1) >= f(d2)


@given(a=rank_vectors(), data=st.data())
def test_agreement_permutation_invariant(a, data):
    b = data.draw(st.lists(st.integers(0, 6), min_size=len(a), max_size=len(a)))
    perm = data.draw(st.permutations(range(len(a))))
    r1 = agreement(a, b)
    r2 = agreement([a[i] for i in perm], [b[i] for i in perm])
    assert r1.exact_matches == r2.exact_matches
    assert r1.sum_sq_diff == r2.sum_sq_diff
    assert r1.max_abs_diff == r2.max_abs_diff
