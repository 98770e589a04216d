import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcdm_compare import (
    DataError,
    DecisionMatrix,
    Direction,
    curli,
    curli_score_table,
    fuca,
    moora,
    ram,
    rank_scores,
)
from mcdm_compare.methods import CANONICAL_ORDER, METHODS

from strategies import positive_matrices


def bank_config(banks, direction):
    return banks.with_policy(directions=direction).equal_weights()


def brute_curli(values, directions):
    """Double-loop pairwise scoring, one cell at a time."""
    m, n = len(values), len(values[0])
    table = [[0] * n for _ in range(m)]
    for j in range(n):
        for i in range(m):
            for k in range(m):
                if i == k:
                    continue
                a, b = values[i][j], values[k][j]
                if directions[j] is Direction.BENEFIT:
                    table[i][j] += 1 if a > b else (-1 if a < b else 0)
                else:
                    table[i][j] += 1 if a < b else (-1 if a > b else 0)
    return table


def same_order_up_to_roundoff(scores_a, scores_b, rtol=1e-9):
    """True when every pair is ordered identically unless it is a roundoff-level near tie in both vectors."""
    a = np.asarray(scores_a)
    b = np.asarray(scores_b)
    scale_a = max(np.max(np.abs(a)), 1e-300)
    scale_b = max(np.max(np.abs(b)), 1e-300)
    for i in range(a.size):
        for k in range(i + 1, a.size):
            if np.sign(a[i] - a[k]) != np.sign(b[i] - b[k]):
                if abs(a[i] - a[k]) > rtol * scale_a or abs(b[i] - b[k]) > rtol * scale_b:
                    return False
    return True


def increasing_remap(column, increments):
    """Strictly increasing transform of ``column``: sorted distinct values map to cumulative increments."""
    distinct = np.unique(column)
    targets = np.cumsum(increments[: distinct.size])
    return targets[np.searchsorted(distinct, column)]


class TestMoora:
    def test_bank_anchors(self, banks, published):
        res = moora(bank_config(banks, "benefit"))
        names = banks.alternatives
        assert res.score_of("TCB") == pytest.approx(0.0130, abs=2e-4)
        assert res.score_of("NCB") == pytest.approx(0.0388, abs=2e-4)
        assert res.rank_of("TCB") == 30 and res.rank_of("NCB") == 1
        np.testing.assert_array_equal(res.ranks, published.ranks["moora"])
        assert names == published.alternatives

    def test_two_by_one(self):
        res = moora(DecisionMatrix.from_values([[1.0], [2.0]], directions="benefit", weights=[1.0]))
        np.testing.assert_allclose(res.scores, [1 / np.sqrt(5), 2 / np.sqrt(5)], rtol=1e-15)
        assert res.scores == pytest.approx([0.44721, 0.89443], abs=1e-5)
        assert res.ranks.tolist() == [2, 1]

    def test_intermediates(self, banks):
        res = moora(banks.with_policy(directions=["benefit"] * 3 + ["cost"] * 3))
        np.testing.assert_array_equal(res.details["Q"], res.details["P"] - res.details["R"])
        only_benefit = moora(bank_config(banks, "benefit"))
        assert np.all(only_benefit.details["R"] == 0)

    def test_identical_rows_tie(self):
        res = moora(DecisionMatrix.from_values([[3, 4], [3, 4], [1, 9]], directions=["benefit", "cost"]))
        assert res.scores[0] == res.scores[1]
        assert res.ranks[0] == res.ranks[1]

    @given(positive_matrices())
    @settings(max_examples=200)
    def test_direction_flip_negates(self, matrix):
        flipped = matrix.with_policy(directions=[d.flipped() for d in matrix.directions])
        a, b = moora(matrix), moora(flipped)
        np.testing.assert_array_equal(b.details["P"], a.details["R"])
        np.testing.assert_array_equal(b.details["R"], a.details["P"])
        np.testing.assert_array_equal(b.scores, -a.scores)

    @given(positive_matrices(), st.floats(1e-3, 1e3))
    @settings(max_examples=200)
    def test_uniform_weight_rescaling(self, matrix, c):
        rescaled = matrix.with_policy(weights=list(matrix.weights * c))
        a, b = moora(matrix), moora(rescaled)
        assert same_order_up_to_roundoff(a.scores, b.scores)


class TestRam:
    def test_bank_anchors(self, banks, published):
        res = ram(bank_config(banks, "benefit"))
        assert res.score_of("TCB") == pytest.approx(1.4200, abs=3e-4)
        assert res.score_of("NCB") == pytest.approx(1.4312, abs=3e-4)
        assert res.score_of("NCB") == pytest.approx(1.4314, abs=3e-4)
        np.testing.assert_array_equal(res.ranks, published.ranks["ram"])

    def test_empty_sums_give_root_two(self):
        m = DecisionMatrix.from_values([[1.0], [2.0]], directions="benefit")
        res = ram(m)
        splus, sminus = res.details["Splus"], res.details["Sminus"]
        np.testing.assert_allclose(res.scores, (2 + splus) ** (1 / (2 + sminus)), rtol=1e-15)
        assert (2.0 + 0.0) ** (1 / (2.0 + 0.0)) == pytest.approx(1.41421, abs=1e-5)
        assert np.all(sminus == 0)

    def test_identical_rows_tie(self):
        res = ram(DecisionMatrix.from_values([[3, 4], [3, 4], [1, 9]], directions=["benefit", "cost"]))
        assert res.scores[0] == res.scores[1] and res.ranks[0] == res.ranks[1]

    def test_rejects_negative(self):
        with pytest.raises(DataError):
            ram(DecisionMatrix.from_values([[1.0], [-2.0]]))


class TestFuca:
    def test_bank_anchors(self, banks, published):
        res = fuca(bank_config(banks, "cost"))
        assert res.score_of("ABB") == pytest.approx(91 / 6, abs=1e-12)
        assert res.score_of("TCB") == 7.5 and res.rank_of("TCB") == 1
        assert res.score_of("NCB") == 22.5 and res.rank_of("NCB") == 30

    def test_equal_rank_sums_tie_exactly(self, banks):
        res = fuca(bank_config(banks, "cost"))
        assert res.score_of("ABB") == res.score_of("NAM A")
        assert res.score_of("KLB") == res.score_of("VIETBANK")
        assert res.rank_of("KLB") == res.rank_of("VIETBANK") == 19

    def test_equal_weights_give_row_mean(self, banks):
        res = fuca(bank_config(banks, "cost"))
        np.testing.assert_allclose(res.scores, banks.values.mean(axis=1), rtol=1e-15)

    def test_two_by_two(self):
        m = DecisionMatrix.from_values([[1, 4], [2, 3]], directions="cost", weights=[0.75, 0.25])
        res = fuca(m)
        np.testing.assert_array_equal(res.details["column_ranks"], [[1, 2], [2, 1]])
        np.testing.assert_allclose(res.scores, [1.25, 1.75])
        assert res.ranks.tolist() == [1, 2]

    def test_accepts_negative_values(self):
        res = fuca(DecisionMatrix.from_values([[-1.0], [-5.0]], directions="benefit"))
        assert res.ranks.tolist() == [1, 2]


class TestCurli:
    def test_bank_anchors(self, banks, published):
        res = curli(bank_config(banks, "benefit"))
        assert res.score_of("TCB") == -94 and res.rank_of("TCB") == 1
        assert res.score_of("NCB") == 89 and res.rank_of("NCB") == 30
        assert res.score_of("MBB") == -80 and res.rank_of("MBB") == 2
        np.testing.assert_array_equal(res.scores, published.scores["curli"])

    def test_equal_pair(self):
        res = curli(DecisionMatrix.from_values([[5.0], [5.0]], directions="benefit"))
        assert res.scores.tolist() == [0, 0]
        assert res.ranks.tolist() == [1, 1]

    def test_weights_ignored(self, banks):
        a = curli(bank_config(banks, "benefit"))
        b = curli(banks.with_policy(directions="benefit", weights=[1, 2, 3, 4, 5, 6]))
        np.testing.assert_array_equal(a.scores, b.scores)

    @given(positive_matrices(max_m=8, max_n=4))
    @settings(max_examples=1000)
    def test_brute_force_oracle(self, matrix):
        expected = brute_curli(matrix.values.tolist(), matrix.directions)
        table = curli_score_table(matrix)
        np.testing.assert_array_equal(table, expected)
        assert np.all(table.sum(axis=0) == 0)
        assert np.all(np.abs(table) <= matrix.shape[0] - 1)
        assert curli(matrix).scores.sum() == 0

    @given(positive_matrices())
    @settings(max_examples=200)
    def test_direction_flip_negates(self, matrix):
        flipped = matrix.with_policy(directions=[d.flipped() for d in matrix.directions])
        np.testing.assert_array_equal(curli(flipped).scores, -curli(matrix).scores)


@pytest.mark.parametrize("name", list(METHODS))
@given(matrix=positive_matrices())
@settings(max_examples=100)
def test_result_invariant(name, matrix):
    res = METHODS[name](matrix)
    np.testing.assert_array_equal(res.ranks, rank_scores(res.scores, CANONICAL_ORDER[name], res.policy))
    assert res.alternatives == matrix.alternatives


@pytest.mark.parametrize("name", ["fuca", "curli"])
@given(matrix=positive_matrices(), data=st.data())
@settings(max_examples=1000)
def test_monotone_transform_invariance(name, matrix, data):
    j = data.draw(st.integers(0, matrix.shape[1] - 1))
    increments = np.array(data.draw(st.lists(st.floats(0.01, 100), min_size=matrix.shape[0], max_size=matrix.shape[0])))
    values = matrix.values.copy()
    values[:, j] = increasing_remap(values[:, j], increments)
    transformed = DecisionMatrix(matrix.alternatives, matrix.criteria, values)
    a, b = METHODS[name](matrix), METHODS[name](transformed)
    np.testing.assert_array_equal(a.scores, b.scores)
    np.testing.assert_array_equal(a.ranks, b.ranks)


@pytest.mark.parametrize("name", list(METHODS))
@given(matrix=positive_matrices(), data=st.data())
@settings(max_examples=1000)
def test_positive_column_scaling_invariance(name, matrix, data):
    j = data.draw(st.integers(0, matrix.shape[1] - 1))
    c = data.draw(st.floats(1e-3, 1e3))
    values = matrix.values.copy()
    values[:, j] *= c
    scaled = DecisionMatrix(matrix.alternatives, matrix.criteria, values)
    a, b = METHODS[name](matrix), METHODS[name](scaled)
    if name in ("fuca", "curli"):
        np.testing.assert_array_equal(a.ranks, b.ranks)
    else:
        # normalized scores agree to roundoff; only float-level near ties may reorder
        np.testing.assert_allclose(a.scores, b.scores, rtol=1e-12, atol=1e-12)
        assert same_order_up_to_roundoff(a.scores, b.scores)


@pytest.mark.parametrize("name", ["moora", "ram"])
@given(matrix=positive_matrices(), k=st.integers(-8, 8))
@settings(max_examples=300)
def test_power_of_two_scaling_is_exact(name, matrix, k):
    values = matrix.values * 2.0**k
    scaled = DecisionMatrix(matrix.alternatives, matrix.criteria, values)
    np.testing.assert_array_equal(METHODS[name](matrix).ranks, METHODS[name](scaled).ranks)


@pytest.mark.parametrize("name", list(METHODS))
def test_row_permutation_equivariance(name, banks, rng):
    matrix = banks.with_policy(directions=["benefit", "cost"] * 3)
    perm = rng.permutation(matrix.shape[0])
    a = METHODS[name](matrix)
    b = METHODS[name](matrix.take(perm))
    np.testing.assert_array_equal(b.ranks, a.ranks[perm])
