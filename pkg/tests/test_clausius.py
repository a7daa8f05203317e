from fractions import Fraction

import pytest

from landauer.circuits import check_conservative
from landauer.clausius import (
    WeightCouple,
    clausius_experiment,
    count_class_transitions,
    imbalance_ratio_exact,
    imbalance_tail_exact,
    random_conservative_circuit,
)
from landauer.errors import NonIntegralWeights, NotConservative, WidthTooSmall


def binom_oracle(n: int, k: int) -> int:
    """Multiplicative-formula binomials, independent of math.comb."""
    if k < 0 or k > n:
        return 0
    result = 1
    for i in range(1, k + 1):
        result = result * (n - i + 1) // i
    return result


def ratio_oracle(n, w, delta):
    w, delta = Fraction(w), Fraction(delta)
    wn = int(w * n)
    wdn = int((w + delta) * n)
    return Fraction(
        binom_oracle(n, wdn) * binom_oracle(n, n - wdn),
        binom_oracle(n, wn) * binom_oracle(n, n - wn),
    )


def test_ratio_degenerate_delta_zero():
    for n in (2, 6, 12):
        assert imbalance_ratio_exact(n, Fraction(1, 2), 0) == 1


def test_ratio_hand_evaluated_small():
    assert imbalance_ratio_exact(2, Fraction(1, 2), Fraction(1, 2)) == Fraction(1, 4)


def test_ratio_against_independent_oracle():
    assert imbalance_ratio_exact(8, Fraction(1, 2), Fraction(1, 4)) == Fraction(4, 25)
    assert ratio_oracle(8, Fraction(1, 2), Fraction(1, 4)) == Fraction(4, 25)
    for n, w, d in ((4, "1/2", "1/4"), (12, "1/2", "1/6"), (10, "3/5", "1/5"), (16, "3/4", "1/4")):
        assert imbalance_ratio_exact(n, Fraction(w), Fraction(d)) == ratio_oracle(n, w, d)


def test_ratio_symmetric_at_half():
    # swapping the halves leaves the balanced-start expression unchanged
    for n in (4, 8, 12):
        r = imbalance_ratio_exact(n, Fraction(1, 2), Fraction(1, 4))
        swapped = Fraction(
            binom_oracle(n, n // 4) * binom_oracle(n, 3 * n // 4),
            binom_oracle(n, n // 2) ** 2,
        )
        assert r == swapped


def test_non_integral_weights():
    with pytest.raises(NonIntegralWeights):
        imbalance_ratio_exact(6, Fraction(3, 4), 0)
    with pytest.raises(NonIntegralWeights):
        imbalance_ratio_exact(5, Fraction(1, 2), Fraction(1, 5))


def test_tail_empty_beyond_maximum():
    # delta already at the maximum: the tail is the single all-ones class
    n = 4
    full = imbalance_tail_exact(n, Fraction(1, 2), Fraction(1, 2))
    assert full == ratio_oracle(n, Fraction(1, 2), Fraction(1, 2))


def test_tail_from_zero_pinned():
    # summation oracle for n=8, w=1/2, delta=0: sum of C(8,k)C(8,8-k)
    # for k=4..8 over C(8,4)^2; the sum exceeds 1 because every class is
    # normalized by the single balanced class
    total = sum(binom_oracle(8, k) * binom_oracle(8, 8 - k) for k in range(4, 9))
    expected = Fraction(total, binom_oracle(8, 4) ** 2)
    assert imbalance_tail_exact(8, Fraction(1, 2), 0) == expected == Fraction(1777, 980)


def test_tail_dominates_point():
    for d in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
        assert imbalance_tail_exact(8, Fraction(1, 2), d) >= imbalance_ratio_exact(
            8, Fraction(1, 2), d
        )


def test_random_conservative_circuit_contracts():
    c = random_conservative_circuit(8, 0, seed=1)
    assert c.gate_count() == 0
    a = random_conservative_circuit(16, 25, seed=99)
    b = random_conservative_circuit(16, 25, seed=99)
    assert a == b
    assert check_conservative(a)
    assert check_conservative(a, exhaustive=True)
    with pytest.raises(WidthTooSmall):
        random_conservative_circuit(2, 5, seed=0)


def test_count_class_transitions_identity():
    from landauer.circuits import ReversibleCircuit

    identity = ReversibleCircuit(8)
    balanced = WeightCouple(4, 2, 2)
    assert count_class_transitions(identity, balanced, balanced) == balanced.class_size()
    other = WeightCouple(4, 3, 1)
    assert count_class_transitions(identity, balanced, other) == 0


def test_count_class_transitions_requires_conservative():
    from landauer.circuits import ReversibleCircuit, not_gate

    bad = ReversibleCircuit(8, (not_gate(0),))
    with pytest.raises(NotConservative):
        count_class_transitions(bad, WeightCouple(4, 2, 2), WeightCouple(4, 3, 1))


def test_injectivity_ceiling_exhaustive_small():
    # every conservative bijection sends a class into a class at most
    # target-size often; checked over all class pairs for sampled circuits
    n = 3
    for seed in range(10):
        c = random_conservative_circuit(2 * n, 12, seed)
        for lw in range(n + 1):
            source = WeightCouple(n, lw, n - lw)
            for tw in range(n + 1):
                target = WeightCouple(n, tw, n - tw)
                count = count_class_transitions(c, source, target)
                assert count <= target.class_size()


def test_ceiling_inequality_100_circuits():
    target = WeightCouple(6, 5, 1)
    source = WeightCouple(6, 3, 3)
    limit = target.class_size()
    assert limit == 36
    for seed in range(100):
        c = random_conservative_circuit(12, 24, seed)
        assert count_class_transitions(c, source, target) <= limit


def test_experiment_report():
    report = clausius_experiment(4, Fraction(1, 2), Fraction(1, 4), circuits=20, seed=5)
    assert report.within_ceiling
    assert report.point_ceiling == Fraction(4, 9)
    assert report.max_point_fraction <= report.point_ceiling
    assert report.max_tail_fraction <= report.tail_ceiling
    # trend grid: strictly decreasing log2 ceilings
    values = [v for _, v in report.per_n_trend]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_experiment_identity_and_delta_zero():
    # gate_count=0 keeps every string in place: fraction 0 for delta > 0
    report = clausius_experiment(
        4, Fraction(1, 2), Fraction(1, 4), circuits=3, seed=9, gate_count=0
    )
    assert report.max_point_fraction == 0
    degenerate = clausius_experiment(
        4, Fraction(1, 2), 0, circuits=3, seed=9, gate_count=8
    )
    assert degenerate.max_point_fraction <= 1 == degenerate.point_ceiling


def test_trend_decreases_by_at_least_one_bit():
    ratios = [imbalance_ratio_exact(n, Fraction(1, 2), Fraction(1, 4)) for n in (4, 8, 12, 16)]
    for earlier, later in zip(ratios, ratios[1:]):
        assert 2 * later <= earlier  # log2 difference <= -1, checked exactly
