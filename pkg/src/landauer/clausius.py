"""Exact combinatorics of weight-imbalance growth under conservative maps.

A 2n-bit string is split into two halves; the weight couple is the pair of
half Hamming weights.  For any injective weight-preserving map, a simple
counting argument caps the number of strings a class can send into a more
imbalanced class by the target class size, so the transition probability
from couple (wn, (1-w)n) to ((w+d)n, (1-w-d)n) is at most

    C(n,(w+d)n) C(n,(1-w-d)n) / [ C(n,wn) C(n,(1-w)n) ],

a ratio that decays exponentially in n.  Everything here is exact big
integer / rational arithmetic; floats appear only when rendering the
log2 trend.

Conservative circuits are sampled as uniform random Fredkin gates, which
preserve Hamming weight by construction (no filtering needed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bitstring import BitString
from .circuits import (
    ReversibleCircuit,
    check_conservative,
    fredkin,
    max_sweep_width,
    simulate,
)
from .errors import DomainTooLarge, NonIntegralWeights, NotConservative, WidthTooSmall
from .rng import substream, substream_seed


@dataclass(frozen=True)
class WeightCouple:
    """Half-width n and the two half weights (their sum is conserved)."""

    n: int
    left_weight: int
    right_weight: int

    def __post_init__(self):
        if not (0 <= self.left_weight <= self.n and 0 <= self.right_weight <= self.n):
            raise ValueError("weights must lie in [0, n]")

    def class_size(self) -> int:
        return math.comb(self.n, self.left_weight) * math.comb(self.n, self.right_weight)


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegralWeights(f"{what} = {x} is not an integer")
    return x.numerator


def _grid(n: int, w: Fraction, delta: Fraction) -> tuple[int, int]:
    """Validate the (w, delta) grid; returns (wn, (w+delta)n) as integers.

    Integrality is checked before the range so that off-grid parameters
    always surface as NonIntegralWeights.
    """
    w = Fraction(w)
    delta = Fraction(delta)
    wn = _integral(w * n, "w*n")
    wdn = _integral((w + delta) * n, "(w+delta)*n")
    if not Fraction(1, 2) <= w < 1:
        raise ValueError(f"w must satisfy 1/2 <= w < 1, got {w}")
    if not 0 <= delta <= 1 - w:
        raise ValueError(f"delta must satisfy 0 <= delta <= 1-w, got {delta}")
    return wn, wdn


def imbalance_ratio_exact(n: int, w, delta) -> Fraction:
    """Target-over-source class-size ratio for one imbalance step, exact."""
    wn, wdn = _grid(n, Fraction(w), Fraction(delta))
    num = math.comb(n, wdn) * math.comb(n, n - wdn)
    den = math.comb(n, wn) * math.comb(n, n - wn)
    return Fraction(num, den)


def imbalance_tail_exact(n: int, w, delta) -> Fraction:
    """Total size of all classes at least `delta` more imbalanced, relative
    to the source class ("... or more extremely")."""
    wn, wdn = _grid(n, Fraction(w), Fraction(delta))
    den = math.comb(n, wn) * math.comb(n, n - wn)
    total = 0
    for k in range(wdn, n + 1):
        total += math.comb(n, k) * math.comb(n, n - k)
    return Fraction(total, den)


def random_conservative_circuit(width: int, gate_count: int, seed: int) -> ReversibleCircuit:
    """Uniformly random Fredkin gates; deterministic under the seed."""
    if width < 3:
        raise WidthTooSmall(f"Fredkin gates need width >= 3, got {width}")
    rng = substream(seed, "fredkin-circuit")
    gates = []
    for _ in range(gate_count):
        control, a, b = rng.sample(range(width), 3)
        gates.append(fredkin(control, a, b))
    return ReversibleCircuit(width, tuple(gates))


def _class_members(couple: WeightCouple):
    n = couple.n
    for left in combinations(range(n), couple.left_weight):
        left_bits = ["0"] * n
        for i in left:
            left_bits[i] = "1"
        left_str = "".join(left_bits)
        for right in combinations(range(n), couple.right_weight):
            right_bits = ["0"] * n
            for i in right:
                right_bits[i] = "1"
            yield BitString(left_str + "".join(right_bits))


def _couple_of(state: BitString, n: int) -> tuple[int, int]:
    return state[:n].weight(), state[n:].weight()


def count_class_transitions(
    c: ReversibleCircuit,
    source: WeightCouple,
    target: WeightCouple,
) -> int:
    """Exact count of source-class strings mapped into the target class.

    Sweeps the source class only.  Requires a conservative circuit of
    width 2n within the exhaustive ceiling.
    """
    n = source.n
    if c.width != 2 * n:
        raise ValueError(f"circuit width {c.width} does not match 2n = {2 * n}")
    if 2 * n > max_sweep_width():
        raise DomainTooLarge(f"width {2 * n} exceeds ceiling {max_sweep_width()}")
    if not (check_conservative(c) or check_conservative(c, exhaustive=True)):
        raise NotConservative("circuit does not preserve Hamming weight")
    want = (target.left_weight, target.right_weight)
    return sum(
        1
        for s in _class_members(source)
        if _couple_of(simulate(c, s), n) == want
    )


@dataclass(frozen=True)
class ClausiusReport:
    n: int
    w: Fraction
    delta: Fraction
    circuits: int
    seed: int
    gate_count: int
    point_ceiling: Fraction  # size ratio of the exact target class
    tail_ceiling: Fraction  # size ratio of target-or-more-extreme classes
    max_point_fraction: Fraction
    max_tail_fraction: Fraction
    per_n_trend: tuple[tuple[int, float], ...]  # (n, log2 of point ceiling)

    @property
    def within_ceiling(self) -> bool:
        return (
            self.max_point_fraction <= self.point_ceiling
            and self.max_tail_fraction <= self.tail_ceiling
        )


def clausius_experiment(
    n: int,
    w,
    delta,
    circuits: int,
    seed: int,
    gate_count: int | None = None,
    trend_ns: Sequence[int] | None = None,
) -> ClausiusReport:
    """Sample conservative circuits and compare measured transition
    fractions against the exact counting ceilings.

    The point numbers concern exactly the (w+delta) class, the tail
    numbers that class or any more extreme one; the ceiling inequality is
    a theorem, not a statistical claim.  The trend lists log2 of the point
    ceiling over a grid of n (floats appear only in this rendering).
    """
    w = Fraction(w)
    delta = Fraction(delta)
    wn, wdn = _grid(n, w, delta)
    source = WeightCouple(n, wn, n - wn)
    target = WeightCouple(n, wdn, n - wdn)
    point_ceiling = imbalance_ratio_exact(n, w, delta)
    tail_ceiling = imbalance_tail_exact(n, w, delta)
    gc = gate_count if gate_count is not None else 4 * 2 * n

    size = source.class_size()
    max_point = Fraction(0)
    max_tail = Fraction(0)
    for i in range(circuits):
        circuit = random_conservative_circuit(2 * n, gc, substream_seed(seed, "circuit", i))
        point = 0
        tail = 0
        for s in _class_members(source):
            left, _ = _couple_of(simulate(circuit, s), n)
            if left == target.left_weight:
                point += 1
            if left >= target.left_weight:
                tail += 1
        max_point = max(max_point, Fraction(point, size))
        max_tail = max(max_tail, Fraction(tail, size))

    if trend_ns is None:
        trend_ns = [m for m in range(n, 4 * n + 1, n) if (w * m).denominator == 1 and ((w + delta) * m).denominator == 1]
    trend = []
    for m in trend_ns:
        ratio = imbalance_ratio_exact(m, w, delta)
        trend.append((m, math.log2(ratio.numerator) - math.log2(ratio.denominator)))

    return ClausiusReport(
        n=n,
        w=w,
        delta=delta,
        circuits=circuits,
        seed=seed,
        gate_count=gc,
        point_ceiling=point_ceiling,
        tail_ceiling=tail_ceiling,
        max_point_fraction=max_point,
        max_tail_fraction=max_tail,
        per_n_trend=tuple(trend),
    )
