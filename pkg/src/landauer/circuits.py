"""Reversible-circuit IR, simulation, and injectivity/conservativity checks.

A circuit is a fixed-width ordered list of gates from {toffoli, cnot, not,
fredkin}.  Each gate is an involution on {0,1}^width, so every circuit
induces a bijection; `simulate(reverse_circuit(c), simulate(c, s)) == s`
for all s.

NOT and CNOT are admitted as primitives for readability, but they are
definitionally Toffoli gates with constant-1 controls: `normalize_to_toffoli`
rewrites any circuit into Toffoli-only form over two appended CONST_ONE
lines, so the "reversible gates only, no AND/OR" discipline is checkable.

Exhaustive sweeps are capped at LANDAUER_MAX_WIDTH lines (default 20,
roughly 10^6 states) to bound runtime; wider circuits must use sampled
checks, which are flagged as non-exhaustive by the callers that offer them.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bitstring import BitString
from .errors import (
    BadConstantLine,
    BadWiring,
    DomainTooLarge,
    WidthMismatch,
)

TOFFOLI = "toffoli"
CNOT = "cnot"
NOT = "not"
FREDKIN = "fredkin"

GATE_KINDS = (TOFFOLI, CNOT, NOT, FREDKIN)

# Line roles.
INPUT = "input"
HELPER = "helper"
ANCILLA_ZERO = "ancilla_zero"
CONST_ONE = "const_one"
OUTPUT_ALIAS = "output_alias"

LINE_ROLES = (INPUT, HELPER, ANCILLA_ZERO, CONST_ONE, OUTPUT_ALIAS)

DEFAULT_MAX_WIDTH = 20


def max_sweep_width() -> int:
    """Exhaustive-sweep ceiling in lines; LANDAUER_MAX_WIDTH overrides."""
    raw = os.environ.get("LANDAUER_MAX_WIDTH")
    if raw is None:
        return DEFAULT_MAX_WIDTH
    return int(raw)


@dataclass(frozen=True)
class Gate:
    """One reversible gate over named line indices.

    controls/targets arities by kind: toffoli 2/1, cnot 1/1, not 0/1,
    fredkin 1/2 (the two targets are the swapped pair).
    """

    kind: str
    controls: tuple[int, ...]
    targets: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        arity = {TOFFOLI: (2, 1), CNOT: (1, 1), NOT: (0, 1), FREDKIN: (1, 2)}[self.kind]
        if (len(self.controls), len(self.targets)) != arity:
            raise ValueError(
                f"{self.kind} expects controls/targets {arity}, "
                f"got {len(self.controls)}/{len(self.targets)}"
            )
        lines = self.controls + self.targets
        if len(set(lines)) != len(lines):
            raise ValueError(f"gate lines must be distinct: {lines}")
        if any(i < 0 for i in lines):
            raise ValueError("line indices must be non-negative")

    @property
    def lines(self) -> tuple[int, ...]:
        return self.controls + self.targets


def toffoli(c1: int, c2: int, target: int) -> Gate:
    return Gate(TOFFOLI, (c1, c2), (target,))


def cnot(control: int, target: int) -> Gate:
    return Gate(CNOT, (control,), (target,))


def not_gate(target: int) -> Gate:
    return Gate(NOT, (), (target,))


def fredkin(control: int, a: int, b: int) -> Gate:
    return Gate(FREDKIN, (control,), (a, b))


@dataclass(frozen=True)
class ReversibleCircuit:
    """Fixed-width gate list; the induced map on {0,1}^width is a bijection."""

    width: int
    gates: tuple[Gate, ...] = ()
    line_roles: tuple[str, ...] = ()

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("width must be non-negative")
        object.__setattr__(self, "gates", tuple(self.gates))
        roles = tuple(self.line_roles) if self.line_roles else (INPUT,) * self.width
        if len(roles) != self.width:
            raise ValueError("line_roles length must equal width")
        for r in roles:
            if r not in LINE_ROLES:
                raise ValueError(f"unknown line role {r!r}")
        object.__setattr__(self, "line_roles", roles)
        for g in self.gates:
            if max(g.lines, default=-1) >= self.width:
                raise ValueError(f"gate {g} exceeds width {self.width}")

    # Gates pre-lowered to (opcode, masks) tuples; cached per circuit.
    def _program(self):
        prog = self.__dict__.get("_prog")
        if prog is None:
            prog = []
            for g in self.gates:
                if g.kind == TOFFOLI:
                    prog.append((0, 1 << g.controls[0], 1 << g.controls[1], 1 << g.targets[0]))
                elif g.kind == CNOT:
                    prog.append((1, 1 << g.controls[0], 1 << g.targets[0], 0))
                elif g.kind == NOT:
                    prog.append((2, 1 << g.targets[0], 0, 0))
                else:
                    prog.append((3, 1 << g.controls[0], 1 << g.targets[0], 1 << g.targets[1]))
            prog = tuple(prog)
            self.__dict__["_prog"] = prog
        return prog

    def gate_count(self) -> int:
        return len(self.gates)


def _to_mask(bits: BitString) -> int:
    # line i <-> bit (1 << i)
    mask = 0
    for i, b in enumerate(bits):
        if b:
            mask |= 1 << i
    return mask


def _from_mask(mask: int, width: int) -> BitString:
    return BitString("".join("1" if mask >> i & 1 else "0" for i in range(width)))


def _check_constant_lines(c: ReversibleCircuit, mask: int) -> None:
    for i, role in enumerate(c.line_roles):
        bit = mask >> i & 1
        if role == CONST_ONE and bit != 1:
            raise BadConstantLine(f"line {i} is CONST_ONE but carries 0")
        if role == ANCILLA_ZERO and bit != 0:
            raise BadConstantLine(f"line {i} is ANCILLA_ZERO but carries 1")


def _run_mask(c: ReversibleCircuit, mask: int) -> int:
    for op, a, b, d in c._program():
        if op == 0:
            if mask & a and mask & b:
                mask ^= d
        elif op == 1:
            if mask & a:
                mask ^= b
        elif op == 2:
            mask ^= a
        else:
            if mask & a and bool(mask & b) != bool(mask & d):
                mask ^= b | d
    return mask


def simulate(c: ReversibleCircuit, input_bits: BitString) -> BitString:
    """Apply the gates in list order to a full-width input state."""
    if len(input_bits) != c.width:
        raise WidthMismatch(f"input has {len(input_bits)} bits, circuit width {c.width}")
    mask = _to_mask(input_bits)
    _check_constant_lines(c, mask)
    return _from_mask(_run_mask(c, mask), c.width)


@dataclass(frozen=True)
class StateTrajectory:
    """Initial state plus one state per applied gate."""

    states: tuple[BitString, ...]

    def __len__(self) -> int:
        return len(self.states)


def simulate_trajectory(c: ReversibleCircuit, input_bits: BitString) -> StateTrajectory:
    if len(input_bits) != c.width:
        raise WidthMismatch(f"input has {len(input_bits)} bits, circuit width {c.width}")
    mask = _to_mask(input_bits)
    _check_constant_lines(c, mask)
    states = [_from_mask(mask, c.width)]
    for op, a, b, d in c._program():
        if op == 0:
            if mask & a and mask & b:
                mask ^= d
        elif op == 1:
            if mask & a:
                mask ^= b
        elif op == 2:
            mask ^= a
        else:
            if mask & a and bool(mask & b) != bool(mask & d):
                mask ^= b | d
        states.append(_from_mask(mask, c.width))
    return StateTrajectory(tuple(states))


def reverse_circuit(c: ReversibleCircuit) -> ReversibleCircuit:
    """Gates in reversed order; every gate kind is its own inverse."""
    return ReversibleCircuit(c.width, tuple(reversed(c.gates)), c.line_roles)


def _map_gate(g: Gate, table: Sequence[int]) -> Gate:
    return Gate(g.kind, tuple(table[i] for i in g.controls), tuple(table[i] for i in g.targets))


def compose(
    first: ReversibleCircuit,
    second: ReversibleCircuit,
    wiring: Sequence[int] | None = None,
) -> ReversibleCircuit:
    """Run `first`, feed line i of its output into line wiring[i] of `second`.

    The composed circuit lives on `second`'s line numbering: the gates of
    `first` are relabeled through the wiring and prepended.  With identity
    wiring this is plain sequential composition,
    simulate(composed, s) == simulate(second, simulate(first, s)).
    """
    if first.width != second.width:
        raise BadWiring(f"widths differ: {first.width} vs {second.width}")
    n = first.width
    if wiring is None:
        wiring = list(range(n))
    if sorted(wiring) != list(range(n)):
        raise BadWiring(f"wiring must be a bijection on 0..{n - 1}")
    gates = tuple(_map_gate(g, wiring) for g in first.gates) + second.gates
    roles = [INPUT] * n
    for i, r in enumerate(first.line_roles):
        roles[wiring[i]] = r
    return ReversibleCircuit(n, gates, tuple(roles))


def permutation_table(c: ReversibleCircuit) -> np.ndarray:
    """The full map of a circuit as an array t with t[x] = image of state x.

    Vectorized over all 2^width states; refuses widths above the sweep
    ceiling.  State integers use bit i = line i.
    """
    if c.width > max_sweep_width():
        raise DomainTooLarge(f"width {c.width} exceeds ceiling {max_sweep_width()}")
    states = np.arange(1 << c.width, dtype=np.int64)
    for op, a, b, d in c._program():
        if op == 0:
            hit = (states & a).astype(bool) & (states & b).astype(bool)
            states ^= np.where(hit, d, 0)
        elif op == 1:
            hit = (states & a).astype(bool)
            states ^= np.where(hit, b, 0)
        elif op == 2:
            states ^= a
        else:
            hit = (states & a).astype(bool) & (
                (states & b).astype(bool) != (states & d).astype(bool)
            )
            states ^= np.where(hit, b | d, 0)
    return states


def check_injective_bruteforce(
    f: ReversibleCircuit | Callable[[BitString], BitString],
    n: int,
) -> bool:
    """Exhaustively test a map on n-bit strings for collisions.

    Accepts a ReversibleCircuit (vectorized sweep) or any black-box
    callable on BitStrings.  n is capped at the sweep ceiling.
    """
    if n > max_sweep_width():
        raise DomainTooLarge(f"{n} bits exceeds ceiling {max_sweep_width()}")
    if isinstance(f, ReversibleCircuit):
        if f.width != n:
            raise WidthMismatch(f"circuit width {f.width}, asked to sweep {n} bits")
        table = permutation_table(f)
        return len(np.unique(table)) == len(table)
    seen = bytearray(1 << n)
    for x in range(1 << n):
        y = f(BitString.from_int(x, n)).to_int()
        if seen[y]:
            return False
        seen[y] = 1
    return True


def check_conservative(c: ReversibleCircuit, exhaustive: bool = False) -> bool:
    """True if the circuit preserves Hamming weight.

    Structural mode (default) accepts any width and checks that every gate
    is a Fredkin (weight-preserving by construction).  Exhaustive mode
    verifies weight(simulate(c, s)) == weight(s) over all states.
    """
    if not exhaustive:
        return all(g.kind == FREDKIN for g in c.gates)
    if c.width > max_sweep_width():
        raise DomainTooLarge(f"width {c.width} exceeds ceiling {max_sweep_width()}")
    table = permutation_table(c)
    idx = np.arange(len(table), dtype=np.int64)
    return bool(np.array_equal(_popcounts(idx), _popcounts(table)))


def _popcounts(a: np.ndarray) -> np.ndarray:
    out = np.zeros(a.shape, dtype=np.int64)
    work = a.copy()
    while work.any():
        out += work & 1
        work >>= 1
    return out


def normalize_to_toffoli(c: ReversibleCircuit) -> ReversibleCircuit:
    """Rewrite NOT/CNOT/FREDKIN into Toffoli gates over two CONST_ONE lines.

    The two constant lines are appended only when a rewrite needs them.
    The normalized circuit agrees with the original on every input once
    the constant lines are set to 1.
    """
    if all(g.kind == TOFFOLI for g in c.gates):
        return c
    one1, one2 = c.width, c.width + 1
    gates: list[Gate] = []

    def emit_cnot(ctrl: int, tgt: int) -> None:
        gates.append(toffoli(ctrl, one1, tgt))

    for g in c.gates:
        if g.kind == TOFFOLI:
            gates.append(g)
        elif g.kind == CNOT:
            emit_cnot(g.controls[0], g.targets[0])
        elif g.kind == NOT:
            gates.append(toffoli(one1, one2, g.targets[0]))
        else:  # fredkin(c, a, b) = cnot(b->a) toffoli(c,a->b) cnot(b->a)
            ctrl, a, b = g.controls[0], g.targets[0], g.targets[1]
            emit_cnot(b, a)
            gates.append(toffoli(ctrl, a, b))
            emit_cnot(b, a)
    roles = c.line_roles + (CONST_ONE, CONST_ONE)
    return ReversibleCircuit(c.width + 2, tuple(gates), roles)


def is_toffoli_only(c: ReversibleCircuit) -> bool:
    return all(g.kind == TOFFOLI for g in c.gates)


# --- complexity drift along a trajectory -------------------------------------

DEFAULT_DRIFT_SLACK = 64  # bits; the additive constant is configuration, not a claim


@dataclass(frozen=True)
class DriftRow:
    t: int
    state_bits: int  # K-hat of the state at time t
    time_bits: int  # K-hat of the encoding of t
    drop: int  # state_bits(0) - state_bits(t)
    flagged: bool


@dataclass(frozen=True)
class DriftReport:
    rows: tuple[DriftRow, ...]
    slack_bits: int

    @property
    def flagged_steps(self) -> tuple[int, ...]:
        return tuple(r.t for r in self.rows if r.flagged)


def _time_encoding(t: int) -> BitString:
    return BitString(format(t, "b")) if t else BitString()


def complexity_drift_report(
    trajectory: StateTrajectory,
    estimator: Callable[[BitString], int],
    slack_bits: int = DEFAULT_DRIFT_SLACK,
) -> DriftReport:
    """Per-step description-length drift of a trajectory.

    For each time t the report lists the estimator value of the state, of
    the time encoding, and the drop relative to t=0.  A step is flagged
    when drop > estimate(time) + slack.  Flags are informational: the
    estimator upper-bounds true description length, so a flag never proves
    a violation of the underlying monotonicity bound.
    """
    if not trajectory.states:
        raise ValueError("trajectory must contain at least the initial state")
    base = estimator(trajectory.states[0])
    rows = []
    for t, state in enumerate(trajectory.states):
        k_state = estimator(state)
        k_time = estimator(_time_encoding(t))
        drop = base - k_state
        rows.append(DriftRow(t, k_state, k_time, drop, drop > k_time + slack_bits))
    return DriftReport(tuple(rows), slack_bits)


# --- JSON circuit format ------------------------------------------------------

FORMAT_VERSION = 1


def circuit_to_json(c: ReversibleCircuit) -> dict:
    gates = []
    for g in c.gates:
        if g.kind == TOFFOLI:
            gates.append({"kind": TOFFOLI, "controls": list(g.controls), "target": g.targets[0]})
        elif g.kind == CNOT:
            gates.append({"kind": CNOT, "control": g.controls[0], "target": g.targets[0]})
        elif g.kind == NOT:
            gates.append({"kind": NOT, "target": g.targets[0]})
        else:
            gates.append({"kind": FREDKIN, "control": g.controls[0], "targets": list(g.targets)})
    return {
        "version": FORMAT_VERSION,
        "width": c.width,
        "line_roles": list(c.line_roles),
        "gates": gates,
    }


def circuit_from_json(doc: dict) -> ReversibleCircuit:
    if doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported circuit format version {doc.get('version')!r}")
    gates = []
    for g in doc["gates"]:
        kind = g["kind"]
        if kind == TOFFOLI:
            gates.append(toffoli(g["controls"][0], g["controls"][1], g["target"]))
        elif kind == CNOT:
            gates.append(cnot(g["control"], g["target"]))
        elif kind == NOT:
            gates.append(not_gate(g["target"]))
        elif kind == FREDKIN:
            gates.append(fredkin(g["control"], g["targets"][0], g["targets"][1]))
        else:
            raise ValueError(f"unknown gate kind {kind!r}")
    return ReversibleCircuit(doc["width"], tuple(gates), tuple(doc["line_roles"]))


def save_circuit(c: ReversibleCircuit, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(circuit_to_json(c), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_circuit(path: str) -> ReversibleCircuit:
    with open(path, "r", encoding="utf-8") as fh:
        return circuit_from_json(json.load(fh))
