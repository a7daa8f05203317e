"""Irreversible boolean-circuit IR: the compiler's source language.

A netlist is a list of named inputs, a topologically ordered list of
{and, or, not, xor} gates referencing inputs or earlier gates, and a list
of output references.  This is exactly the gate family the reversible
target forbids, hence what the compiler must eliminate.

JSON form:
    {"inputs": ["a", "b"],
     "gates": [{"id": "g0", "op": "and", "args": ["a", "b"]}],
     "outputs": ["g0"]}
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .bitstring import BitString
from .errors import WidthMismatch

AND = "and"
OR = "or"
NOT = "not"
XOR = "xor"

OPS = (AND, OR, NOT, XOR)
_ARITY = {AND: 2, OR: 2, XOR: 2, NOT: 1}


@dataclass(frozen=True)
class LogicGate:
    gate_id: str
    op: str
    args: tuple[str, ...]


@dataclass(frozen=True)
class IrreversibleCircuit:
    inputs: tuple[str, ...]
    gates: tuple[LogicGate, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if len(set(self.inputs)) != len(self.inputs):
            raise ValueError("duplicate input names")
        known = set(self.inputs)
        for g in self.gates:
            if g.op not in OPS:
                raise ValueError(f"unknown op {g.op!r}")
            if len(g.args) != _ARITY[g.op]:
                raise ValueError(f"{g.op} takes {_ARITY[g.op]} args, got {len(g.args)}")
            if g.gate_id in known:
                raise ValueError(f"duplicate node id {g.gate_id!r}")
            for a in g.args:
                if a not in known:
                    raise ValueError(f"gate {g.gate_id!r} references unknown node {a!r}")
            known.add(g.gate_id)
        for o in self.outputs:
            if o not in known:
                raise ValueError(f"output references unknown node {o!r}")

    def gate_count(self) -> int:
        return len(self.gates)

    def depth(self) -> int:
        """Longest input-to-output path measured in gates."""
        depth = {name: 0 for name in self.inputs}
        for g in self.gates:
            depth[g.gate_id] = 1 + max(depth[a] for a in g.args)
        return max((depth[o] for o in self.outputs), default=0)


def evaluate(c: IrreversibleCircuit, input_bits: BitString) -> BitString:
    """Standard boolean semantics; returns the output bits in order."""
    if len(input_bits) != len(c.inputs):
        raise WidthMismatch(
            f"{len(c.inputs)} inputs expected, got {len(input_bits)} bits"
        )
    value = dict(zip(c.inputs, input_bits))
    for g in c.gates:
        a = value[g.args[0]]
        if g.op == NOT:
            value[g.gate_id] = a ^ 1
        else:
            b = value[g.args[1]]
            value[g.gate_id] = a & b if g.op == AND else a | b if g.op == OR else a ^ b
    return BitString(value[o] for o in c.outputs)


# --- library macros -----------------------------------------------------------


def wire_through(n: int) -> IrreversibleCircuit:
    """n-input circuit whose outputs are its inputs, no gates."""
    names = tuple(f"x{i}" for i in range(n))
    return IrreversibleCircuit(names, (), names)


def rom_circuit(output_bits: BitString, num_inputs: int = 1) -> IrreversibleCircuit:
    """Constant-output circuit: emits `output_bits` regardless of input.

    Constants are built from the first input (x XOR x = 0, NOT of that = 1),
    so at least one input line is required.
    """
    if num_inputs < 1:
        raise ValueError("rom_circuit needs at least one input")
    names = tuple(f"x{i}" for i in range(num_inputs))
    gates = (
        LogicGate("zero", XOR, (names[0], names[0])),
        LogicGate("one", NOT, ("zero",)),
    )
    outputs = tuple("one" if b else "zero" for b in output_bits)
    return IrreversibleCircuit(names, gates, outputs)


def random_netlist(
    num_inputs: int,
    num_gates: int,
    rng: random.Random,
    num_outputs: int | None = None,
) -> IrreversibleCircuit:
    """Random topologically ordered netlist for compiler stress tests."""
    names = [f"x{i}" for i in range(num_inputs)]
    gates = []
    pool = list(names)
    for j in range(num_gates):
        op = rng.choice(OPS)
        args = tuple(rng.choice(pool) for _ in range(_ARITY[op]))
        gid = f"g{j}"
        gates.append(LogicGate(gid, op, args))
        pool.append(gid)
    k = num_outputs if num_outputs is not None else rng.randint(1, max(1, len(pool) // 2))
    outputs = tuple(rng.choice(pool) for _ in range(k))
    return IrreversibleCircuit(tuple(names), tuple(gates), outputs)


# --- JSON netlist format ------------------------------------------------------


def netlist_to_json(c: IrreversibleCircuit) -> dict:
    return {
        "inputs": list(c.inputs),
        "gates": [{"id": g.gate_id, "op": g.op, "args": list(g.args)} for g in c.gates],
        "outputs": list(c.outputs),
    }


def netlist_from_json(doc: dict) -> IrreversibleCircuit:
    gates = tuple(LogicGate(g["id"], g["op"], tuple(g["args"])) for g in doc["gates"])
    return IrreversibleCircuit(tuple(doc["inputs"]), gates, tuple(doc["outputs"]))


def save_netlist(c: IrreversibleCircuit, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(netlist_to_json(c), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_netlist(path: str) -> IrreversibleCircuit:
    with open(path, "r", encoding="utf-8") as fh:
        return netlist_from_json(json.load(fh))
