"""Compilation of irreversible circuits into ancilla-clean reversible ones,
and the reversible compression-with-helper construction.

bennett_compile uses the classic three-stage uncomputation layout: compute
every source gate into its own fresh zero line (the "junk"), copy the
declared outputs onto fresh zero lines with CNOTs, then replay the forward
stage in reverse so every junk line returns to zero.  The compiled map is
(x, 0^junk, 0^out) -> (x, 0^junk, f(x)) and agrees with the source
semantics on every input.

build_fig1_compressor realizes, on the data register itself, the injective
block map

    S  ->  code(S, helper) zero-padded,

where code is the mode-bit block encoding of compress.encode_with_escape
(compressed branch when the self-delimited codec output fits the block,
raw escape otherwise).  The register is block+1 lines wide: the extra line
absorbs the mode bit, which is what makes the padded map a bijection.

Synthesis strategy: the block map, extended to a permutation of the
register cube by matching leftover points to their mode-flipped partners,
differs from the bare mode-bit flip only where the codec actually
compresses.  That sparse residue is decomposed into transpositions of
basis states, each realized exactly as a CNOT/NOT-conjugated
multi-controlled flip built from Toffoli gates over a small bank of
reusable zero ancillas.  Gate count therefore scales with the number of
compressible blocks, not with 2^block, and the whole line set stays small
enough for exhaustive bijectivity sweeps.  The helper is baked into the
encoding table and carried on inert HELPER lines, unchanged by every gate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .bitstring import BitString
from .circuits import (
    ANCILLA_ZERO,
    HELPER,
    INPUT,
    OUTPUT_ALIAS,
    Gate,
    ReversibleCircuit,
    cnot,
    max_sweep_width,
    not_gate,
    simulate,
    toffoli,
)
from .compress import CompressionCodec, encode_with_escape
from .errors import (
    CodecNotInjective,
    DomainTooLarge,
    TooManyLines,
    WidthMismatch,
)
from .irrev import AND, NOT, OR, XOR, IrreversibleCircuit


@dataclass(frozen=True)
class CompiledReversible:
    """A reversible circuit together with its line bookkeeping.

    input/output/helper/ancilla/const_one line sets partition the circuit
    lines.  result_lines is a view, not a partition member: the register
    holding the logical result, which for in-place constructions overlaps
    the input lines.
    """

    circuit: ReversibleCircuit
    input_lines: tuple[int, ...]
    output_lines: tuple[int, ...]
    helper_lines: tuple[int, ...] = ()
    ancilla_lines: tuple[int, ...] = ()
    const_one_lines: tuple[int, ...] = ()
    junk_restored: bool = True
    result_lines: tuple[int, ...] = ()
    helper_value: BitString | None = None

    def __post_init__(self):
        sets = (
            self.input_lines,
            self.output_lines,
            self.helper_lines,
            self.ancilla_lines,
            self.const_one_lines,
        )
        flat = [i for group in sets for i in group]
        if sorted(flat) != list(range(self.circuit.width)):
            raise ValueError("line sets must partition the circuit lines")
        if not self.result_lines:
            object.__setattr__(self, "result_lines", self.output_lines)

    def assemble_input(self, data: BitString) -> BitString:
        if len(data) != len(self.input_lines):
            raise WidthMismatch(
                f"expected {len(self.input_lines)} data bits, got {len(data)}"
            )
        cells = ["0"] * self.circuit.width
        for bit, line in zip(data, self.input_lines):
            cells[line] = "1" if bit else "0"
        if self.helper_lines:
            for bit, line in zip(self.helper_value, self.helper_lines):
                cells[line] = "1" if bit else "0"
        for line in self.const_one_lines:
            cells[line] = "1"
        return BitString("".join(cells))

    def run(self, data: BitString) -> BitString:
        """Simulate on `data` (helper and constant lines filled in); returns
        the full final state."""
        return simulate(self.circuit, self.assemble_input(data))

    def pick(self, state: BitString, lines: Sequence[int]) -> BitString:
        return BitString(state[i] for i in lines)

    def result(self, state: BitString) -> BitString:
        return self.pick(state, self.result_lines)

    def run_result(self, data: BitString) -> BitString:
        return self.result(self.run(data))


# --- Bennett compiler -----------------------------------------------------------


def bennett_compile(
    src: IrreversibleCircuit,
    ancilla_budget: int | None = None,
) -> CompiledReversible:
    """Compile a netlist into an ancilla-clean reversible circuit.

    One zero work line per source gate; outputs are CNOT-copied to fresh
    zero lines; the forward stage is then replayed in reverse, restoring
    every work line.  Raises TooManyLines past the ancilla budget
    (default: 4x the source gate count).
    """
    k, g, m = len(src.inputs), len(src.gates), len(src.outputs)
    budget = 4 * g if ancilla_budget is None else ancilla_budget
    if g > budget:
        raise TooManyLines(f"{g} work lines needed, budget {budget}")

    line_of: dict[str, int] = {name: i for i, name in enumerate(src.inputs)}
    forward: list[Gate] = []
    for j, gate in enumerate(src.gates):
        t = k + j
        a = line_of[gate.args[0]]
        if gate.op == NOT:
            forward += [cnot(a, t), not_gate(t)]
        else:
            b = line_of[gate.args[1]]
            if a == b:
                # degenerate two-arg gates: and/or collapse to a wire, xor to 0
                if gate.op in (AND, OR):
                    forward.append(cnot(a, t))
            elif gate.op == AND:
                forward.append(toffoli(a, b, t))
            elif gate.op == XOR:
                forward += [cnot(a, t), cnot(b, t)]
            else:  # or: a + b + ab mod 2
                forward += [cnot(a, t), cnot(b, t), toffoli(a, b, t)]
        line_of[gate.gate_id] = t

    copies = [cnot(line_of[ref], k + g + i) for i, ref in enumerate(src.outputs)]
    gates = tuple(forward) + tuple(copies) + tuple(reversed(forward))

    roles = (INPUT,) * k + (ANCILLA_ZERO,) * g + (OUTPUT_ALIAS,) * m
    circuit = ReversibleCircuit(k + g + m, gates, roles)
    return CompiledReversible(
        circuit=circuit,
        input_lines=tuple(range(k)),
        output_lines=tuple(range(k + g, k + g + m)),
        ancilla_lines=tuple(range(k, k + g)),
    )


# --- sparse permutation synthesis on a register ----------------------------------


def _transposition_gates(u: int, v: int, register: Sequence[int], chain: Sequence[int]) -> list[Gate]:
    """Exact swap of the two basis states u and v of the register lines.

    Conjugates a multi-controlled flip by CNOTs (folding the differing
    bits onto one pivot line) and NOTs (turning the off-pivot pattern into
    all-ones).  Every other basis state is left fixed; the chain ancillas
    are zero before and after.
    """
    if u == v:
        return []
    diff = u ^ v
    p = (diff & -diff).bit_length() - 1  # pivot: lowest differing line
    lo = u if not (u >> p) & 1 else v  # the one with pivot bit 0

    wrap: list[Gate] = []
    for i in register:
        if i != p and (diff >> i) & 1:
            wrap.append(cnot(p, i))
    sandwich = [not_gate(i) for i in register if i != p and not (lo >> i) & 1]
    controls = [i for i in register if i != p]

    core: list[Gate] = []
    if len(controls) == 1:
        core = [cnot(controls[0], p)]
    elif len(controls) == 2:
        core = [toffoli(controls[0], controls[1], p)]
    else:
        need = len(controls) - 2
        if need > len(chain):
            raise TooManyLines(f"need {need} chain ancillas, have {len(chain)}")
        up = [toffoli(controls[0], controls[1], chain[0])]
        for idx in range(need - 1):
            up.append(toffoli(chain[idx], controls[2 + idx], chain[idx + 1]))
        core = up + [toffoli(chain[need - 1], controls[-1], p)] + list(reversed(up))

    return wrap + sandwich + core + list(reversed(sandwich)) + list(reversed(wrap))


def _cycles(perm: dict[int, int]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for start in sorted(perm):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        out.append(cyc)
    return out


def _register_int(bits: BitString) -> int:
    mask = 0
    for i, b in enumerate(bits):
        if b:
            mask |= 1 << i
    return mask


def build_fig1_compressor(
    codec: CompressionCodec,
    block: int,
    helper: BitString,
    raw_escape: bool = True,
) -> CompiledReversible:
    """Reversible in-place block compression with helper.

    The returned circuit maps, on its block+1-line data register,

        data(S) || spare-0   ->   code(S, helper) || zero padding,

    with the helper carried unchanged on inert lines and all chain
    ancillas restored to zero.  The map restricted to the register is a
    bijection of the whole register cube, so the full-line map is
    injective by construction and can be swept exhaustively.

    Raises CodecNotInjective when the codec fails the round trip on the
    block domain, and CompressorOverflow when a block cannot be encoded
    under the given escape policy.
    """
    if block < 1:
        raise ValueError("block must be at least 1")
    reg_width = block + 1

    fixed = codec.fixed_code_width is not None
    # Register layout: the encoded block always starts at line 0.  For
    # mode-bit codecs the input data sits on lines 1..block so that the raw
    # branch is a bare flip of line 0; fixed-width codecs place data on
    # lines 0..block-1 (their encoding carries no mode bit).
    if fixed:
        input_lines = tuple(range(block))
        spare = block
    else:
        input_lines = tuple(range(1, block + 1))
        spare = 0

    table: dict[int, int] = {}
    used: set[int] = set()
    codes: dict[int, BitString] = {}
    for s_val in range(1 << block):
        data = BitString.from_int(s_val, block)
        if codec.decompress(codec.compress(data, helper), helper) != data:
            raise CodecNotInjective(f"{codec.name} fails round-trip on {data}")
        coded = encode_with_escape(codec, data, helper, budget=block, raw_escape=raw_escape)
        padded = coded + BitString.zeros(reg_width - len(coded))
        cells = ["0"] * reg_width
        for bit, line in zip(data, input_lines):
            cells[line] = "1" if bit else "0"
        u = _register_int(BitString("".join(cells)))
        e = _register_int(padded)
        if e in used:
            raise CodecNotInjective(f"{codec.name} block encoding collides at {data}")
        table[u] = e
        used.add(e)
        codes[u] = padded

    base_mask = 0 if fixed else 1  # the final flip of line 0 absorbs the raw branch
    # Extend to a permutation: leftover points prefer their base-flipped
    # partner, which makes the residue permutation sparse.
    deferred: list[int] = []
    for v in range(1 << reg_width):
        if v in table:
            continue
        pref = v ^ base_mask
        if pref not in used:
            table[v] = pref
            used.add(pref)
        else:
            deferred.append(v)
    leftover_images = sorted(set(range(1 << reg_width)) - used)
    for v, img in zip(deferred, leftover_images):
        table[v] = img

    sigma = {x: y ^ base_mask for x, y in table.items()}
    moved = {x for x, y in sigma.items() if y != x}

    register = tuple(range(reg_width))
    chain_count = max(0, reg_width - 3) if moved else 0
    chain = tuple(range(reg_width, reg_width + chain_count))
    helper_lines = tuple(
        range(reg_width + chain_count, reg_width + chain_count + len(helper))
    )

    gates: list[Gate] = []
    for cyc in _cycles(sigma):
        anchor = cyc[0]
        for other in cyc[1:]:
            gates += _transposition_gates(anchor, other, register, chain)
    if base_mask:
        gates.append(not_gate(0))

    roles = [OUTPUT_ALIAS] * reg_width
    for i in input_lines:
        roles[i] = INPUT
    roles += [ANCILLA_ZERO] * chain_count + [HELPER] * len(helper)
    circuit = ReversibleCircuit(
        reg_width + chain_count + len(helper), tuple(gates), tuple(roles)
    )
    return CompiledReversible(
        circuit=circuit,
        input_lines=input_lines,
        output_lines=(spare,),
        helper_lines=helper_lines,
        ancilla_lines=chain,
        junk_restored=True,
        result_lines=register,
        helper_value=helper,
    )


def fig1_block_oracle(
    codec: CompressionCodec,
    block: int,
    helper: BitString,
    raw_escape: bool = True,
) -> Callable[[BitString], BitString]:
    """Reference map the built circuit must equal on its data register."""

    def oracle(data: BitString) -> BitString:
        coded = encode_with_escape(codec, data, helper, budget=block, raw_escape=raw_escape)
        return coded + BitString.zeros(block + 1 - len(coded))

    return oracle


# --- verification sweeps ----------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    swept: int
    mismatches: tuple = ()
    ancilla_violations: tuple = ()
    injective_on_domain: bool = True

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.ancilla_violations and self.injective_on_domain


def verify_compiled(
    compiled: CompiledReversible,
    oracle: Callable[[BitString], BitString],
    max_width: int | None = None,
    keep: int = 16,
) -> VerificationReport:
    """Exhaustively compare a compiled circuit against a reference map.

    Sweeps the whole input register, checking result equality, ancilla
    restoration (ancilla lines back to 0, const lines still 1, helper
    lines untouched), and injectivity of the full-state map on the swept
    domain.  `keep` caps how many offending cases are recorded.
    """
    ceiling = max_sweep_width() if max_width is None else max_width
    k = len(compiled.input_lines)
    if k > ceiling:
        raise DomainTooLarge(f"2^{k} inputs exceeds 2^{ceiling} ceiling")

    mismatches = []
    violations = []
    seen: set[str] = set()
    injective = True
    for x in range(1 << k):
        data = BitString.from_int(x, k)
        state = compiled.run(data)
        got = compiled.result(state)
        want = oracle(data)
        if got != want and len(mismatches) < keep:
            mismatches.append((data, got, want))
        for line in compiled.ancilla_lines:
            if state[line] != 0 and len(violations) < keep:
                violations.append((data, line, "ancilla not restored"))
        for line in compiled.const_one_lines:
            if state[line] != 1 and len(violations) < keep:
                violations.append((data, line, "constant line flipped"))
        if compiled.helper_lines:
            kept = compiled.pick(state, compiled.helper_lines)
            if kept != compiled.helper_value and len(violations) < keep:
                violations.append((data, compiled.helper_lines[0], "helper changed"))
        text = str(state)
        if text in seen:
            injective = False
        seen.add(text)
    return VerificationReport(1 << k, tuple(mismatches), tuple(violations), injective)
