"""Syndromes, per-column cyclic shifts, and the end-to-end reduction check.

A plan moves the contents of column j by the net amount

    s_j = h_div_j - h_mul_j

positive to the right (later in time), negative to the left.  Because an
admissible plan keeps the combined exponent constant across columns, the
code-side exponents prescribe the same movement once that global constant
is absorbed into the time origin, so one signed shift serves received
data, error sequences and codewords alike; that is what keeps z' = y' + e'
true blockwise.  Shifts are cyclic within a per-column window of
n_real + |s_j| blocks and the identity beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockSequence
from .gf2poly import GHPair, PolyMatrix, memory, overall_constraint_length
from .transform import ReductionReport, ShiftPlan, simultaneous_reduce
from .trellis import build_code_trellis, build_error_trellis, enumerate_paths


def net_shifts(plan: ShiftPlan) -> tuple:
    """Per-column net movement, positive meaning delay."""
    return tuple(d - m for d, m in zip(plan.h_div, plan.h_mul))


def syndrome(z: BlockSequence, H: PolyMatrix) -> BlockSequence:
    """Causal convolution of z with H^T, one output block per input block."""
    if z.block_width != H.cols:
        raise ValueError(
            f"received width {z.block_width}, expected n={H.cols}")
    out = []
    for t in range(1, len(z) + 1):
        blk = []
        for i in range(1, H.rows + 1):
            acc = 0
            for j in range(1, H.cols + 1):
                h = H.entry(i, j)
                d = 0
                while h >> d:
                    if h >> d & 1 and t - d >= 1:
                        acc ^= z.bit(t - d, j)
                    d += 1
            blk.append(acc)
        out.append(tuple(blk))
    return BlockSequence(H.rows, tuple(out))


def _cyclic_shift(seq: BlockSequence, shifts, n_real: int) -> BlockSequence:
    if len(shifts) != seq.block_width:
        raise ValueError(
            f"{len(shifts)} shifts for width {seq.block_width}")
    mods = [n_real + abs(s) for s in shifts]
    if len(seq) < max(mods):
        raise ValueError(
            f"sequence has {len(seq)} blocks, shift window needs {max(mods)}")
    out = [[0] * seq.block_width for _ in range(len(seq))]
    for j, (s, mod) in enumerate(zip(shifts, mods), 1):
        for p in range(len(seq)):
            src = (p - s) % mod if p < mod else p
            out[p][j - 1] = seq.bit(src + 1, j)
    return BlockSequence(seq.block_width, tuple(tuple(r) for r in out))


@dataclass(frozen=True)
class ShiftedView:
    """A sequence seen through a plan's cyclic shifts.

    The view keeps the original, so the shift is always invertible:
    restore() applies the negated shifts and returns base exactly.
    """

    base: BlockSequence
    plan: ShiftPlan
    n_real: int

    def __post_init__(self):
        if self.plan.n != self.base.block_width:
            raise ValueError(
                f"plan has {self.plan.n} columns, blocks are "
                f"{self.base.block_width} wide")
        _cyclic_shift(self.base, net_shifts(self.plan), self.n_real)

    @property
    def per_column_modulus(self) -> tuple:
        return tuple(self.n_real + abs(s) for s in net_shifts(self.plan))

    @property
    def shifted(self) -> BlockSequence:
        return _cyclic_shift(self.base, net_shifts(self.plan), self.n_real)

    def restore(self) -> BlockSequence:
        back = tuple(-s for s in net_shifts(self.plan))
        return _cyclic_shift(self.shifted, back, self.n_real)


def shift_received(z: BlockSequence, plan: ShiftPlan, n_real: int) -> BlockSequence:
    """Move each column of the received data by the plan's net shifts."""
    return ShiftedView(z, plan, n_real).shifted


def shift_code(y: BlockSequence, plan: ShiftPlan, n_real: int) -> BlockSequence:
    """Move each column of a codeword the same way the errors move.

    Code and error components ride one clock under an admissible plan, so
    this is the received-data shift applied to y.
    """
    return ShiftedView(y, plan, n_real).shifted


def boundary_masks(plan: ShiftPlan, n_real: int, side: str = "error",
                   horizon=None) -> dict:
    """Forced-zero label positions of the shifted trellises.

    Window position t of column j aliases, through the cyclic shift, a
    position of the unshifted sequence; whenever that alias lands past
    n_real it names a terminated all-zero block, so the bit is pinned to
    zero.  The result maps 1-based sections to frozensets of columns.

    Both trellises share one clock, so the masks are identical for
    side="code" and side="error"; the parameter is kept for call-site
    clarity.  The horizon defaults to n_real plus the largest shift
    magnitude, which makes the identity plan's masks empty.
    """
    if side not in ("code", "error"):
        raise ValueError(f"side must be 'code' or 'error', got {side!r}")
    shifts = net_shifts(plan)
    if horizon is None:
        horizon = n_real + max((abs(s) for s in shifts), default=0)
    out = {}
    for j, s in enumerate(shifts, 1):
        mod = n_real + abs(s)
        for t in range(1, horizon + 1):
            alias = (t - 1 - s) % mod + 1 if t <= mod else t
            if alias > n_real:
                out.setdefault(t, set()).add(j)
    return {t: frozenset(cols) for t, cols in sorted(out.items())}


def reconstruct_code_paths(z_shifted: BlockSequence, error_paths):
    """Blockwise xor of the shifted received data onto every error path."""
    return sorted({z_shifted ^ e for e in error_paths},
                  key=lambda s: s.blocks)


@dataclass(frozen=True)
class VerifyReport:
    reduction: ReductionReport
    n_real: int
    window: int
    z_padded: BlockSequence
    z_shifted: BlockSequence
    shifted_syndrome: BlockSequence
    masks: dict
    code_paths: tuple
    error_paths: tuple
    reconstructed: tuple
    code_states_before: int
    code_states_after: int
    error_states_before: int
    error_states_after: int
    passed: bool
    mismatch: tuple


def verify_simultaneous_reduction(pair: GHPair, plan: ShiftPlan,
                                  z: BlockSequence, n_real: int) -> VerifyReport:
    """Reduce the pair, shift z, and compare the two reduced trellises.

    The check runs over a window wide enough for both flushes and the
    largest shift.  It passes when the reduced code-trellis paths coincide,
    as a set, with the shifted received data xor each reduced error-trellis
    path; that equality is exactly the path-level statement of simultaneous
    reduction.  On failure the report carries the symmetric difference.
    """
    if z.block_width != pair.n:
        raise ValueError(f"received width {z.block_width}, expected {pair.n}")
    if len(z) < n_real:
        raise ValueError(f"need {n_real} real blocks, got {len(z)}")
    for t in range(n_real + 1, len(z) + 1):
        if any(z[t - 1]):
            raise ValueError(f"pad block {t} is nonzero")

    red = simultaneous_reduce(pair, plan)
    g_fin, h_fin = red.transformed_pair.G, red.transformed_pair.H
    shifts = net_shifts(plan)
    window = n_real + max(memory(g_fin), memory(h_fin),
                          max((abs(s) for s in shifts), default=0))

    z_pad = BlockSequence(z.block_width, z.blocks[:n_real]).padded(window)
    z_sh = shift_received(z_pad, plan, n_real)
    zeta = syndrome(z_sh, h_fin)
    masks = boundary_masks(plan, n_real, horizon=window)

    err_paths = enumerate_paths(
        build_error_trellis(h_fin, zeta, n_real=window, masks=masks))
    code_paths = enumerate_paths(
        build_code_trellis(g_fin, window, masks=masks))
    recon = reconstruct_code_paths(z_sh, err_paths)

    c_set, y_set = set(code_paths), set(recon)
    return VerifyReport(
        reduction=red,
        n_real=n_real,
        window=window,
        z_padded=z_pad,
        z_shifted=z_sh,
        shifted_syndrome=zeta,
        masks=masks,
        code_paths=tuple(code_paths),
        error_paths=tuple(err_paths),
        reconstructed=tuple(recon),
        code_states_before=1 << overall_constraint_length(pair.G),
        code_states_after=1 << overall_constraint_length(g_fin),
        error_states_before=1 << overall_constraint_length(pair.H),
        error_states_after=1 << overall_constraint_length(h_fin),
        passed=c_set == y_set,
        mismatch=tuple(sorted(c_set ^ y_set, key=lambda s: s.blocks)))
