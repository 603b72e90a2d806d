"""Batch and online LUP decomposition over GF(2).

Maintains an evolving factorisation P*A = (L+I)*U where P is a row
permutation (stored as an index vector), L collects the recorded row
XORs strictly below the diagonal, and U is the working matrix kept in
row echelon form.  L's unit diagonal is implicit and only materialized
by :func:`verify_factorisation`.

``online_update`` appends rows and columns to an existing state and
restores row echelon form while touching only the new rows and columns:
previously made elimination decisions are replayed onto the new column
blocks, and the resumed pivot scan skips the settled part of the matrix.

An optional augmented column rides along with U (swapped and XORed by
exactly the same row operations) but is never eligible for pivoting, so
consistency of the accumulated system A*x = b can be read off the state
at any point and a particular solution recovered by back-substitution.

All operations count their work in :class:`OpCounters`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitmatrix import BitMatrix, bit_indices


class InconsistentSystemError(ValueError):
    """Raised when a solution is requested from an inconsistent system."""


@dataclass
class OpCounters:
    """Operation tallies for one elimination workload.

    bit_xors charges the bit-length of each row XOR (full row width plus
    one for the augmented bit where present; new-column width only for
    the replay XORs of an online update).  row_xors counts row XORs,
    row_swaps counts actual row exchanges, and col_searches counts
    pivot-scan column examinations.
    """

    bit_xors: int = 0
    row_xors: int = 0
    row_swaps: int = 0
    col_searches: int = 0

    def add(self, other: OpCounters) -> None:
        self.bit_xors += other.bit_xors
        self.row_xors += other.row_xors
        self.row_swaps += other.row_swaps
        self.col_searches += other.col_searches

    def as_dict(self) -> dict[str, int]:
        return {
            "bit_xors": self.bit_xors,
            "row_xors": self.row_xors,
            "row_swaps": self.row_swaps,
            "col_searches": self.col_searches,
        }


@dataclass
class GrowthBlock:
    """New rows and columns appended to a system in one growth step.

    All bit fields are packed ints.  ``old_rows_new_cols[i]`` carries the
    new-column bits of *original* (unpermuted) old row i; the new-row
    lists are indexed by append order.  Zero-row / zero-column blocks are
    valid.
    """

    n_new_rows: int
    n_new_cols: int
    old_rows_new_cols: list[int]
    new_rows_old_cols: list[int]
    new_rows_new_cols: list[int]


@dataclass
class LupState:
    """Evolving P*A = (L+I)*U factorisation with pivot bookkeeping.

    Single-owner mutable: operations update the state in place.  ``perm``
    maps row position -> original row index, ``pivot_cols`` is strictly
    increasing, rows >= ``r`` of ``u`` are zero at finalization, and
    ``aug`` (if not None) packs the transformed augmented column.
    """

    u: BitMatrix
    l: BitMatrix
    perm: list[int]
    pivot_cols: list[int] = field(default_factory=list)
    r: int = 0
    aug: int | None = None
    counters: OpCounters = field(default_factory=OpCounters)

    @property
    def n_rows(self) -> int:
        return self.u.rows

    @property
    def n_cols(self) -> int:
        return self.u.cols


def _settle_row(state: LupState, i: int, r: int) -> None:
    """Move the found pivot row from position i up to position r.

    Rows r..i-1 shift down one place (a cyclic rotation), nothing is
    swapped below the pivot: unsettled rows keep their relative order.
    This matters for the online update: entries of L reference pivot
    *positions*, and a plain swap would drop a still-referenced old
    pivot row below rows that reference it (or let it be eliminated
    again), which breaks P*A = (L+I)*U.  Rotating keeps every referenced
    row settled, in place and unmodified, so the recorded log stays
    exact and strictly lower.  L's columns r..i (and the aug bits)
    rotate along with the rows.
    """
    ud = state.u.data
    ud[r : i + 1] = [ud[i]] + ud[r:i]
    ld = state.l.data
    ld[r : i + 1] = [ld[i]] + ld[r:i]
    state.perm[r : i + 1] = [state.perm[i]] + state.perm[r:i]
    span = i - r + 1
    mask = (1 << span) - 1
    shifted = mask << r
    for x in range(len(ld)):
        seg = (ld[x] >> r) & mask
        if seg:
            seg = ((seg >> (span - 1)) | (seg << 1)) & mask
            ld[x] = (ld[x] & ~shifted) | (seg << r)
    if state.aug is not None:
        seg = (state.aug >> r) & mask
        if seg:
            seg = ((seg >> (span - 1)) | (seg << 1)) & mask
            state.aug = (state.aug & ~shifted) | (seg << r)
    state.counters.row_swaps += 1


def _eliminate(state: LupState, old_rows: int, old_cols: int) -> None:
    """Run the pivot scan from (0, 0), skipping the settled region.

    With ``old_rows = old_cols = 0`` this is the batch elimination; with
    the previous dimensions of an updated state, pivot search and row
    elimination in old columns jump straight to the new rows: the
    not-yet-settled old rows are in echelon order with zeros below the
    diagonal there.  ``old_end`` tracks where that block of remaining
    old rows ends as pivot settling shifts it down.
    """
    u = state.u
    data = u.data
    ldata = state.l.data
    m, n = u.rows, u.cols
    has_aug = state.aug is not None
    xor_width = n + 1 if has_aug else n
    ctr = state.counters
    pivots = state.pivot_cols
    pivots.clear()

    old_end = old_rows
    r = 0
    c = 0
    while r < m and c < n:
        ctr.col_searches += 1
        i = r
        if not (data[i] >> c) & 1:
            i = max(old_end, r + 1) if c < old_cols else r + 1
            while i < m and not (data[i] >> c) & 1:
                i += 1
        if i == m:
            c += 1
            continue
        if i >= old_end:
            old_end += 1
        if i != r:
            _settle_row(state, i, r)
        pivot_row = data[r]
        aug_bit = (state.aug >> r) & 1 if has_aug else 0
        j = max(old_end, r + 1) if c < old_cols else r + 1
        while j < m:
            if (data[j] >> c) & 1:
                data[j] ^= pivot_row
                ldata[j] |= 1 << r
                if aug_bit:
                    state.aug ^= 1 << j
                ctr.row_xors += 1
                ctr.bit_xors += xor_width
            j += 1
        pivots.append(c)
        r += 1
        c += 1
    state.r = r


def lup_decompose(a: BitMatrix, aug: int | None = None) -> LupState:
    """Decompose *a* into P*A = (L+I)*U over GF(2).

    Args:
        a: input matrix (not mutated; any dimensions including zero).
        aug: optional packed augmented column of length a.rows, carried
            through the same row swaps and XORs as U.

    Returns:
        Finalized LupState with U in row echelon form.
    """
    m = a.rows
    if aug is not None and aug >> m:
        raise ValueError("augmented column has bits beyond the row count")
    state = LupState(
        u=a.copy(),
        l=BitMatrix.zeros(m, m),
        perm=list(range(m)),
        aug=aug,
    )
    _eliminate(state, 0, 0)
    return state


def online_update(
    state: LupState,
    block: GrowthBlock,
    new_aug_bits: int | None = None,
) -> LupState:
    """Append *block*'s rows/columns to *state* and restore echelon form.

    The new columns of old rows are first permuted by the stored row
    permutation and XOR-combined according to the recorded L entries, so
    they match the decisions already applied to the old columns.  The
    pivot scan then resumes from (0, 0): settled pivots are revisited at
    no row-operation cost and, while still inside the old columns, pivot
    search and elimination jump directly to the new rows.

    Args:
        state: a state produced by lup_decompose or a prior update.
        block: the appended rows/columns (see GrowthBlock).
        new_aug_bits: packed augmented bits of the new rows; required to
            be absent when the state carries no augmented column.

    Returns:
        The same state, updated in place.
    """
    u = state.u
    m_old, n_old = u.rows, u.cols
    r_new, c_new = block.n_new_rows, block.n_new_cols
    if r_new < 0 or c_new < 0:
        raise ValueError("block dimensions must be non-negative")
    if len(block.old_rows_new_cols) != m_old:
        raise ValueError(
            f"expected {m_old} old-row blocks, got {len(block.old_rows_new_cols)}"
        )
    if len(block.new_rows_old_cols) != r_new or len(block.new_rows_new_cols) != r_new:
        raise ValueError(f"expected {r_new} new-row blocks")
    for bits in block.old_rows_new_cols:
        if bits >> c_new:
            raise ValueError("old-row block has bits beyond the new columns")
    for bits in block.new_rows_new_cols:
        if bits >> c_new:
            raise ValueError("new-row block has bits beyond the new columns")
    for bits in block.new_rows_old_cols:
        if bits >> n_old:
            raise ValueError("new-row block has bits beyond the old columns")
    if state.aug is None:
        if new_aug_bits is not None:
            raise ValueError("state carries no augmented column")
    else:
        if new_aug_bits is None:
            new_aug_bits = 0
        if new_aug_bits >> r_new:
            raise ValueError("augmented bits exceed the new row count")

    ctr = state.counters

    # Place the new columns of old rows under the accumulated permutation.
    for i in range(m_old):
        bits = block.old_rows_new_cols[state.perm[i]]
        if bits:
            u.data[i] |= bits << n_old

    # Replay recorded row XORs on the new column blocks, in row order so
    # every referenced block is already up to date when used.
    if c_new:
        mask = ((1 << c_new) - 1) << n_old
        ldata = state.l.data
        for row in range(1, m_old):
            for c in bit_indices(ldata[row]):
                u.data[row] ^= u.data[c] & mask
                ctr.row_xors += 1
                ctr.bit_xors += c_new

    # Append the new rows (original order) and extend the bookkeeping.
    for k in range(r_new):
        u.data.append(
            block.new_rows_old_cols[k] | (block.new_rows_new_cols[k] << n_old)
        )
        state.l.data.append(0)
        state.perm.append(m_old + k)
    u.rows += r_new
    u.cols += c_new
    state.l.rows += r_new
    state.l.cols += r_new
    if state.aug is not None and new_aug_bits:
        state.aug |= new_aug_bits << m_old

    _eliminate(state, m_old, n_old)
    return state


def rank(state: LupState) -> int:
    """Rank of the accumulated matrix: the number of pivot rows."""
    return state.r


def is_consistent(state: LupState) -> bool:
    """Whether the accumulated augmented system has at least one solution.

    True iff every non-pivot row of U has a zero augmented bit, i.e.
    rank(A|b) = rank(A).

    Raises:
        ValueError: if the state carries no augmented column.
    """
    if state.aug is None:
        raise ValueError("state carries no augmented column")
    return state.aug >> state.r == 0


def solve(state: LupState) -> int:
    """Back-substitute a particular solution with free variables at zero.

    Returns:
        Packed solution x of length state.n_cols with A*x = b.

    Raises:
        InconsistentSystemError: if the system has no solution.
    """
    if not is_consistent(state):
        raise InconsistentSystemError("system is inconsistent; no solution exists")
    x = 0
    data = state.u.data
    pivots = state.pivot_cols
    aug = state.aug
    for i in range(state.r - 1, -1, -1):
        if ((aug >> i) & 1) ^ ((data[i] & x).bit_count() & 1):
            x |= 1 << pivots[i]
    return x


def verify_factorisation(state: LupState, original: BitMatrix) -> bool:
    """Check P*original = (L+I)*U exactly over GF(2)."""
    u = state.u
    if original.rows != u.rows or original.cols != u.cols:
        raise ValueError(
            f"original is {original.rows}x{original.cols}, "
            f"state is {u.rows}x{u.cols}"
        )
    for i in range(u.rows):
        row = u.data[i]
        for c in bit_indices(state.l.data[i]):
            row ^= u.data[c]
        if row != original.data[state.perm[i]]:
            return False
    return True
