"""Generalized union-find decoding over a Tanner graph.

Grows an erasure outward from the flagged checks, validates the reduced
system built on its interior, and extracts a correction once a solution
exists.  Two interchangeable elimination backends do the validation
work: ``offline`` re-decomposes the reduced system from scratch on every
growth step, ``online`` feeds only the newly added rows and columns into
a single evolving LUP state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitmatrix import BitMatrix, bit_indices
from .codes import TannerGraph
from .lup import (
    GrowthBlock,
    LupState,
    OpCounters,
    is_consistent,
    lup_decompose,
    online_update,
    solve,
)

BACKENDS = ("offline", "online")


class NonterminationError(RuntimeError):
    """The erasure saturated (or the step bound tripped) without a solution.

    Signals a syndrome with no solution under the given parity-check
    matrix.
    """


@dataclass
class Erasure:
    """The growing cluster set: checks, qubits and the interior partition.

    List order is append order; ``checks_in`` is the local system's row
    order and ``interior_qubits`` its column order.  Sets only grow.
    """

    checks_in: list[int] = field(default_factory=list)
    qubits_in: list[int] = field(default_factory=list)
    interior_qubits: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._check_set = set(self.checks_in)
        self._qubit_set = set(self.qubits_in)
        self._interior_set = set(self.interior_qubits)

    @classmethod
    def from_syndrome(cls, syndrome: int) -> Erasure:
        return cls(checks_in=list(bit_indices(syndrome)))

    def has_check(self, c: int) -> bool:
        return c in self._check_set

    def has_qubit(self, q: int) -> bool:
        return q in self._qubit_set

    def is_interior(self, q: int) -> bool:
        return q in self._interior_set


@dataclass
class GrowthDelta:
    new_checks: list[int]
    new_qubits: list[int]
    new_interior: list[int]

    def __bool__(self) -> bool:
        return bool(self.new_checks or self.new_qubits or self.new_interior)


@dataclass
class DecodeResult:
    """Outcome of one decode: correction vector plus per-decode metrics."""

    correction: int
    iterations: int
    counters: OpCounters
    valid: bool


def grow(erasure: Erasure, tanner: TannerGraph) -> GrowthDelta:
    """Grow the erasure by one bipartite Tanner step (in place).

    Every neighbor of every current vertex joins: qubits next to in-set
    checks and checks next to in-set qubits, computed from the pre-step
    sets.  Append orders extend by ascending global index.  Returns the
    delta; growing a saturated erasure yields an empty one.
    """
    new_qubits = sorted(
        {
            q
            for c in erasure.checks_in
            for q in tanner.check_adj[c]
            if not erasure.has_qubit(q)
        }
    )
    new_checks = sorted(
        {
            c
            for q in erasure.qubits_in
            for c in tanner.qubit_adj[q]
            if not erasure.has_check(c)
        }
    )
    erasure.qubits_in.extend(new_qubits)
    erasure._qubit_set.update(new_qubits)
    erasure.checks_in.extend(new_checks)
    erasure._check_set.update(new_checks)

    # Only qubits touching the additions can newly have all checks in.
    candidates = set(new_qubits)
    for c in new_checks:
        for q in tanner.check_adj[c]:
            if erasure.has_qubit(q):
                candidates.add(q)
    new_interior = sorted(
        q
        for q in candidates
        if not erasure.is_interior(q)
        and all(erasure.has_check(c) for c in tanner.qubit_adj[q])
    )
    erasure.interior_qubits.extend(new_interior)
    erasure._interior_set.update(new_interior)
    return GrowthDelta(new_checks, new_qubits, new_interior)


def reduced_system(
    erasure: Erasure, h: BitMatrix, syndrome: int
) -> tuple[BitMatrix, int]:
    """Restrict (h, syndrome) to the erasure's checks and interior qubits.

    Rows follow the check append order, columns the interior append
    order.
    """
    col_pos = {q: k for k, q in enumerate(erasure.interior_qubits)}
    rows = []
    sigma = 0
    for i, chk in enumerate(erasure.checks_in):
        bits = 0
        for q in bit_indices(h.data[chk]):
            k = col_pos.get(q)
            if k is not None:
                bits |= 1 << k
        rows.append(bits)
        if (syndrome >> chk) & 1:
            sigma |= 1 << i
    return BitMatrix(len(rows), len(col_pos), rows), sigma


def extract_correction(state: LupState, erasure: Erasure, n_qubits: int) -> int:
    """Solve the local system and scatter the solution to global indices.

    Free variables are zero, so the support stays inside the interior.
    Raises InconsistentSystemError if the state has no solution.
    """
    local = solve(state)
    correction = 0
    for k in bit_indices(local):
        correction |= 1 << erasure.interior_qubits[k]
    if correction >> n_qubits:
        raise ValueError("erasure references qubits beyond n_qubits")
    return correction


def decode(
    h: BitMatrix,
    tanner: TannerGraph,
    syndrome: int,
    backend: str = "online",
) -> DecodeResult:
    """Decode a syndrome by erasure growth and rank validation.

    Args:
        h: parity-check matrix of the decoded sector.
        tanner: its Tanner graph (as from codes.tanner_graph).
        syndrome: packed syndrome bits, one per row of h.
        backend: "offline" (fresh elimination each step) or "online"
            (incremental LUP updates).

    Returns:
        DecodeResult; ``valid`` is re-checked globally against h.

    Raises:
        NonterminationError: if no solution exists for the syndrome.
        ValueError: on backend or dimension errors.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}")
    if syndrome >> h.rows:
        raise ValueError("syndrome has bits beyond the check count")
    if syndrome == 0:
        return DecodeResult(0, 0, OpCounters(), True)

    erasure = Erasure.from_syndrome(syndrome)
    max_steps = h.rows + h.cols
    offline_totals = OpCounters()
    state: LupState | None = None
    if backend == "online":
        state = lup_decompose(BitMatrix.zeros(0, 0), aug=0)
    fed_rows = 0
    fed_cols = 0
    iterations = 0

    while True:
        iterations += 1
        if iterations > max_steps:
            raise NonterminationError(
                "erasure growth exceeded the vertex count without finding a "
                "solution; the syndrome is not decodable under this matrix"
            )
        delta = grow(erasure, tanner)
        if backend == "offline":
            h_prime, sigma_prime = reduced_system(erasure, h, syndrome)
            state = lup_decompose(h_prime, sigma_prime)
            offline_totals.add(state.counters)
        else:
            block, new_aug = _growth_block(
                erasure, tanner, h, syndrome, fed_rows, fed_cols
            )
            online_update(state, block, new_aug)
            fed_rows += block.n_new_rows
            fed_cols += block.n_new_cols
        if is_consistent(state):
            break
        if not delta:
            raise NonterminationError(
                "erasure saturated the Tanner graph but the system stays "
                "inconsistent; the syndrome is not decodable under this matrix"
            )

    correction = extract_correction(state, erasure, h.cols)
    valid = h.mul_vec(correction) == syndrome
    counters = offline_totals if backend == "offline" else state.counters
    return DecodeResult(correction, iterations, counters, valid)


def _growth_block(
    erasure: Erasure,
    tanner: TannerGraph,
    h: BitMatrix,
    syndrome: int,
    fed_rows: int,
    fed_cols: int,
) -> tuple[GrowthBlock, int]:
    """Assemble the not-yet-fed rows/columns of the local system."""
    rows = erasure.checks_in
    cols = erasure.interior_qubits
    r_new = len(rows) - fed_rows
    c_new = len(cols) - fed_cols
    row_pos = {c: i for i, c in enumerate(rows)}
    col_pos = {q: k for k, q in enumerate(cols)}

    old_new = [0] * fed_rows
    new_old = [0] * r_new
    new_new = [0] * r_new
    for k in range(fed_cols, len(cols)):
        bit = 1 << (k - fed_cols)
        for chk in tanner.qubit_adj[cols[k]]:
            i = row_pos[chk]  # interior: every neighboring check is in
            if i < fed_rows:
                old_new[i] |= bit
            else:
                new_new[i - fed_rows] |= bit
    new_aug = 0
    for j in range(r_new):
        chk = rows[fed_rows + j]
        for q in bit_indices(h.data[chk]):
            k = col_pos.get(q)
            if k is not None and k < fed_cols:
                new_old[j] |= 1 << k
        if (syndrome >> chk) & 1:
            new_aug |= 1 << j
    return GrowthBlock(r_new, c_new, old_new, new_old, new_new), new_aug
