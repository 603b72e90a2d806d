"""Parity-check constructions for the benchmarked CSS codes.

Builds the 2D toric, 3D toric and periodic 6.6.6 color codes as
(H_X, H_Z) pairs of bit-packed matrices, plus Tanner-graph adjacency and
weight statistics.

Index conventions (kept stable so fixtures stay valid):
  * 2D toric: vertex (x, y) -> x*L + y; edge (o, x, y) -> o*L^2 + x*L + y
    with o = 0 the edge from (x, y) towards (x+1, y) and o = 1 towards
    (x, y+1), periodic.
  * 3D toric: same pattern with axis a in {0, 1, 2} and z fastest.
  * color code: cell (i, j) on an lx-by-ly periodic rhombic grid holds
    vertices 2*(i*ly + j) + s for sublattice s in {0, 1}; face (i, j)
    -> i*ly + j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitmatrix import BitMatrix, bit_indices


class ConstructionError(ValueError):
    """Invalid lattice parameters for a code construction."""


@dataclass
class CssCode:
    """A CSS code: paired parity-check matrices plus lattice metadata."""

    name: str
    n_qubits: int
    hx: BitMatrix
    hz: BitMatrix
    lattice: tuple[int, ...]
    distance_hint: int | None = None

    @property
    def size_label(self) -> str:
        if len(self.lattice) == 1:
            return str(self.lattice[0])
        return "x".join(str(v) for v in self.lattice)


@dataclass
class TannerGraph:
    """Bipartite incidence of one sector's parity-check matrix."""

    check_adj: list[list[int]]
    qubit_adj: list[list[int]]
    max_degree: int


def tanner_graph(h: BitMatrix) -> TannerGraph:
    """Extract check/qubit adjacency lists and the maximum degree."""
    check_adj = [list(bit_indices(row)) for row in h.data]
    qubit_adj: list[list[int]] = [[] for _ in range(h.cols)]
    for i, nbrs in enumerate(check_adj):
        for j in nbrs:
            qubit_adj[j].append(i)
    degrees = [len(a) for a in check_adj] + [len(a) for a in qubit_adj]
    return TannerGraph(check_adj, qubit_adj, max(degrees, default=0))


def total_weight(h: BitMatrix) -> int:
    """Number of 1-bits in the matrix."""
    return sum(row.bit_count() for row in h.data)


def css_product_is_zero(hx: BitMatrix, hz: BitMatrix) -> bool:
    """Check hx @ hz^T = 0 via sparse overlap counts (exact)."""
    if hx.cols != hz.cols:
        return False
    by_qubit = tanner_graph(hx).qubit_adj
    for z_row in hz.data:
        overlap: dict[int, int] = {}
        for q in bit_indices(z_row):
            for chk in by_qubit[q]:
                overlap[chk] = overlap.get(chk, 0) + 1
        if any(v & 1 for v in overlap.values()):
            return False
    return True


def _check_css(code: CssCode) -> CssCode:
    if not css_product_is_zero(code.hx, code.hz):
        raise AssertionError(f"{code.name}: H_X @ H_Z^T != 0, construction bug")
    return code


def build_toric_2d(L: int) -> CssCode:
    """2D toric code on an L x L periodic square lattice: [[2L^2, 2, L]].

    Qubits sit on edges; hx rows are weight-4 vertex stars, hz rows are
    weight-4 faces.
    """
    if L < 2:
        raise ConstructionError(f"toric2d needs L >= 2, got {L}")
    nn = L * L

    def edge(o: int, x: int, y: int) -> int:
        return o * nn + (x % L) * L + (y % L)

    hx = BitMatrix.zeros(nn, 2 * nn)
    hz = BitMatrix.zeros(nn, 2 * nn)
    for x in range(L):
        for y in range(L):
            v = x * L + y
            for q in (edge(0, x, y), edge(0, x - 1, y), edge(1, x, y), edge(1, x, y - 1)):
                hx.data[v] |= 1 << q
            for q in (edge(0, x, y), edge(0, x, y + 1), edge(1, x, y), edge(1, x + 1, y)):
                hz.data[v] |= 1 << q
    return _check_css(CssCode("toric2d", 2 * nn, hx, hz, (L,), distance_hint=L))


def build_toric_3d(L: int) -> CssCode:
    """3D toric code on an L^3 periodic cubic lattice: [[3L^3, 3, (L^2, L)]].

    hx rows are weight-6 vertex stars, hz rows are weight-4 faces (one per
    plaquette orientation and position).
    """
    if L < 2:
        raise ConstructionError(f"toric3d needs L >= 2, got {L}")
    nn = L * L * L

    def edge(a: int, x: int, y: int, z: int) -> int:
        return a * nn + (x % L) * L * L + (y % L) * L + (z % L)

    hx = BitMatrix.zeros(nn, 3 * nn)
    hz = BitMatrix.zeros(3 * nn, 3 * nn)
    unit = {0: (1, 0, 0), 1: (0, 1, 0), 2: (0, 0, 1)}
    planes = [(0, 1), (0, 2), (1, 2)]
    for x in range(L):
        for y in range(L):
            for z in range(L):
                v = x * L * L + y * L + z
                for a in range(3):
                    dx, dy, dz = unit[a]
                    hx.data[v] |= 1 << edge(a, x, y, z)
                    hx.data[v] |= 1 << edge(a, x - dx, y - dy, z - dz)
                for p, (a, b) in enumerate(planes):
                    f = p * nn + v
                    da, db = unit[a], unit[b]
                    for q in (
                        edge(a, x, y, z),
                        edge(a, x + db[0], y + db[1], z + db[2]),
                        edge(b, x, y, z),
                        edge(b, x + da[0], y + da[1], z + da[2]),
                    ):
                        hz.data[f] |= 1 << q
    return _check_css(CssCode("toric3d", 3 * nn, hx, hz, (L,), distance_hint=L))


def build_color_666(lx: int, ly: int) -> CssCode:
    """Periodic 6.6.6 color code with lx x ly hexagonal cells: n = 2*lx*ly.

    Qubits sit on the honeycomb vertices (two per cell); hx = hz with one
    weight-6 row per face.  The face at cell (i, j) covers both vertices
    of cells (i, j+1) and (i+1, j), the B vertex of (i, j) and the A
    vertex of (i+1, j+1), which makes adjacent faces share exactly two
    vertices and gives every vertex three faces per sector.  Divisibility
    by 3 in both directions keeps the faces three-colorable around the
    torus.
    """
    if lx < 3 or ly < 3 or lx % 3 or ly % 3:
        raise ConstructionError(
            f"color666 needs lx, ly >= 3 and divisible by 3, got ({lx}, {ly})"
        )
    n = 2 * lx * ly

    def vertex(i: int, j: int, s: int) -> int:
        return 2 * ((i % lx) * ly + (j % ly)) + s

    hx = BitMatrix.zeros(lx * ly, n)
    for i in range(lx):
        for j in range(ly):
            f = i * ly + j
            for q in (
                vertex(i, j, 1),
                vertex(i + 1, j, 0),
                vertex(i + 1, j, 1),
                vertex(i + 1, j + 1, 0),
                vertex(i, j + 1, 1),
                vertex(i, j + 1, 0),
            ):
                hx.data[f] |= 1 << q
    return _check_css(CssCode("color666", n, hx, hx.copy(), (lx, ly)))


# The benchmark's color-code sizes, keyed by qubit count n = 2*lx*ly.
COLOR_SIZES: dict[int, tuple[int, int]] = {
    18: (3, 3),
    36: (6, 3),
    72: (6, 6),
    144: (12, 6),
    288: (12, 12),
    432: (18, 12),
    648: (18, 18),
}

CODE_NAMES = ("toric2d", "toric3d", "color666")


def make_code(name: str, size: int | tuple[int, ...]) -> CssCode:
    """Build a code by name.

    *size* is L for the toric codes; for color666 it is (lx, ly) or a
    qubit count from the benchmark table.
    """
    if name == "toric2d":
        (L,) = size if isinstance(size, tuple) else (size,)
        return build_toric_2d(L)
    if name == "toric3d":
        (L,) = size if isinstance(size, tuple) else (size,)
        return build_toric_3d(L)
    if name == "color666":
        if isinstance(size, tuple):
            lx, ly = size
        else:
            if size not in COLOR_SIZES:
                raise ConstructionError(
                    f"no color666 layout for n={size}; known: {sorted(COLOR_SIZES)}"
                )
            lx, ly = COLOR_SIZES[size]
        return build_color_666(lx, ly)
    raise ConstructionError(f"unknown code {name!r}; choose from {CODE_NAMES}")
