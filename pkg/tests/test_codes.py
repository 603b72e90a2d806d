import pytest

from gf2uf import BitMatrix, lup_decompose
from gf2uf.codes import (
    COLOR_SIZES,
    ConstructionError,
    build_color_666,
    build_toric_2d,
    build_toric_3d,
    make_code,
    tanner_graph,
    total_weight,
)


def css_zero_dense(code):
    """Independent check: dense GF(2) product hx @ hz^T."""
    return code.hx.mul_transpose(code.hz).is_zero()


class TestToric2d:
    def test_paper_size(self):
        assert build_toric_2d(7).n_qubits == 98

    def test_smallest_lattice(self):
        code = build_toric_2d(2)
        assert code.n_qubits == 8
        assert all(code.hx.row_weight(i) == 4 for i in range(code.hx.rows))

    def test_row_and_column_weights(self):
        code = build_toric_2d(3)
        assert code.hx.rows == 9 and code.hz.rows == 9
        assert all(code.hx.row_weight(i) == 4 for i in range(9))
        assert all(code.hz.row_weight(i) == 4 for i in range(9))
        assert all(code.hx.col_weight(j) == 2 for j in range(code.n_qubits))

    def test_rank_one_short_of_checks(self):
        code = build_toric_2d(3)
        assert lup_decompose(code.hx).r == 8

    def test_css_orthogonality(self):
        for L in (2, 3, 5):
            assert css_zero_dense(build_toric_2d(L))

    def test_distance_hint_and_label(self):
        code = build_toric_2d(5)
        assert code.distance_hint == 5
        assert code.size_label == "5"

    def test_rejects_small_lattice(self):
        with pytest.raises(ConstructionError):
            build_toric_2d(1)


class TestToric3d:
    def test_paper_size(self):
        assert build_toric_3d(3).n_qubits == 81

    def test_smallest_lattice(self):
        code = build_toric_3d(2)
        assert code.n_qubits == 24
        assert all(code.hx.row_weight(i) == 6 for i in range(code.hx.rows))

    def test_row_and_column_weights(self):
        code = build_toric_3d(3)
        assert code.hx.rows == 27 and code.hz.rows == 81
        assert all(code.hx.row_weight(i) == 6 for i in range(code.hx.rows))
        assert all(code.hz.row_weight(i) == 4 for i in range(code.hz.rows))
        assert all(code.hx.col_weight(j) == 2 for j in range(code.n_qubits))

    def test_rank(self):
        assert lup_decompose(build_toric_3d(3).hx).r == 26

    def test_css_orthogonality(self):
        for L in (2, 3):
            assert css_zero_dense(build_toric_3d(L))

    def test_rejects_small_lattice(self):
        with pytest.raises(ConstructionError):
            build_toric_3d(1)


class TestColor666:
    def test_benchmark_size_table(self):
        for n, (lx, ly) in COLOR_SIZES.items():
            assert build_color_666(lx, ly).n_qubits == n

    def test_row_weights(self):
        for lx, ly in [(3, 3), (6, 3), (6, 6)]:
            code = build_color_666(lx, ly)
            assert code.hx.rows == lx * ly
            assert all(code.hx.row_weight(i) == 6 for i in range(code.hx.rows))

    def test_column_weights(self):
        code = build_color_666(6, 3)
        assert all(code.hx.col_weight(j) == 3 for j in range(code.n_qubits))

    def test_sectors_identical_and_orthogonal(self):
        code = build_color_666(3, 3)
        assert code.hx == code.hz
        assert css_zero_dense(code)

    def test_adjacent_faces_share_two_vertices(self):
        code = build_color_666(3, 3)
        overlaps = code.hx.mul_transpose(code.hx)
        assert overlaps.is_zero()
        counts = set()
        rows = code.hx.data
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                counts.add((rows[i] & rows[j]).bit_count())
        assert counts <= {0, 2}

    def test_divisibility_enforced(self):
        for lx, ly in [(4, 3), (3, 4), (2, 3), (3, 2)]:
            with pytest.raises(ConstructionError):
                build_color_666(lx, ly)

    def test_no_distance_hint(self):
        code = build_color_666(3, 3)
        assert code.distance_hint is None
        assert code.size_label == "3x3"


class TestTannerGraph:
    def test_toric_degrees(self):
        code = build_toric_2d(3)
        graph = tanner_graph(code.hx)
        assert all(len(adj) == 4 for adj in graph.check_adj)
        assert all(len(adj) == 2 for adj in graph.qubit_adj)
        assert graph.max_degree == 4

    def test_zero_matrix(self):
        graph = tanner_graph(BitMatrix.zeros(2, 3))
        assert all(adj == [] for adj in graph.check_adj)
        assert all(adj == [] for adj in graph.qubit_adj)
        assert graph.max_degree == 0

    def test_single_entry(self):
        graph = tanner_graph(BitMatrix.from_rows([[1]]))
        assert graph.check_adj == [[0]]
        assert graph.qubit_adj == [[0]]
        assert graph.max_degree == 1

    def test_adjacency_matches_matrix(self):
        code = build_color_666(3, 3)
        graph = tanner_graph(code.hx)
        for i, adj in enumerate(graph.check_adj):
            assert adj == [j for j in range(code.n_qubits) if code.hx.get(i, j)]


class TestWeights:
    def test_toric_weight(self):
        assert total_weight(build_toric_2d(7).hx) == 196

    def test_color_weight(self):
        assert total_weight(build_color_666(3, 3).hx) == 54

    def test_zero_matrix(self):
        assert total_weight(BitMatrix.zeros(4, 4)) == 0

    def test_sector_weight_ordering_at_comparable_n(self):
        # color ~ 3n outweighs 2D toric ~ 2n per sector
        color = build_color_666(6, 6)
        toric = build_toric_2d(6)
        assert color.n_qubits == toric.n_qubits == 72
        assert total_weight(color.hx) > total_weight(toric.hx)


class TestMakeCode:
    def test_dispatch(self):
        assert make_code("toric2d", 3).n_qubits == 18
        assert make_code("toric3d", (2,)).n_qubits == 24
        assert make_code("color666", (3, 3)).n_qubits == 18
        assert make_code("color666", 72).lattice == (6, 6)

    def test_unknown_inputs(self):
        with pytest.raises(ConstructionError):
            make_code("surface", 3)
        with pytest.raises(ConstructionError):
            make_code("color666", 20)
