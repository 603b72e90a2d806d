import random

import pytest

from gf2uf import BitMatrix
from gf2uf.codes import build_toric_2d, make_code, tanner_graph
from gf2uf.sim import (
    CSV_COLUMNS,
    ShotRecord,
    SimConfig,
    aggregate,
    csv_rows,
    run_config,
    run_shot,
    sample_error,
    shot_rng,
    syndrome,
    write_shot_csv,
)


class TestSampleError:
    def test_p_zero(self):
        assert sample_error(100, 0.0, shot_rng(1, 0)) == 0

    def test_p_one(self):
        e = sample_error(100, 1.0, shot_rng(1, 0))
        assert e == (1 << 100) - 1

    def test_binomial_bound(self):
        n = 10_000
        e = sample_error(n, 0.5, shot_rng(123, 0))
        sigma = (n * 0.25) ** 0.5
        assert abs(e.bit_count() - n / 2) < 5 * sigma

    def test_zero_length(self):
        assert sample_error(0, 0.5, shot_rng(1, 0)) == 0

    def test_stream_determinism(self):
        a = sample_error(64, 0.3, shot_rng(9, 4))
        b = sample_error(64, 0.3, shot_rng(9, 4))
        c = sample_error(64, 0.3, shot_rng(9, 5))
        assert a == b
        assert a != c  # overwhelmingly likely for independent streams


class TestSyndrome:
    def test_zero_error(self):
        code = build_toric_2d(3)
        assert syndrome(code.hx, 0) == 0

    def test_single_qubit_weight_two(self):
        code = build_toric_2d(3)
        for q in range(code.n_qubits):
            assert syndrome(code.hx, 1 << q).bit_count() == 2

    def test_linearity(self):
        code = build_toric_2d(3)
        rng = random.Random(0)
        for _ in range(20):
            e1 = rng.getrandbits(code.n_qubits)
            e2 = rng.getrandbits(code.n_qubits)
            assert syndrome(code.hx, e1 ^ e2) == syndrome(code.hx, e1) ^ syndrome(
                code.hx, e2
            )

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            syndrome(BitMatrix.zeros(2, 3), 1 << 3)


class TestSimConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SimConfig("toric2d", 3, p=1.5, shots=1, seed=0)
        with pytest.raises(ValueError):
            SimConfig("toric2d", 3, p=0.1, shots=0, seed=0)
        with pytest.raises(ValueError):
            SimConfig("toric2d", 3, p=0.1, shots=1, seed=0, backends=("turbo",))


class TestRunShot:
    def test_zero_syndrome_shot(self):
        config = SimConfig("toric2d", 3, p=0.0, shots=1, seed=7)
        records = run_shot(config, 0)
        assert [r.backend for r in records] == ["offline", "online"]
        for rec in records:
            assert rec.iterations == 0
            assert rec.bit_xors == 0
            assert rec.valid
            assert rec.syndrome_weight == 0

    def test_repeatable_records(self):
        config = SimConfig("toric2d", 5, p=0.05, shots=1, seed=11)
        assert run_shot(config, 3) == run_shot(config, 3)

    def test_backend_iteration_equality(self):
        config = SimConfig("toric2d", 5, p=0.05, shots=12, seed=3)
        code = make_code("toric2d", 5)
        graph = tanner_graph(code.hx)
        for shot in range(config.shots):
            offline, online = run_shot(config, shot, code, graph)
            assert offline.iterations == online.iterations
            assert offline.syndrome_weight == online.syndrome_weight


class TestAggregate:
    def test_single_record(self):
        rec = ShotRecord(0, "offline", 10, 3, 2, True, 4)
        stats = aggregate([rec], "toric2d", "3")[("toric2d", "3", "offline")]
        assert stats.mean_bit_xors == stats.max_bit_xors == 10
        assert stats.shots == 1

    def test_mean_and_max(self):
        recs = [
            ShotRecord(0, "offline", 2, 1, 1, True, 2),
            ShotRecord(1, "offline", 4, 2, 2, True, 2),
        ]
        stats = aggregate(recs)[("", "", "offline")]
        assert stats.mean_bit_xors == 3
        assert stats.max_bit_xors == 4
        assert stats.mean_iterations == 1.5

    def test_empty(self):
        assert aggregate([]) == {}

    def test_order_independence(self):
        rng = random.Random(1)
        recs = [
            ShotRecord(i, rng.choice(["offline", "online"]), rng.randint(0, 99), 1, 1, True, 0)
            for i in range(30)
        ]
        shuffled = list(recs)
        rng.shuffle(shuffled)
        assert aggregate(recs, "c", "s") == aggregate(shuffled, "c", "s")

    def test_zero_syndrome_shots_counted(self):
        config = SimConfig("toric2d", 3, p=0.0, shots=5, seed=1, backends=("online",))
        records = run_config(config)
        stats = aggregate(records, "toric2d", "3")[("toric2d", "3", "online")]
        assert stats.shots == 5
        assert stats.mean_bit_xors == 0


class TestCsvOutput:
    def test_schema_and_order(self, tmp_path):
        config = SimConfig("toric2d", 3, p=0.05, shots=4, seed=5)
        code = make_code("toric2d", 3)
        rows = csv_rows(config, code, run_config(config, code))
        path = tmp_path / "shots.csv"
        write_shot_csv(path, rows)
        lines = path.read_text().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 1 + 2 * config.shots
        cells = [line.split(",") for line in lines[1:]]
        keys = [(c[0], c[1], c[6], int(c[5])) for c in cells]
        assert keys == sorted(keys)
        assert all(c[2] == "18" for c in cells)
