"""Tests for the toric-code and random instance generators."""

import numpy as np
import pytest

from pauliham import (
    PauliWord,
    TorusLattice,
    decide,
    format_instance,
    groundspace_dim,
    kernel_decide,
    random_commuting,
    toric_code,
    toric_code_flipped,
    validate_commuting,
    verify_certificate,
)
from pauliham.oracle import closure_contains_minus_identity


class TestTorusLattice:
    @pytest.mark.parametrize("L", [2, 3, 5])
    def test_every_vertex_touches_four_edges(self, L):
        lat = TorusLattice(L)
        for r in range(L):
            for c in range(L):
                assert len(set(lat.star_edges(r, c))) == 4
                assert len(set(lat.plaquette_edges(r, c))) == 4

    def test_edge_numbering_is_documented_order(self):
        lat = TorusLattice(2)
        assert lat.horizontal(0, 0) == 0
        assert lat.horizontal(1, 1) == 3
        assert lat.vertical(0, 0) == 4
        assert lat.vertical(1, 1) == 7

    @pytest.mark.parametrize("L", [2, 3])
    def test_star_plaquette_overlap_even(self, L):
        lat = TorusLattice(L)
        stars = [set(lat.star_edges(r, c)) for r in range(L) for c in range(L)]
        plaqs = [set(lat.plaquette_edges(r, c)) for r in range(L) for c in range(L)]
        for s in stars:
            for p in plaqs:
                assert len(s & p) in (0, 2)

    def test_each_edge_in_exactly_two_stars(self):
        lat = TorusLattice(3)
        counts = np.zeros(lat.n_qubits, int)
        for r in range(3):
            for c in range(3):
                for e in lat.star_edges(r, c):
                    counts[e] += 1
        assert (counts == 2).all()


class TestToricCode:
    def test_l2_shape(self):
        inst = toric_code(2)
        assert inst.n == 8 and inst.r == 8
        for w in inst.generators:
            weight = int((w.x_bits() | w.z_bits()).sum())
            assert weight == 4
        assert all(w.phase == 0 for w in inst.generators)

    @pytest.mark.parametrize("L", [2, 3])
    def test_commuting(self, L):
        assert validate_commuting(toric_code(L)) == []

    def test_l2_decides_yes_with_dimension_four(self):
        inst = toric_code(2)
        assert decide(inst).answer == "YES"
        assert groundspace_dim(inst) == 4  # 2^(8-6)

    def test_small_l_rejected(self):
        with pytest.raises(ValueError):
            toric_code(1)

    def test_star_sector_product_is_identity(self):
        from pauliham import multiply

        inst = toric_code(3)
        acc = PauliWord.identity(inst.n)
        for w in inst.generators[:9]:  # the stars
            acc = multiply(acc, w)
        assert acc == PauliWord.identity(inst.n)


class TestToricFlipped:
    def test_flipped_star_certificate_is_star_sector(self):
        inst = toric_code_flipped(2, 0)
        v = decide(inst)
        assert v.answer == "NO"
        assert v.certificate == (0, 1, 2, 3)
        assert verify_certificate(inst, v.certificate)

    def test_flipped_plaquette(self):
        inst = toric_code_flipped(2, 5)
        v = decide(inst)
        assert v.answer == "NO"
        assert set(v.certificate) <= {4, 5, 6, 7}
        assert verify_certificate(inst, v.certificate)

    @pytest.mark.parametrize("L", [2, 3])
    def test_every_flip_index_is_no(self, L):
        for which in range(2 * L * L):
            inst = toric_code_flipped(L, which)
            v = decide(inst)
            assert v.answer == "NO"
            assert verify_certificate(inst, v.certificate)

    def test_double_flip_still_no(self):
        base = toric_code(2)
        ws = list(base.generators)
        for idx in (0, 5):  # one star, one plaquette
            ws[idx] = PauliWord(ws[idx].n, ws[idx].phase ^ 1, ws[idx].x, ws[idx].z)
        from pauliham import Instance

        inst = Instance(base.n, ws)
        assert decide(inst).answer == "NO"
        assert groundspace_dim(inst) == 0

    def test_bad_index(self):
        with pytest.raises(ValueError):
            toric_code_flipped(2, 8)


class TestRandomCommuting:
    def test_deterministic_bytes(self):
        a = random_commuting(6, 7, 31, force="yes")
        b = random_commuting(6, 7, 31, force="yes")
        assert format_instance(a) == format_instance(b)
        assert a.label == b.label

    def test_different_seeds_differ(self):
        a = random_commuting(6, 7, 31)
        b = random_commuting(6, 7, 32)
        assert format_instance(a) != format_instance(b)

    def test_always_commuting(self, rng):
        for i in range(25):
            inst = random_commuting(
                int(rng.integers(1, 12)), int(rng.integers(1, 15)), 100 + i
            )
            assert validate_commuting(inst) == []

    def test_force_yes_respected(self, rng):
        for i in range(20):
            n = int(rng.integers(1, 9))
            inst = random_commuting(n, int(rng.integers(1, 13)), 200 + i, force="yes")
            assert decide(inst).answer == "YES"
            assert groundspace_dim(inst) > 0

    def test_force_no_respected(self, rng):
        for i in range(20):
            n = int(rng.integers(1, 9))
            inst = random_commuting(n, int(rng.integers(1, 13)), 300 + i, force="no")
            assert decide(inst).answer == "NO"
            assert closure_contains_minus_identity(inst)

    def test_force_respected_beyond_oracle_scale(self):
        yes = random_commuting(40, 40, 5, force="yes")
        no = random_commuting(40, 40, 5, force="no")
        assert kernel_decide(yes).answer == "YES"
        assert kernel_decide(no).answer == "NO"

    def test_label_records_construction(self):
        inst = random_commuting(5, 6, 7, force="yes")
        assert "seed=7" in inst.label
        assert "rng=numpy-PCG64" in inst.label
        assert "gates=" in inst.label

    def test_single_qubit_edge_cases(self):
        assert decide(random_commuting(1, 1, 0, force="yes")).answer == "YES"
        assert decide(random_commuting(1, 1, 0, force="no")).answer == "NO"
        assert decide(random_commuting(1, 3, 1, force="no")).answer == "NO"

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            random_commuting(0, 3, 1)
        with pytest.raises(ValueError):
            random_commuting(3, 0, 1)
        with pytest.raises(ValueError):
            random_commuting(3, 3, 1, force="maybe")
