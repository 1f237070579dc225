import doctest
import itertools

import pytest

from cyclemesh import foata as foata_module
from cyclemesh import perms as perms_module
from cyclemesh.perms import (
    CycleDecomposition,
    Permutation,
    adjacent_q_cycle_count,
    all_permutations,
    cycle_decomposition,
    direct_sum,
    identity,
    left_to_right_minima,
    make_permutation,
    permutation_from_cycles,
    q_cycle_profile,
    strong_fixed_points,
    symmetry,
)

PI = Permutation.from_text("213967548")
SIGMA = Permutation.from_text("567498312")


def test_docstring_examples():
    for module in (perms_module, foata_module):
        result = doctest.testmod(module)
        assert result.attempted > 0
        assert result.failed == 0


class TestMakePermutation:
    def test_worked_example(self):
        assert make_permutation([2, 1, 3, 9, 6, 7, 5, 4, 8]) == PI

    def test_empty(self):
        assert len(make_permutation([])) == 0

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            make_permutation([1, 1])

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            make_permutation([0, 1])

    def test_too_large_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            make_permutation([1, 3])

    def test_non_integer_rejected(self):
        with pytest.raises(ValueError, match="integers"):
            make_permutation([1.0, 2])


class TestTextForm:
    def test_bare_digits_up_to_nine(self):
        assert Permutation.from_text("213967548").to_text() == "213967548"

    def test_empty_string(self):
        assert Permutation.from_text("").to_text() == ""
        assert Permutation.from_text("  ") == Permutation(())

    def test_comma_form(self):
        perm = Permutation.from_text("2,1,3,9,6,7,5,4,8")
        assert perm == PI

    def test_large_sizes_print_with_commas(self):
        perm = identity(10)
        assert perm.to_text() == "1,2,3,4,5,6,7,8,9,10"
        assert Permutation.from_text(perm.to_text()) == perm

    def test_round_trip_exhaustive_small(self):
        for n in range(5):
            for perm in all_permutations(n):
                assert Permutation.from_text(perm.to_text()) == perm

    def test_garbage_rejected(self):
        with pytest.raises(ValueError, match="bad permutation text"):
            Permutation.from_text("21x")
        with pytest.raises(ValueError, match="bad permutation text"):
            Permutation.from_text("2,,1")

    def test_ten_digit_string_is_single_digits(self):
        # Bare digit strings always mean one value per character.
        with pytest.raises(ValueError, match="duplicate"):
            Permutation.from_text("1234567891")


class TestCycleDecomposition:
    def test_worked_example(self):
        assert cycle_decomposition(PI).to_text() == "(5,6,7)(4,9,8)(3)(1,2)"

    def test_identity(self):
        assert cycle_decomposition(identity(3)).to_text() == "(3)(2)(1)"

    def test_321(self):
        assert cycle_decomposition(Permutation.from_text("321")).to_text() == "(2)(1,3)"

    def test_empty(self):
        assert cycle_decomposition(Permutation(())) == CycleDecomposition(())

    def test_canonical_form_and_round_trip_exhaustive(self):
        for n in range(9):
            for perm in all_permutations(n):
                decomposition = cycle_decomposition(perm)
                firsts = [cycle[0] for cycle in decomposition.cycles]
                assert all(cycle[0] == min(cycle) for cycle in decomposition.cycles)
                assert firsts == sorted(firsts, reverse=True)
                assert permutation_from_cycles(decomposition.cycles) == perm

    def test_from_cycles_rejects_bad_input(self):
        with pytest.raises(ValueError, match="more than one cycle"):
            permutation_from_cycles([(1, 2), (2, 3)])
        with pytest.raises(ValueError, match="cover"):
            permutation_from_cycles([(1, 3)])
        with pytest.raises(ValueError, match="empty cycle"):
            permutation_from_cycles([()])


class TestAdjacentQCycles:
    def test_worked_example_counts(self):
        assert adjacent_q_cycle_count(PI, 1) == 1
        assert adjacent_q_cycle_count(PI, 2) == 1
        # (5,6,7) is adjacent; (4,9,8) is a 3-cycle but not adjacent.
        assert adjacent_q_cycle_count(PI, 3) == 1

    def test_identity_fixed_points(self):
        assert adjacent_q_cycle_count(identity(4), 1) == 4

    def test_interval_set_with_wrong_orientation_does_not_count(self):
        # Cycle (4,6,5): the element set {4,5,6} is an interval but the cycle
        # maps 4->6, not 4->5.
        perm = make_permutation([1, 2, 3, 6, 4, 5])
        assert cycle_decomposition(perm).to_text() == "(4,6,5)(3)(2)(1)"
        assert adjacent_q_cycle_count(perm, 3) == 0
        oriented = make_permutation([1, 2, 3, 5, 6, 4])
        assert adjacent_q_cycle_count(oriented, 3) == 1

    def test_q_larger_than_n_is_zero(self):
        assert adjacent_q_cycle_count(identity(3), 7) == 0

    def test_q_zero_rejected(self):
        with pytest.raises(ValueError, match="q must be >= 1"):
            adjacent_q_cycle_count(identity(3), 0)


class TestQCycleProfile:
    def test_worked_example(self):
        profile = q_cycle_profile(PI)
        assert profile.as_dict() == {1: 1, 2: 1, 3: 1, 4: 0, 5: 0, 6: 0, 7: 0, 8: 0, 9: 0}
        assert profile[12] == 0

    def test_empty(self):
        assert q_cycle_profile(Permutation(())).as_dict() == {}

    def test_single_transposition(self):
        assert q_cycle_profile(Permutation.from_text("21")).as_dict() == {1: 0, 2: 1}

    def test_matches_per_q_counts_exhaustive(self):
        for n in range(7):
            for perm in all_permutations(n):
                profile = q_cycle_profile(perm)
                for q in range(1, n + 1):
                    assert profile[q] == adjacent_q_cycle_count(perm, q)

    def test_bad_q_rejected(self):
        with pytest.raises(ValueError):
            q_cycle_profile(identity(2))[0]


class TestLeftToRightMinima:
    def test_sigma(self):
        assert left_to_right_minima(SIGMA) == (1, 4, 7, 8)

    def test_decreasing(self):
        assert left_to_right_minima(Permutation.from_text("4321")) == (1, 2, 3, 4)

    def test_increasing(self):
        assert left_to_right_minima(identity(5)) == (1,)

    def test_empty(self):
        assert left_to_right_minima(Permutation(())) == ()


class TestStrongFixedPoints:
    def test_identity(self):
        assert strong_fixed_points(identity(3)) == (1, 2, 3)

    def test_213(self):
        assert strong_fixed_points(Permutation.from_text("213")) == (3,)

    def test_321_fixed_but_not_strong(self):
        assert strong_fixed_points(Permutation.from_text("321")) == ()

    def test_strong_fixed_points_are_fixed_points(self):
        for n in range(7):
            for perm in all_permutations(n):
                strong = strong_fixed_points(perm)
                assert all(perm(i) == i for i in strong)
                assert adjacent_q_cycle_count(perm, 1) >= len(strong)


class TestSymmetry:
    def test_examples(self):
        assert symmetry(Permutation.from_text("213"), "reverse").to_text() == "312"
        assert symmetry(Permutation.from_text("231"), "inverse").to_text() == "312"
        assert symmetry(Permutation.from_text("213"), "complement").to_text() == "231"

    @pytest.mark.parametrize("op", ["reverse", "inverse", "complement"])
    def test_involution_exhaustive(self, op):
        for n in range(6):
            for perm in all_permutations(n):
                assert symmetry(symmetry(perm, op), op) == perm

    def test_unknown_op_rejected(self):
        with pytest.raises(ValueError, match="unknown symmetry"):
            symmetry(identity(2), "rotate")


class TestDirectSum:
    def test_examples(self):
        two_one = Permutation.from_text("21")
        assert direct_sum(two_one, Permutation.from_text("1")).to_text() == "213"
        assert direct_sum(two_one, Permutation(())).to_text() == "21"
        assert direct_sum(two_one, Permutation.from_text("312")).to_text() == "21534"

    def test_sizes_add(self):
        for left, right in itertools.product(all_permutations(3), all_permutations(2)):
            total = direct_sum(left, right)
            assert len(total) == 5
            assert total.values[:3] == left.values
