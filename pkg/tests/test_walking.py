"""The three inversion walks, the digraph restatement, and invert itself."""

import pytest

from sweepmap import (
    FamilySpec,
    PathError,
    StepSequence,
    SWWord,
    Tableau,
    WalkError,
    build_rank_digraph,
    enumerate_family,
    extend_plus,
    fill,
    invert,
    is_minus_admissible,
    rank_tableau,
    ranks,
    sigma_to_preimage,
    sweep,
    to_plus,
    walk,
    walk_graph,
    walk_minus,
    walk_plus,
)
from conftest import family_grid, skeleton_of

PREIMAGE = (2, -1, -1, 4, -1, 5, -1, -1, -1, -1, 3, -1, -1, -1, -1, -1, -1, -1)
IMAGE = (4, 2, -1, -1, -1, -1, -1, 5, -1, 3, -1, -1, -1, -1, -1, -1, -1, -1)
RUN_COLUMNS = ((1, 3, 5, 7, 9), (2, 4, 6), (8, 11, 13, 15, 17, 18), (10, 12, 14, 16))
RUN_SIGMA = (2, 6, 4, 1, 11, 8, 18, 17, 15, 13, 10, 16, 14, 12, 9, 7, 5, 3)
RUN_SIGMA_PLUS = (1, 10, 17, 15, 13, 11, 8, 19, 18, 16, 14, 12, 9, 6, 4, 2, 7, 5, 3)


def run_tableau():
    return Tableau(RUN_COLUMNS)


class TestWalk:
    def test_running_example(self):
        t = run_tableau()
        assert walk(t, rank_tableau(t)).sigma == RUN_SIGMA

    def test_smallest(self):
        t = Tableau(((1, 2),))
        assert walk(t, rank_tableau(t)).sigma == (1, 2)

    def test_two_columns(self):
        t = Tableau(((1, 3), (2, 4)))
        assert walk(t, rank_tableau(t)).sigma == (2, 4, 1, 3)

    def test_single_wide_column(self):
        t = Tableau(((1, 2, 3),))
        assert walk(t, rank_tableau(t)).sigma == (1, 3, 2)

    def test_shape_mismatch(self):
        t = Tableau(((1, 3), (2, 4)))
        other = rank_tableau(Tableau(((1, 2, 3),)))
        with pytest.raises(WalkError, match="shape"):
            walk(t, other)

    def test_final_write_is_smallest_rank_one(self):
        # once every other entry is written the walk closes at rank 1
        for family in family_grid(3, 3):
            if family.kind != "k":
                continue
            for path in enumerate_family(family, permute_k=True).paths:
                t = fill(SWWord.from_steps(sweep(path)))
                r = rank_tableau(t)
                sigma = walk(t, r).sigma
                smallest_rank_one = min(
                    v for v in range(1, t.size + 1) if r.rank_of(v) == 1
                )
                assert sigma[-1] == smallest_rank_one


class TestWalkPlus:
    def test_tiny(self):
        tp = extend_plus(Tableau(((1, 2),)))
        assert tp.columns == ((1, 2, 3),)
        assert walk_plus(tp).sigma == (1, 3, 2)

    def test_running_example(self):
        assert walk_plus(extend_plus(run_tableau())).sigma == RUN_SIGMA_PLUS

    def test_column_removal_consistency(self):
        # dropping a whole column and relabeling contiguously drops exactly
        # that column's indices from the walk order
        from sweepmap import TableauPlus

        tp = extend_plus(run_tableau())
        removed = set(tp.columns[1])
        kept_cols = (tp.columns[0], *tp.columns[2:])
        kept = sorted(v for col in kept_cols for v in col)
        relabel = {v: i for i, v in enumerate(kept, start=1)}
        smaller = tuple(tuple(relabel[v] for v in col) for col in kept_cols)
        small_tp = TableauPlus(smaller, (tp.k[0], *tp.k[2:]))
        back = tuple(kept[i - 1] for i in walk_plus(small_tp).sigma)
        assert back == tuple(v for v in RUN_SIGMA_PLUS if v not in removed)

    def test_stops_exactly_once_per_entry(self):
        for family in family_grid(3, 3):
            if family.kind != "k":
                continue
            for path in enumerate_family(family, permute_k=True).paths:
                t = fill(SWWord.from_steps(sweep(path)))
                sigma = walk_plus(extend_plus(t)).sigma
                assert sorted(sigma) == list(range(1, t.size + 2))


class TestWalkMinus:
    def test_two_columns(self):
        assert walk_minus(Tableau(((1, 3, 5), (2, 4)))).sigma == (1, 4, 2, 3)

    def test_rejects_inadmissible(self):
        with pytest.raises(WalkError, match="strict top-row bounds"):
            walk_minus(Tableau(((1, 2), (3, 4))))

    def test_one_entry_stays_unwritten(self):
        for family in family_grid(3, 3):
            if family.kind != "k":
                continue
            for path in enumerate_family(family, permute_k=True).paths:
                t = fill(SWWord.from_steps(sweep(path)))
                if not is_minus_admissible(t):
                    continue
                sigma = walk_minus(t).sigma
                assert len(set(sigma)) == len(sigma) == t.size - 1


class TestWalkGraph:
    def test_matches_plain_walk(self):
        t = run_tableau()
        r = rank_tableau(t)
        g = build_rank_digraph(t, r)
        assert walk_graph(g).sigma == walk(t, r).sigma

    def test_balanced_on_fills(self):
        for family in family_grid(3, 3):
            if family.kind != "k":
                continue
            for path in enumerate_family(family, permute_k=True).paths:
                t = fill(SWWord.from_steps(sweep(path)))
                r = rank_tableau(t)
                g = build_rank_digraph(t, r)
                assert g.is_balanced
                assert walk_graph(g).sigma == walk(t, r).sigma

    def test_edges(self):
        t = Tableau(((1, 3), (2, 4)))
        g = build_rank_digraph(t, rank_tableau(t))
        # tops 1, 2 at rank 0 rise to 1; entries 3, 4 at rank 1 fall to 0
        assert g.edge_target == (1, 1, 0, 0)
        assert g.indices_by_rank == ((1, 2), (3, 4))
        assert g.top_indices == frozenset({1, 2})


class TestSigmaToPreimage:
    def test_running_example(self):
        t = run_tableau()
        sigma = walk(t, rank_tableau(t))
        got = sigma_to_preimage(sigma, t, FamilySpec.vector((4, 2, 5, 3)))
        assert got.steps == PREIMAGE

    def test_variant_must_fit_family(self):
        t = run_tableau()
        sigma = walk(t, rank_tableau(t))
        with pytest.raises(WalkError, match="does not fit"):
            sigma_to_preimage(sigma, t, FamilySpec.plus((4, 2, 5, 3)))

    def test_k_must_match(self):
        t = run_tableau()
        sigma = walk(t, rank_tableau(t))
        with pytest.raises(WalkError, match="rise vector"):
            sigma_to_preimage(sigma, t, FamilySpec.vector((1, 1, 1, 1)))

    def test_rational_has_no_walk(self):
        t = run_tableau()
        sigma = walk(t, rank_tableau(t))
        with pytest.raises(PathError, match="rational"):
            sigma_to_preimage(sigma, t, FamilySpec.rational(4, 4))


class TestInvert:
    def test_running_example(self):
        got = invert(StepSequence(IMAGE), FamilySpec.vector((2, 4, 5, 3)))
        assert got.steps == PREIMAGE

    def test_fixed_points(self):
        assert invert(StepSequence((1, -1)), FamilySpec.vector((1,))).steps == (1, -1)
        assert invert(StepSequence((2, -1, -1)), FamilySpec.vector((2,))).steps == (2, -1, -1)

    def test_two_unit_columns(self):
        fam = FamilySpec.vector((1, 1))
        assert invert(StepSequence((1, -1, 1, -1)), fam).steps == (1, 1, -1, -1)
        assert invert(StepSequence((1, 1, -1, -1)), fam).steps == (1, -1, 1, -1)

    def test_plus_golden(self):
        img_plus = to_plus(StepSequence(IMAGE), (4, 2, 5, 3))
        got = invert(img_plus, FamilySpec.plus((4, 2, 5, 3)))
        assert got.steps == (
            17, 13, -4, -4, -4, -4, 21, -4, -4, -4, -4, -4, -4, -4, -4, 9, -4, -4, -4
        )
        assert sweep(got) == img_plus

    def test_minus_golden(self):
        got = invert(StepSequence((3, 1, -2, -2)), FamilySpec.minus((2, 1)))
        assert got.steps == (3, -2, 1, -2)

    def test_rational_refused(self):
        with pytest.raises(PathError, match="rational"):
            invert(StepSequence((2, -1, -1)), FamilySpec.rational(2, 1))

    def test_non_member_refused(self):
        with pytest.raises(PathError, match="not a member"):
            invert(StepSequence((1, -1)), FamilySpec.vector((2,)))

    @pytest.mark.parametrize("family", family_grid(3, 3), ids=str)
    def test_round_trip_everywhere(self, family):
        for path in enumerate_family(family, permute_k=True).paths:
            img = sweep(path)
            assert invert(img, family) == path

    def test_minus_membership_mirrors_single_zero(self):
        # a plain path lowers into the minus family iff its fill after
        # sweeping is minus-admissible
        fam = FamilySpec.vector((2, 1))
        for path in enumerate_family(fam, permute_k=True).paths:
            t = fill(SWWord.from_steps(path))
            zeros = sum(1 for r in ranks(path) if r == 0)
            assert is_minus_admissible(t) == (zeros == 1)


class TestWrittenOrderLaw:
    def test_walk_ranks_spell_the_preimage_levels(self):
        # the j-th written index has the rank of the preimage's j-th step
        for family in family_grid(3, 3):
            if family.kind != "k":
                continue
            for path in enumerate_family(family, permute_k=True).paths:
                img = sweep(path)
                t = fill(SWWord.from_steps(img))
                r = rank_tableau(t)
                sigma = walk(t, r)
                pre = ranks(path)
                assert all(r.rank_of(v) == pre[j] for j, v in enumerate(sigma))
