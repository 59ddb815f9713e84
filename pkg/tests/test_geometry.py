import pytest

from cutchar import (
    Character,
    CharPoly,
    CohomologyTable,
    CutDecomposition,
    EquivBundleCP1,
    LineWeights,
    MalformedCut,
    cohomology,
    cut,
    mcut_cohomology,
)


class TestBundle:
    def test_parse_and_literal(self):
        b = EquivBundleCP1.parse("1:-1,2:2")
        assert b.summands == (LineWeights(1, -1), LineWeights(2, 2))
        assert b.rank == 2
        assert b.literal() == "1:-1,2:2"
        assert EquivBundleCP1.parse("-3:0").summands == (LineWeights(-3, 0),)

    def test_parse_rejects_garbage(self):
        for bad in ["", "1", "1:", ":1", "1:2,", "a:b", "1;2", "1:2:3"]:
            with pytest.raises(ValueError):
                EquivBundleCP1.parse(bad)

    def test_degree(self):
        assert LineWeights(3, -1).degree == 4
        assert LineWeights(-2, -2).degree == 0

    def test_empty_bundle_rejected(self):
        with pytest.raises(ValueError):
            EquivBundleCP1(())


class TestCohomology:
    def test_positive_degree(self):
        t = cohomology(EquivBundleCP1.parse("2:0"))
        assert t.h0 == Character.span(0, 2)
        assert t.h1 == Character()

    def test_trivial(self):
        t = cohomology(EquivBundleCP1.parse("0:0"))
        assert t.h0 == Character.monomial(0)
        assert t.h1 == Character()

    def test_negative_degree(self):
        t = cohomology(EquivBundleCP1.parse("-3:0"))
        assert t.h0 == Character()
        assert t.h1 == Character({-2: 1, -1: 1})

    def test_degree_minus_one_has_no_cohomology(self):
        for lit in ["-1:0", "0:1", "3:4", "-5:-4"]:
            t = cohomology(EquivBundleCP1.parse(lit))
            assert t.h0 == Character() and t.h1 == Character(), lit

    def test_equal_weights(self):
        t = cohomology(EquivBundleCP1.parse("2:2"))
        assert t.h0 == Character.monomial(2)
        assert t.h1 == Character()

    def test_rank_two_sums(self):
        t = cohomology(EquivBundleCP1.parse("1:-1,2:2"))
        assert t.h0 == Character.span(-1, 1) + Character.monomial(2)
        assert t.h1 == Character()

    def test_dimensions_match_degree(self):
        # dim H^0 = d + 1 and dim H^1 = 0 for d >= 0; mirrored for d <= -2
        for rp in range(-5, 6):
            for rq in range(-5, 6):
                t = cohomology(EquivBundleCP1((LineWeights(rp, rq),)))
                d = rp - rq
                if d >= 0:
                    assert t.h0.dim() == d + 1 and t.h1.dim() == 0
                elif d == -1:
                    assert t.h0.dim() == 0 and t.h1.dim() == 0
                else:
                    assert t.h0.dim() == 0 and t.h1.dim() == -d - 1

    def test_table_euler_and_index(self):
        t = CohomologyTable(Character({0: 1}), Character({2: 1}))
        assert t.euler_poly() == CharPoly([Character({0: 1}), Character({2: 1})])
        assert t.index() == Character({0: 1, 2: -1})

    def test_table_json_round_trip(self):
        t = cohomology(EquivBundleCP1.parse("-3:0"))
        obj = t.to_json_obj()
        assert obj == {"h0": {}, "h1": {"-2": 1, "-1": 1}, "n": 1}
        assert CohomologyTable.from_json_obj(obj) == t
        with pytest.raises(ValueError):
            CohomologyTable.from_json_obj({"h0": {}, "h1": {}})
        with pytest.raises(ValueError):
            CohomologyTable.from_json_obj({"h0": {}, "h1": {}, "n": 0})


class TestCut:
    def test_splits_summands(self):
        d = cut(EquivBundleCP1.parse("1:-1,2:2"))
        assert d.plus.literal() == "1:0,2:0"
        assert d.minus.literal() == "0:-1,0:2"
        assert d.red_dims == (2, 0)

    def test_mcut_equal_positive_weights(self):
        t = mcut_cohomology(cut(EquivBundleCP1.parse("2:2")))
        assert t.h0 == Character({1: 1, 2: 1})
        assert t.h1 == Character.monomial(1)
        assert t.euler_poly() == CharPoly([Character({1: 1, 2: 1}), Character.monomial(1)])
        assert t.index() == Character.monomial(2)

    def test_mcut_trivial(self):
        t = mcut_cohomology(cut(EquivBundleCP1.parse("0:0")))
        assert t.h0 == Character.monomial(0)
        assert t.h1 == Character()

    def test_mcut_no_invariant_section(self):
        # neither side sees weight 0, so the node fiber feeds h1
        t = mcut_cohomology(cut(EquivBundleCP1.parse("-1:1")))
        assert t.h0 == Character()
        assert t.h1 == Character.monomial(0)

    def test_mcut_additive_over_summands(self):
        lits = ["2:2", "-1:1", "3:-2"]
        total = mcut_cohomology(cut(EquivBundleCP1.parse(",".join(lits))))
        h0 = Character()
        h1 = Character()
        for lit in lits:
            t = mcut_cohomology(cut(EquivBundleCP1.parse(lit)))
            h0 += t.h0
            h1 += t.h1
        assert (total.h0, total.h1) == (h0, h1)

    def test_mcut_rejects_mismatched_ranks(self):
        d = cut(EquivBundleCP1.parse("1:1"))
        bad = CutDecomposition(d.plus, EquivBundleCP1.parse("0:1,0:2"), (1, 0))
        with pytest.raises(MalformedCut):
            mcut_cohomology(bad)

    def test_mcut_rejects_nonzero_node_weight(self):
        plus = EquivBundleCP1.parse("1:1")  # node weight 1, not 0
        minus = EquivBundleCP1.parse("0:1")
        with pytest.raises(MalformedCut):
            mcut_cohomology(CutDecomposition(plus, minus, (1, 0)))
        with pytest.raises(MalformedCut):
            mcut_cohomology(
                CutDecomposition(EquivBundleCP1.parse("1:0"), EquivBundleCP1.parse("1:1"), (1, 0))
            )

    def test_mcut_rejects_bad_red_dims(self):
        d = cut(EquivBundleCP1.parse("1:1"))
        with pytest.raises(MalformedCut):
            mcut_cohomology(CutDecomposition(d.plus, d.minus, (2, 0)))
        with pytest.raises(MalformedCut):
            mcut_cohomology(CutDecomposition(d.plus, d.minus, (1, 1)))
