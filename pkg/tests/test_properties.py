import json

from hypothesis import given, settings
from hypothesis import strategies as st

from cutchar import (
    Character,
    CharPoly,
    EquivBundleCP1,
    LineWeights,
    NotDivisible,
    cech_cohomology_nodal,
    cech_cohomology_p1,
    cohomology,
    cut,
    localization_index,
    mcut_cohomology,
    morse_quotient,
    run_check,
    sweep,
)

weights = st.integers(-20, 20)
mults = st.integers(-10, 10)
characters = st.dictionaries(weights, mults, max_size=6).map(Character)
charpolys = st.lists(characters, max_size=3).map(CharPoly)
nonneg_characters = st.dictionaries(weights, st.integers(0, 10), max_size=6).map(Character)
nonneg_charpolys = st.lists(nonneg_characters, max_size=3).map(CharPoly)

line_weights = st.builds(LineWeights, st.integers(-10, 10), st.integers(-10, 10))
bundles = st.lists(line_weights, min_size=1, max_size=4).map(
    lambda ls: EquivBundleCP1(tuple(ls))
)

ONE_PLUS_T = CharPoly([1, 1])


class TestRingAxioms:
    @given(characters, characters)
    def test_add_commutes(self, a, b):
        assert a + b == b + a

    @given(characters, characters, characters)
    def test_add_associates(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(characters)
    def test_add_neutral_and_inverse(self, a):
        assert a + Character() == a
        assert a + (-a) == Character()

    @given(characters, characters)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(characters, characters, characters)
    def test_mul_associates(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(characters, characters, characters)
    def test_mul_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(characters)
    def test_mul_neutral(self, a):
        assert a * Character.monomial(0) == a

    @given(characters, characters)
    def test_dim_is_additive_and_multiplicative(self, a, b):
        assert (a + b).dim() == a.dim() + b.dim()
        assert (a * b).dim() == a.dim() * b.dim()


class TestOrder:
    @given(characters, nonneg_characters, nonneg_characters)
    def test_transitive_by_construction(self, base, d1, d2):
        a, b, c = base + d1 + d2, base + d1, base
        assert a >= b and b >= c and a >= c

    @given(characters, characters)
    def test_ge_iff_difference_nonneg(self, a, b):
        assert (a >= b) == (a - b).is_nonneg()

    @given(characters)
    def test_reflexive(self, a):
        assert a >= a and a <= a

    @given(characters, characters)
    def test_antisymmetric(self, a, b):
        if a >= b and b >= a:
            assert a == b

    def test_not_total(self):
        a = Character({0: 1, 1: 1})
        b = Character({0: 2})
        assert not (a >= b) and not (b >= a)


class TestCharPolyLaws:
    @given(charpolys, charpolys)
    def test_eval_at_minus_one_is_additive(self, p, q):
        assert (p + q).at_minus_one() == p.at_minus_one() + q.at_minus_one()

    @given(charpolys, charpolys)
    def test_eval_at_minus_one_is_multiplicative(self, p, q):
        assert (p * q).at_minus_one() == p.at_minus_one() * q.at_minus_one()

    @given(charpolys, charpolys)
    def test_morse_quotient_round_trip(self, q, r):
        assert morse_quotient(ONE_PLUS_T * q + r, r) == q

    @given(charpolys, charpolys)
    def test_morse_quotient_exists_iff_divisible(self, p, r):
        value = (p - r).at_minus_one()
        try:
            q = morse_quotient(p, r)
        except NotDivisible as exc:
            assert value
            assert exc.residual == value
        else:
            assert not value
            assert ONE_PLUS_T * q + r == p

    @given(charpolys)
    def test_json_round_trip(self, p):
        assert CharPoly.from_json_obj(json.loads(json.dumps(p.to_json_obj()))) == p

    @given(characters)
    def test_character_json_round_trip(self, a):
        assert Character.from_json_obj(json.loads(json.dumps(a.to_json_obj()))) == a


class TestGeometryLaws:
    @given(bundles, bundles)
    def test_cohomology_additive_over_sums(self, a, b):
        both = EquivBundleCP1(a.summands + b.summands)
        ta, tb, t = cohomology(a), cohomology(b), cohomology(both)
        assert t.h0 == ta.h0 + tb.h0
        assert t.h1 == ta.h1 + tb.h1

    @given(line_weights)
    def test_index_dimension_is_degree_plus_one(self, s):
        t = cohomology(EquivBundleCP1((s,)))
        assert t.index().dim() == s.degree + 1

    @given(line_weights)
    def test_two_case_exclusivity(self, s):
        t = cohomology(EquivBundleCP1((s,)))
        assert not (t.h0 and t.h1)
        assert bool(t.h0) == (s.r_q <= s.r_p)
        assert bool(t.h1) == (s.r_q >= s.r_p + 2)

    def test_weight_range_duality_on_grid(self):
        # h1 of (r_P, r_Q) equals h0 of (r_Q - 1, r_P + 1)
        for rp in range(-10, 11):
            for rq in range(-10, 11):
                h1 = cohomology(EquivBundleCP1((LineWeights(rp, rq),))).h1
                h0 = cohomology(EquivBundleCP1((LineWeights(rq - 1, rp + 1),))).h0
                assert h1 == h0, (rp, rq)

    @given(bundles)
    def test_cut_preserves_rank_and_degree_split(self, b):
        d = cut(b)
        assert d.plus.rank == d.minus.rank == b.rank
        for s, p, m in zip(b.summands, d.plus.summands, d.minus.summands):
            assert p.degree + m.degree == s.degree
            assert (p.r_p, m.r_q) == (s.r_p, s.r_q)

    @given(bundles)
    def test_mcut_index_matches_bundle_index(self, b):
        t = cohomology(b)
        tc = mcut_cohomology(cut(b))
        assert tc.index() == t.index()


class TestOracleAgreement:
    @settings(max_examples=60)
    @given(line_weights)
    def test_cech_matches_closed_form(self, s):
        got = cech_cohomology_p1(s)
        want = cohomology(EquivBundleCP1((s,)))
        assert (got.h0, got.h1) == (want.h0, want.h1)

    @settings(max_examples=60)
    @given(line_weights)
    def test_localization_matches_index(self, s):
        assert localization_index(s) == cohomology(EquivBundleCP1((s,))).index()

    @settings(max_examples=40)
    @given(bundles)
    def test_nodal_matches_mcut(self, b):
        d = cut(b)
        got = cech_cohomology_nodal(d)
        want = mcut_cohomology(d)
        assert (got.h0, got.h1) == (want.h0, want.h1)


class TestChecksAlwaysPass:
    @settings(max_examples=40)
    @given(bundles)
    def test_every_check_passes(self, b):
        report = sweep([b])
        assert report.passed

    @settings(max_examples=60)
    @given(line_weights)
    def test_morse_witnesses_nonneg_and_consistent(self, s):
        b = EquivBundleCP1((s,))
        q_cut = run_check("mcut", b).witness
        q_morse = run_check("morse", b).witness
        q_mv = run_check("mv", b).witness
        assert q_cut.is_nonneg() and q_morse.is_nonneg() and q_mv.is_nonneg()
        # the two-step comparison composes: morse = mv + mcut
        assert q_morse == q_mv + q_cut

    @settings(max_examples=40)
    @given(bundles)
    def test_witnesses_reconstruct_their_identities(self, b):
        d = cut(b)
        euler_m = cohomology(b).euler_poly()
        euler_cut = mcut_cohomology(d).euler_poly()
        sides = (
            cohomology(d.plus).euler_poly()
            + cohomology(d.minus).euler_poly()
            + CharPoly([0, b.rank])
        )
        expected = {"mcut": (euler_cut, euler_m), "morse": (sides, euler_m), "mv": (sides, euler_cut)}
        for cid, (lhs, rhs) in expected.items():
            q = run_check(cid, b).witness
            assert ONE_PLUS_T * q + rhs == lhs, cid
