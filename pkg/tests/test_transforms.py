"""Signature rewrites: complement atoms, Boolean embedding, choice."""
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fuzzysm import (
    BoolInterpretation,
    Interpretation,
    Lattice,
    OpSelection,
    StrongNegationError,
    boolean_embed,
    bool_satisfies,
    choice,
    complement_names,
    crisp_interp,
    defuz,
    evaluate,
    nneg,
    parse_formula,
    parse_interpretation,
    print_formula,
)


class TestComplementNames:
    def test_plain(self):
        assert complement_names(("p", "q")) == {"p": "np", "q": "nq"}

    def test_collision_suffixes_deterministically(self):
        # "np" and "np_2" are already atoms, so p's complement moves on
        # to the first free suffix.
        names = complement_names(("p", "np", "np_2"))
        assert names == {"p": "np_3", "np": "nnp", "np_2": "nnp_2"}

    def test_complements_never_collide_with_each_other(self):
        sig = ("a", "na", "nna", "b", "nb")
        names = complement_names(sig)
        produced = list(names.values())
        assert len(set(produced)) == len(produced)
        assert not set(produced) & set(sig)


class TestNneg:
    def test_complementary_pair_shape(self):
        r = nneg(parse_formula("(0.2 ->r p) &m (0.3 ->r ~p)"))
        assert print_formula(r.formula) == (
            "(0.2 ->r p) &m (0.3 ->r np) &m not_s (p &l np)")
        assert r.complements == {"p": "np"}
        assert r.signature == ("p", "np")

    def test_guard_per_original_atom(self):
        r = nneg(parse_formula("~q ->r p"))
        assert print_formula(r.formula) == (
            "(nq ->r p) &m not_s (q &l nq) &m not_s (p &l np)")
        # originals in first-occurrence order, complements appended
        assert r.signature == ("q", "p", "nq", "np")

    def test_result_unpacks(self):
        formula, complements, signature = nneg(parse_formula("~p"))
        assert print_formula(formula) == "np &m not_s (p &l np)"
        assert complements == {"p": "np"}
        assert signature == ("p", "np")

    def test_guard_value_tracks_the_sum(self):
        r = nneg(parse_formula("~p"))
        ok = parse_interpretation("p=0.2, np=0.3")
        over = parse_interpretation("p=0.6, np=0.7")
        assert evaluate(r.formula, ok) == F(3, 10)
        # p + np = 1.3 makes the sum guard drop to 0.7
        assert evaluate(r.formula, over) == F(7, 10)

    @given(st.integers(0, 10), st.integers(0, 10))
    def test_guard_is_one_exactly_when_sum_at_most_one(self, a, b):
        r = nneg(parse_formula("~p"))
        i = Interpretation({"p": F(a, 10), "np": F(b, 10)})
        guard = r.formula.right  # the conjoined sum constraint
        assert (evaluate(guard, i) == 1) == (F(a, 10) + F(b, 10) <= 1)


class TestOpSelection:
    def test_defaults(self):
        s = OpSelection()
        assert (s.neg, s.conj, s.disj, s.impl) == ("not_s", "&m", "|m", "->s")

    def test_wrong_family_rejected(self):
        with pytest.raises(ValueError, match="not a negation"):
            OpSelection(neg="&m")
        with pytest.raises(ValueError, match="not a conjunction"):
            OpSelection(conj="|l")
        with pytest.raises(ValueError, match="not a disjunction"):
            OpSelection(disj="->r")
        with pytest.raises(ValueError, match="not an? implication"):
            OpSelection(impl="not_s")


class TestBooleanEmbed:
    def test_redraws_operators(self):
        f = parse_formula("(p &l q) |p not_s (q ->l p)")
        g = boolean_embed(f, OpSelection())
        assert print_formula(g) == "p &m q |m not_s (q ->s p)"

    def test_keeps_boolean_constants(self):
        g = boolean_embed(parse_formula("0 |m (p &m 1)"))
        # conjunction binds tighter, so the parens are not needed back
        assert print_formula(g) == "0 |m p &m 1"
        assert parse_formula(print_formula(g)) == g

    def test_rejects_fractional_constant(self):
        with pytest.raises(ValueError, match="3/10 is not Boolean"):
            boolean_embed(parse_formula("p &m 0.3"))

    def test_rejects_strong_negation(self):
        with pytest.raises(StrongNegationError):
            boolean_embed(parse_formula("~p"))

    @given(st.booleans(), st.booleans())
    def test_embedding_matches_two_valued_evaluation(self, pv, qv):
        f = parse_formula("(p |m q) &m not_s (p &m q)")  # exclusive or
        x = BoolInterpretation(
            ("p", "q"),
            frozenset(n for n, v in (("p", pv), ("q", qv)) if v))
        want = bool_satisfies(f, x)
        got = evaluate(boolean_embed(f), crisp_interp(x))
        assert got == (1 if want else 0)


class TestCrispRoundTrip:
    def test_crisp_interp_values(self):
        x = BoolInterpretation(("p", "q"), frozenset({"q"}))
        assert crisp_interp(x) == Interpretation({"p": F(0), "q": F(1)})

    def test_defuz_keeps_only_ones(self):
        i = parse_interpretation("p=1, q=0.5, r=0")
        x = defuz(i)
        assert x.signature == ("p", "q", "r")
        assert x.true_atoms == frozenset({"p"})

    def test_round_trip_on_crisp_input(self):
        x = BoolInterpretation(("a", "b", "c"), frozenset({"a", "c"}))
        assert defuz(crisp_interp(x)) == x


class TestChoice:
    def test_shape(self):
        f = choice(("p", "q"))
        assert print_formula(f) == "(p |l not_s p) &m (q |l not_s q)"

    def test_single_atom_and_conj_token(self):
        assert print_formula(choice(["p"], "&l")) == "p |l not_s p"
        f = choice(("a", "b"), "&l")
        assert print_formula(f) == "(a |l not_s a) &l (b |l not_s b)"

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="at least one atom"):
            choice(())

    def test_non_conjunction_token_rejected(self):
        with pytest.raises(ValueError, match="not a conjunction"):
            choice(("p",), "|m")

    @given(st.integers(0, 4))
    def test_identically_one(self, k):
        # excluded middle under the Lukasiewicz join is a tautology,
        # whatever the atom's degree
        i = Interpretation({"p": F(k, 4)})
        assert evaluate(choice(("p",)), i) == 1

    def test_frees_atoms_from_minimization(self):
        from fuzzysm import enumerate_stable
        f = parse_formula("p ->r p")
        assert enumerate_stable(f, lattice=Lattice(2)) == [
            Interpretation({"p": F(0)})]
        from fuzzysm.syntax import Bin
        freed = Bin("&m", f, choice(("p",)))
        models = enumerate_stable(freed, lattice=Lattice(2))
        assert [m["p"] for m in models] == [F(0), F(1, 2), F(1)]
