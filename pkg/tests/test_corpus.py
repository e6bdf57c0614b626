"""Pinned expected behavior for every shipped corpus formula.

Each .fz file in the corpus directory must appear in COVERED below, so a
new corpus file without a fixture fails the sweep test.  The expected
values were derived by hand (small formulas) or by the generator script
scripts/build_trust_corpus.py, which verifies its own output before
writing it.
"""
import json
from fractions import Fraction as F

import pytest

from fuzzysm import (
    Interpretation,
    Lattice,
    check_stable,
    enumerate_equilibrium,
    enumerate_stable,
    evaluate,
    find_witness,
    format_valuation,
    fuzzy_reduct,
    nneg,
    parse_formula,
    parse_interpretation,
    print_formula,
    Sampled,
    signature_of,
)
from fuzzysm import semantics

D4 = Lattice(4)
D10 = Lattice(10)

COVERED = {
    "choice_loop.fz",
    "complementary_pair.fz",
    "double_negation.fz",
    "excluded_middle.fz",
    "inertia.fz",
    "inertia_override.fz",
    "negation_loop.fz",
    "negation_rule.fz",
    "tautology_identity.fz",
    "threshold_default.fz",
    "threshold_guarded.fz",
    "trust_luk.fz",
    "trust_product.fz",
    "wrapper_guard.fz",
}


def load(corpus, name):
    return parse_formula((corpus / name).read_text())


def test_every_corpus_file_is_covered(corpus):
    on_disk = {p.name for p in corpus.glob("*.fz")}
    assert on_disk == COVERED


def test_every_corpus_file_parses_and_prints_stably(corpus):
    for name in sorted(COVERED):
        f = load(corpus, name)
        assert parse_formula(print_formula(f)) == f, name


class TestSmallFormulas:
    def test_negation_rule_unique_model(self, corpus):
        models = enumerate_stable(load(corpus, "negation_rule.fz"), lattice=D10)
        assert models == [Interpretation({"q": F(0), "p": F(1)})]

    def test_negation_loop_antidiagonal(self, corpus):
        models = enumerate_stable(load(corpus, "negation_loop.fz"), lattice=D10)
        assert len(models) == 11
        assert all(m["p"] + m["q"] == 1 for m in models)
        assert sorted(m["p"] for m in models) == [F(k, 10) for k in range(11)]

    def test_tautology_identity_minimizes_to_zero(self, corpus):
        models = enumerate_stable(load(corpus, "tautology_identity.fz"),
                                  lattice=D10)
        assert models == [Interpretation({"p": F(0)})]

    def test_double_negation_keeps_every_point(self, corpus):
        models = enumerate_stable(load(corpus, "double_negation.fz"),
                                  lattice=D10)
        assert [m["p"] for m in models] == [F(k, 10) for k in range(11)]

    def test_excluded_middle_keeps_every_point(self, corpus):
        models = enumerate_stable(load(corpus, "excluded_middle.fz"),
                                  lattice=D10)
        assert [m["p"] for m in models] == [F(k, 10) for k in range(11)]


class TestWrapperGuard:
    def test_min_wrapper_keeps_value_one(self, corpus):
        f = load(corpus, "wrapper_guard.fz")
        i = parse_interpretation("p=0.6")
        assert evaluate(f, i) == 1
        assert evaluate(fuzzy_reduct(f, i, simplified=False), i) == 1

    def test_lukasiewicz_wrapper_would_drop_to_a_fifth(self, corpus):
        f = load(corpus, "wrapper_guard.fz")
        i = parse_interpretation("p=0.6")
        other = semantics._reduct(f, i, True, "&l")
        assert evaluate(other, i) == F(1, 5)


class TestThresholds:
    I = parse_interpretation("p=0, q=0.6")

    def test_relaxed_threshold_accepts(self, corpus):
        f = load(corpus, "threshold_default.fz")
        v = check_stable(f, self.I, threshold=F(3, 5), lattice=D10)
        assert v.status == "stable"

    def test_guarded_form_is_fully_stable(self, corpus):
        f = load(corpus, "threshold_guarded.fz")
        v = check_stable(f, self.I, lattice=D10)
        assert v.status == "stable"


class TestInertia:
    MIN = ("p1", "np1")
    I1 = parse_interpretation("p0=0.3, np0=0.7, p1=0.3, np1=0.7")
    I2 = parse_interpretation("p0=0.3, np0=0.7, p1=0.5, np1=0.5")

    def test_default_keeps_previous_value(self, corpus):
        f = load(corpus, "inertia.fz")
        assert check_stable(f, self.I1, self.MIN, lattice=D10).status == "stable"

    def test_deviating_value_disputed(self, corpus):
        f = load(corpus, "inertia.fz")
        v = check_stable(f, self.I2, self.MIN, lattice=D10)
        assert v.status == "unstable"
        assert v.witness == parse_interpretation(
            "p0=0.3, np0=0.7, p1=0.3, np1=0.5")

    def test_override_restores_stability(self, corpus):
        f = load(corpus, "inertia_override.fz")
        assert check_stable(f, self.I2, self.MIN, lattice=D10).status == "stable"


class TestComplementaryPair:
    def test_unique_stable_model_after_nneg(self, corpus):
        f = load(corpus, "complementary_pair.fz")
        r = nneg(f)
        models = enumerate_stable(r.formula, minimized=("p", "np"),
                                  lattice=D10)
        assert models == [Interpretation({"p": F(1, 5), "np": F(3, 10)})]

    def test_unique_equilibrium_interval(self, corpus):
        f = load(corpus, "complementary_pair.fz")
        models = enumerate_equilibrium(f, D10)
        assert [format_valuation(m) for m in models] == [
            "h:p=[0.2,0.7]; t:p=[0.2,0.7]"]


class TestChoiceLoop:
    def test_exactly_five_models(self, corpus):
        models = enumerate_stable(load(corpus, "choice_loop.fz"), lattice=D4)
        assert [(m["p"], m["q"]) for m in models] == [
            (F(0), F(1)),
            (F(1, 4), F(3, 4)),
            (F(1, 2), F(1, 2)),
            (F(3, 4), F(1, 4)),
            (F(1), F(0)),
        ]


@pytest.fixture(scope="module")
def product(corpus):
    f = load(corpus, "trust_product.fz")
    i = parse_interpretation((corpus / "trust_product_model.json").read_text())
    return f, i


@pytest.fixture(scope="module")
def luk(corpus):
    f = load(corpus, "trust_luk.fz")
    i = parse_interpretation((corpus / "trust_luk_model.json").read_text())
    return f, i


class TestTrust:
    """Ground trust networks; the JSON files hold the intended models."""

    def test_product_headline_value(self, product):
        _, i = product
        assert i["trust_alice_carol_0"] == F(14, 25)  # exactly 0.56

    def test_product_model_satisfies_formula_and_reduct(self, product):
        f, i = product
        assert len(i) == 42
        assert evaluate(f, i) == 1
        assert evaluate(fuzzy_reduct(f, i), i) == 1

    def test_luk_headline_value(self, luk):
        _, i = luk
        assert i["trust_alice_carol_0"] == F(1, 2)

    def test_luk_paths(self, luk):
        _, i = luk
        assert [i[f"trust_alice_bob_{s}"] for s in range(4)] == [
            F(4, 5), F(7, 10), F(7, 10), F(1, 5)]
        assert all(i[f"trust_alice_carol_{s}"] == F(1, 2) for s in range(4))
        assert all(i[f"trust_bob_carol_{s}"] == F(7, 10) for s in range(4))

    def test_luk_model_satisfies_formula_and_reduct(self, luk):
        f, i = luk
        assert len(i) == 90
        assert evaluate(f, i) == 1
        assert evaluate(fuzzy_reduct(f, i), i) == 1

    def test_short_sampled_search_finds_no_witness(self, product):
        # the full 10^5-sample run lives in the acceptance suite
        f, i = product
        found = find_witness(f, i, signature_of(f),
                             strategy=Sampled(samples=2000, seed=0))
        assert found is None

    def test_json_fixtures_are_exact_strings(self, corpus):
        data = json.loads((corpus / "trust_product_model.json").read_text())
        assert data["trust_alice_carol_0"] == "14/25"
        assert all(isinstance(v, str) for v in data.values())
