#!/usr/bin/env python3
"""Regenerate the ground trust-network corpus.

Three people (alice, bob, carol) rate each other with complementary
trust/distrust degrees per time step.  The world rules say:

  T1. everyone fully trusts themselves;
  T2. trust and distrust sum to at most 1 (Lukasiewicz check);
  T3. trust and distrust sum to at least 1, behind a doubled negation
      so the requirement does not create support;
  T4. at step 0, trust composes along a middleman (product t-norm in
      one variant, Lukasiewicz in the other);
  T5. at step 0, distrust fills whatever trust leaves open;
  T6/T7. by default both degrees carry over to the next step;
  T8. a conflict raises next-step distrust by its degree.

Variant "product": steps 0..1, composition by product, two trust facts.
Variant "luk": steps 0..3, composition by the Lukasiewicz t-norm, the
same trust facts plus conflicts alice-bob of 0.1 at step 0 and 0.5 at
step 2.

The script derives the expected stable-model values, checks that the
interpretation satisfies both the formula and its reduct exactly, and
writes the .fz/.json pairs into the package corpus.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from fuzzysm import (
    Atom,
    Bin,
    Const,
    Interpretation,
    Neg,
    conjoin,
    evaluate,
    fuzzy_reduct,
    interpretation_to_json,
    parse_formula,
    print_formula,
)

PEOPLE = ("alice", "bob", "carol")


def tr(x: str, y: str, t: int) -> Atom:
    return Atom(f"trust_{x}_{y}_{t}")


def dt(x: str, y: str, t: int) -> Atom:
    return Atom(f"distrust_{x}_{y}_{t}")


def cf(x: str, y: str, t: int) -> Atom:
    return Atom(f"conflict_{x}_{y}_{t}")


def world_rules(steps: range, compose: str) -> list:
    pairs = [(x, y) for x in PEOPLE for y in PEOPLE if x != y]
    parts: list = []
    # T1: reflexivity.
    for x in PEOPLE:
        for t in steps:
            parts.append(tr(x, x, t))
    # T2/T3: complementary degrees, for every ordered pair and step.
    for x, y in pairs:
        for t in steps:
            parts.append(Neg("not_s", Bin("&l", tr(x, y, t), dt(x, y, t))))
            parts.append(Neg("not_s", Neg("not_s",
                         Bin("|l", tr(x, y, t), dt(x, y, t)))))
    # T4: step-0 composition over all ordered triples of distinct people.
    for x in PEOPLE:
        for y in PEOPLE:
            for z in PEOPLE:
                if len({x, y, z}) == 3:
                    parts.append(Bin("->r",
                                     Bin(compose, tr(x, y, 0), tr(y, z, 0)),
                                     tr(x, z, 0)))
    # T5: initial distrust closure.
    for x, y in pairs:
        parts.append(Bin("->r", Neg("not_s", tr(x, y, 0)), dt(x, y, 0)))
    # T6/T7: inertia for both degrees.
    for x, y in pairs:
        for t in steps[:-1]:
            parts.append(Bin("->r",
                             Bin("&m", tr(x, y, t),
                                 Neg("not_s", Neg("not_s", tr(x, y, t + 1)))),
                             tr(x, y, t + 1)))
            parts.append(Bin("->r",
                             Bin("&m", dt(x, y, t),
                                 Neg("not_s", Neg("not_s", dt(x, y, t + 1)))),
                             dt(x, y, t + 1)))
    # T8: conflicts feed next-step distrust.
    for x, y in pairs:
        for t in steps[:-1]:
            parts.append(Bin("->r",
                             Bin("|l", cf(x, y, t), dt(x, y, t)),
                             dt(x, y, t + 1)))
    return parts


def facts(conflicts: dict[tuple[str, str, int], Fraction]) -> list:
    parts = [
        Bin("->r", Const(Fraction(8, 10)), tr("alice", "bob", 0)),
        Bin("->r", Const(Fraction(7, 10)), tr("bob", "carol", 0)),
    ]
    for (x, y, t), degree in conflicts.items():
        parts.append(Bin("->r", Const(degree), cf(x, y, t)))
    return parts


def expected_model(steps: range, compose: str,
                   conflicts: dict[tuple[str, str, int], Fraction]) -> dict:
    """Walk the rules forward to the values the stable model must take."""
    trust: dict[tuple[str, str, int], Fraction] = {}
    conflict: dict[tuple[str, str, int], Fraction] = {}
    for x in PEOPLE:
        for y in PEOPLE:
            for t in steps:
                trust[(x, y, t)] = Fraction(1) if x == y else Fraction(0)
    trust[("alice", "bob", 0)] = Fraction(8, 10)
    trust[("bob", "carol", 0)] = Fraction(7, 10)
    for x in PEOPLE:
        for y in PEOPLE:
            for z in PEOPLE:
                if len({x, y, z}) == 3:
                    a, b = trust[(x, y, 0)], trust[(y, z, 0)]
                    composed = a * b if compose == "&p" else max(a + b - 1, 0)
                    trust[(x, z, 0)] = max(trust[(x, z, 0)], composed)
    for x, y, t in conflict_keys(steps):
        conflict[(x, y, t)] = conflicts.get((x, y, t), Fraction(0))
    # Distrust mirrors trust at step 0; later steps follow inertia with
    # conflicts pushing distrust up and the sum cap pushing trust down.
    distrust = {(x, y, 0): 1 - trust[(x, y, 0)]
                for x in PEOPLE for y in PEOPLE}
    for t in steps[:-1]:
        for x in PEOPLE:
            for y in PEOPLE:
                if x == y:
                    distrust[(x, y, t + 1)] = Fraction(0)
                    continue
                bump = min(conflict[(x, y, t)] + distrust[(x, y, t)],
                           Fraction(1))
                distrust[(x, y, t + 1)] = max(distrust[(x, y, t)], bump)
                trust[(x, y, t + 1)] = min(trust[(x, y, t)],
                                           1 - distrust[(x, y, t + 1)])
    values = {}
    for x in PEOPLE:
        for y in PEOPLE:
            for t in steps:
                values[tr(x, y, t).name] = trust[(x, y, t)]
                if x != y:
                    values[dt(x, y, t).name] = distrust[(x, y, t)]
                else:
                    values[dt(x, y, t).name] = Fraction(0)
    for x, y, t in conflict_keys(steps):
        values[cf(x, y, t).name] = conflict[(x, y, t)]
    return values


def conflict_keys(steps: range):
    for x in PEOPLE:
        for y in PEOPLE:
            if x != y:
                for t in steps[:-1]:
                    yield (x, y, t)


def build_variant(name: str, steps: range, compose: str,
                  conflicts: dict, out_dir: Path) -> None:
    parts = world_rules(steps, compose) + facts(conflicts)
    formula = conjoin("&m", parts)
    i = Interpretation(expected_model(steps, compose, conflicts))
    value = evaluate(formula, i)
    if value != 1:
        failing = [print_formula(p) for p in parts if evaluate(p, i) != 1]
        raise SystemExit(f"{name}: expected model does not satisfy the "
                         f"formula (value {value}); failing parts: "
                         f"{failing[:5]}")
    reduct_value = evaluate(fuzzy_reduct(formula, i), i)
    if reduct_value != 1:
        raise SystemExit(f"{name}: expected model does not satisfy its own "
                         f"reduct (value {reduct_value})")
    lines = [f"({print_formula(p)})" for p in parts]
    text = lines[0] + "\n" + "\n".join(f"&m {line}" for line in lines[1:])
    if parse_formula(text) != formula:
        raise SystemExit(f"{name}: the written text does not parse back to "
                         "the built formula")
    header = (
        f"# Ground trust network: {', '.join(PEOPLE)}; steps "
        f"{steps.start}..{steps.stop - 1}; step-0 composition by "
        f"'{compose}'.\n"
        f"# Regenerate with scripts/build_trust_corpus.py.\n")
    (out_dir / f"{name}.fz").write_text(header + text + "\n")
    model = interpretation_to_json(i)
    (out_dir / f"{name}_model.json").write_text(
        json.dumps(model, indent=2, sort_keys=True) + "\n")
    print(f"{name}: {len(parts)} conjuncts, {len(model)} atoms, "
          f"model verified")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=None,
                        help="output directory (default: the installed "
                             "package corpus)")
    args = parser.parse_args()
    if args.out is not None:
        out_dir = Path(args.out)
    else:
        out_dir = Path(__file__).resolve().parent.parent / "src" / "fuzzysm" / "corpus"
    out_dir.mkdir(parents=True, exist_ok=True)
    build_variant("trust_product", range(2), "&p", {}, out_dir)
    build_variant(
        "trust_luk", range(4), "&l",
        {("alice", "bob", 0): Fraction(1, 10),
         ("alice", "bob", 2): Fraction(5, 10)},
        out_dir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
