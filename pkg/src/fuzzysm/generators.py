"""Seeded random generators for formulas, interpretations and programs.

Everything is driven by random.Random(seed), so a (seed, parameters) pair
always reproduces the same object.  Constants are drawn from the lattice
passed in, which keeps generated material inside the finite semantics the
checks run on.
"""
from __future__ import annotations

import random
from typing import Sequence

from .algebra import Lattice, OPERATORS, OpFamily
from .semantics import BoolInterpretation, Interpretation
from .syntax import Atom, Bin, Const, Formula, Neg, Rule, StrongNeg

ALL_OPERATORS = tuple(OPERATORS)
LATTICE_SAFE_OPERATORS = tuple(
    t for t, op in OPERATORS.items() if op.lattice_closed)
CLASSICAL_OPERATORS = ("not_s", "&m", "|m", "->s")


def _partition_pool(pool: Sequence[str]) -> dict[OpFamily, list[str]]:
    by_family: dict[OpFamily, list[str]] = {fam: [] for fam in OpFamily}
    for token in pool:
        by_family[OPERATORS[token].family].append(token)
    return by_family


def gen_formula(
    seed: int,
    signature: Sequence[str],
    max_depth: int = 3,
    operator_pool: Sequence[str] | None = None,
    allow_strongneg: bool = False,
    lattice: Lattice = Lattice(4),
) -> Formula:
    """One random formula; same arguments, same formula."""
    rng = random.Random(seed)
    pool = _partition_pool(operator_pool or LATTICE_SAFE_OPERATORS)
    binary = (
        pool[OpFamily.CONJUNCTION]
        + pool[OpFamily.DISJUNCTION]
        + pool[OpFamily.IMPLICATION]
    )
    negations = pool[OpFamily.NEGATION]
    points = list(lattice.points())
    signature = list(signature)

    def leaf() -> Formula:
        if signature and rng.random() < 0.75:
            name = rng.choice(signature)
            if allow_strongneg and rng.random() < 0.25:
                return StrongNeg(name)
            return Atom(name)
        return Const(rng.choice(points))

    def build(depth: int) -> Formula:
        if depth <= 0:
            return leaf()
        roll = rng.random()
        if roll < 0.25:
            return leaf()
        if roll < 0.45 and negations:
            return Neg(rng.choice(negations), build(depth - 1))
        if binary:
            op = rng.choice(binary)
            return Bin(op, build(depth - 1), build(depth - 1))
        return leaf()

    return build(max_depth)


def gen_interpretation(
    seed: int, signature: Sequence[str], lattice: Lattice = Lattice(4)
) -> Interpretation:
    rng = random.Random(seed)
    points = list(lattice.points())
    return Interpretation({a: rng.choice(points) for a in signature})


def gen_lower_interpretation(
    seed: int,
    i: Interpretation,
    minimized: Sequence[str],
    lattice: Lattice = Lattice(4),
) -> Interpretation:
    """A random J with J <= i on the minimized atoms and J = i elsewhere."""
    rng = random.Random(seed)
    mset = set(minimized)
    values = {}
    for a, v in i.items():
        values[a] = rng.choice(lattice.points_up_to(v)) if a in mset else v
    return Interpretation(values)


def gen_bool_interpretation(seed: int, signature: Sequence[str]) -> BoolInterpretation:
    rng = random.Random(seed)
    sig = tuple(signature)
    true = frozenset(a for a in sig if rng.random() < 0.5)
    return BoolInterpretation(sig, true)


def gen_program(
    seed: int,
    signature: Sequence[str],
    max_rules: int = 4,
    conj: str = "&m",
    lattice: Lattice = Lattice(4),
) -> list[Rule]:
    """A random normal program: atom heads, atom or constant body literals,
    'not' on a random subset of the body."""
    rng = random.Random(seed)
    sig = list(signature)
    points = list(lattice.points())
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        head = Atom(rng.choice(sig))
        pos, neg = [], []
        for _ in range(rng.randint(0, 2)):
            lit = Const(rng.choice(points)) if rng.random() < 0.2 else Atom(rng.choice(sig))
            (neg if rng.random() < 0.4 else pos).append(lit)
        rules.append(Rule(head, tuple(pos), tuple(neg), conj))
    return rules
