"""Two-world interval semantics and equilibrium checking.

A valuation assigns to each atom, in each of the worlds 'here' (h) and
'there' (t), a closed subinterval of [0, 1], with the t-interval contained
in the h-interval.  Formulas evaluate to intervals through clauses that
thread the two worlds together; a model makes the h-lower bound of the
formula exactly 1.  An equilibrium model is a model that is minimal in
the h-ordering and gives both worlds the same interval on every atom.

This module is deliberately independent of the stable-model machinery in
stable.py: the two are developed from different definitions and used to
cross-validate each other in the test suite.  Only the shared formula AST
and operator registry are common ground.

The interval clauses are implemented exactly as stated; constructing an
empty interval (lower above upper) is a hard error, not something to be
repaired.  For valuations that respect the containment invariant the
clauses never produce one.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import (
    ONE,
    Lattice,
    OpFamily,
    ResourceLimitError,
    check_truth,
    format_truth,
    get_operator,
    parse_truth,
)
from .syntax import Atom, Bin, Const, Formula, Neg, StrongNeg, signature_of

WORLDS = ("h", "t")


@dataclass(frozen=True, slots=True)
class Interval:
    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", check_truth(self.lower))
        object.__setattr__(self, "upper", check_truth(self.upper))
        if self.lower > self.upper:
            raise ValueError(
                f"empty interval: lower {self.lower} above upper {self.upper}")

    def contains(self, other: "Interval") -> bool:
        return self.lower <= other.lower and other.upper <= self.upper

    def __str__(self) -> str:
        lo = format_truth(self.lower, decimal=True)
        hi = format_truth(self.upper, decimal=True)
        return f"[{lo},{hi}]"


class Valuation(Mapping[tuple[str, str], Interval]):
    """Immutable map (world, atom) -> Interval with t contained in h."""

    __slots__ = ("_data", "_atoms", "_hash")

    def __init__(self, intervals: Mapping[tuple[str, str], Interval]):
        data: dict[tuple[str, str], Interval] = {}
        order: dict[str, None] = {}
        for (world, atom), interval in intervals.items():
            if world not in WORLDS:
                raise ValueError(f"unknown world {world!r}; use 'h' or 't'")
            if not isinstance(interval, Interval):
                interval = Interval(*interval)
            data[(world, atom)] = interval
            order.setdefault(atom, None)
        for atom in order:
            if ("h", atom) not in data or ("t", atom) not in data:
                raise ValueError(f"atom {atom!r} needs intervals in both worlds")
            if not data[("h", atom)].contains(data[("t", atom)]):
                raise ValueError(
                    f"atom {atom!r}: the t-interval must lie inside the h-interval")
        self._data = data
        self._atoms = tuple(order)
        self._hash: int | None = None

    def __getitem__(self, key: tuple[str, str]) -> Interval:
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def atoms(self) -> tuple[str, ...]:
        return self._atoms

    def at(self, world: str, atom: str) -> Interval:
        try:
            return self._data[(world, atom)]
        except KeyError:
            raise KeyError(f"no interval for atom {atom!r} in world {world!r}") from None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Valuation):
            return self._data == other._data
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def replaced(self, atom: str, world: str, interval: Interval) -> "Valuation":
        data = dict(self._data)
        data[(world, atom)] = interval
        return Valuation(data)

    def __repr__(self) -> str:
        return f"Valuation({format_valuation(self)!r})"


def _pair(v: Valuation, f: Formula) -> tuple[Interval, Interval]:
    """Intervals of f at (h, t)."""
    if isinstance(f, Atom):
        return v.at("h", f.name), v.at("t", f.name)
    if isinstance(f, Const):
        point = Interval(f.value, f.value)
        return point, point
    if isinstance(f, StrongNeg):
        out = []
        for world in WORLDS:
            iv = v.at(world, f.name)
            out.append(Interval(1 - iv.upper, 1 - iv.lower))
        return out[0], out[1]
    if isinstance(f, Neg):
        if f.op != "not_s":
            raise ValueError(
                "the two-world interval semantics is defined for the "
                "standard negator only")
        bh, bt = _pair(v, f.body)
        h = Interval(1 - bt.lower, 1 - bh.lower)
        t = Interval(1 - bt.lower, 1 - bt.lower)
        return h, t
    assert isinstance(f, Bin)
    op = get_operator(f.op)
    lh, lt = _pair(v, f.left)
    rh, rt = _pair(v, f.right)
    fn = op.fn
    if op.family in (OpFamily.CONJUNCTION, OpFamily.DISJUNCTION):
        h = Interval(fn(lh.lower, rh.lower), fn(lh.upper, rh.upper))
        t = Interval(fn(lt.lower, rt.lower), fn(lt.upper, rt.upper))
        return h, t
    # implication
    h = Interval(
        min(fn(lh.lower, rh.lower), fn(lt.lower, rt.lower)),
        fn(lh.lower, rh.upper))
    t = Interval(fn(lt.lower, rt.lower), fn(lt.lower, rt.upper))
    return h, t


def n5_evaluate(v: Valuation, world: str, f: Formula) -> Interval:
    if world not in WORLDS:
        raise ValueError(f"unknown world {world!r}; use 'h' or 't'")
    h, t = _pair(v, f)
    return h if world == "h" else t


def is_n5_model(v: Valuation, f: Formula) -> bool:
    """The h-lower bound of f reaches 1."""
    return _pair(v, f)[0].lower == ONE


def preceq(candidate: Valuation, v: Valuation) -> bool:
    """candidate keeps every t-interval and widens (or keeps) h-intervals."""
    if candidate.atoms() != v.atoms():
        raise ValueError("valuations cover different signatures")
    for a in v.atoms():
        if candidate.at("t", a) != v.at("t", a):
            return False
        if not candidate.at("h", a).contains(v.at("h", a)):
            return False
    return True


def prec(candidate: Valuation, v: Valuation) -> bool:
    return preceq(candidate, v) and candidate != v


@dataclass(frozen=True)
class EquilibriumVerdict:
    status: str  # "not_a_model" | "not_h_minimal" | "worlds_differ" | "equilibrium"
    denominator: int
    counter: Valuation | None = None
    note: str = ""


def _check_on_lattice(v: Valuation, lattice: Lattice) -> None:
    for (world, atom), iv in v.items():
        for endpoint in (iv.lower, iv.upper):
            if endpoint not in lattice:
                raise ValueError(
                    f"endpoint {format_truth(endpoint)} of atom {atom!r} "
                    f"in world {world!r} is outside the 1/{lattice.denominator} "
                    "lattice")


def _h_candidates(v: Valuation, lattice: Lattice) -> list[list[Interval]]:
    """Per atom: the lattice intervals that contain the current h-interval,
    ordered lower ascending then upper ascending."""
    pools = []
    for a in v.atoms():
        h = v.at("h", a)
        lows = [x for x in lattice.points() if x <= h.lower]
        highs = [x for x in lattice.points() if x >= h.upper]
        pools.append([Interval(lo, hi) for lo in lows for hi in highs])
    return pools


def find_h_violation(
    v: Valuation, f: Formula, lattice: Lattice, cap: int = 10 ** 7
) -> Valuation | None:
    """First strictly h-wider lattice valuation that is still a model."""
    _check_on_lattice(v, lattice)
    pools = _h_candidates(v, lattice)
    total = 1
    for p in pools:
        total *= len(p)
    if total > cap:
        raise ResourceLimitError(
            f"{total} candidate valuations exceed the cap of {cap}")
    base = tuple(v.at("h", a) for a in v.atoms())
    for combo in itertools.product(*pools):
        if combo == base:
            continue
        data = dict(v)
        for a, iv in zip(v.atoms(), combo):
            data[("h", a)] = iv
        candidate = Valuation(data)
        if is_n5_model(candidate, f):
            return candidate
    return None


def is_equilibrium(
    v: Valuation, f: Formula, lattice: Lattice = Lattice(10), cap: int = 10 ** 7
) -> EquilibriumVerdict:
    """Model, then h-minimality over the lattice, then world agreement."""
    d = lattice.denominator
    if not is_n5_model(v, f):
        return EquilibriumVerdict("not_a_model", d,
                                  note="the h-lower bound does not reach 1")
    counter = find_h_violation(v, f, lattice, cap)
    if counter is not None:
        return EquilibriumVerdict("not_h_minimal", d, counter=counter,
                                  note="a strictly h-wider model exists")
    for a in v.atoms():
        if v.at("h", a) != v.at("t", a):
            return EquilibriumVerdict(
                "worlds_differ", d,
                note=f"atom {a!r} has different h- and t-intervals")
    return EquilibriumVerdict("equilibrium", d,
                              note=f"exact over the 1/{d} lattice")


def enumerate_equilibrium(
    f: Formula,
    lattice: Lattice = Lattice(10),
    signature: Sequence[str] | None = None,
    cap: int = 10 ** 7,
) -> list[Valuation]:
    """All equilibrium models over the lattice.

    Only world-agreeing valuations can qualify, so the scan runs over one
    interval per atom, shared by both worlds.
    """
    sig = tuple(signature) if signature is not None else signature_of(f)
    points = list(lattice.points())
    intervals = [Interval(lo, hi) for lo in points for hi in points if lo <= hi]
    total = len(intervals) ** len(sig)
    if total > cap:
        raise ResourceLimitError(
            f"{total} candidate valuations exceed the cap of {cap}")
    out = []
    for combo in itertools.product(intervals, repeat=len(sig)):
        data = {}
        for a, iv in zip(sig, combo):
            data[("h", a)] = iv
            data[("t", a)] = iv
        v = Valuation(data)
        if not is_n5_model(v, f):
            continue
        if find_h_violation(v, f, lattice, cap) is None:
            out.append(v)
    return out


# Bridges to the point-valued world -----------------------------------


def valuation_of(i: Mapping[str, Fraction]) -> Valuation:
    """[i(a), 1] in both worlds."""
    data = {}
    for a, value in i.items():
        iv = Interval(check_truth(value), ONE)
        data[("h", a)] = iv
        data[("t", a)] = iv
    return Valuation(data)


def paired_valuation(
    j: Mapping[str, Fraction], i: Mapping[str, Fraction]
) -> Valuation:
    """h reads from j, t from i; needs j <= i pointwise."""
    if set(j) != set(i):
        raise ValueError("the two interpretations cover different atoms")
    data = {}
    for a in j:
        data[("h", a)] = Interval(check_truth(j[a]), ONE)
        data[("t", a)] = Interval(check_truth(i[a]), ONE)
    return Valuation(data)


def interpretation_of(v: Valuation) -> dict[str, Fraction]:
    """The h-lower bounds, atom by atom."""
    return {a: v.at("h", a).lower for a in v.atoms()}


def nneg_valuation(v: Valuation, complements: Mapping[str, str]) -> Valuation:
    """Valuation for the strong-negation-free signature: originals keep
    their lower bounds, complement atoms take the flipped upper bounds,
    all upper bounds become 1."""
    data = {}
    for a in v.atoms():
        na = complements[a]
        for world in WORLDS:
            iv = v.at(world, a)
            data[(world, a)] = Interval(iv.lower, ONE)
            data[(world, na)] = Interval(1 - iv.upper, ONE)
    return Valuation(data)


# Text and JSON forms --------------------------------------------------


def parse_valuation(text: str) -> Valuation:
    """Read 'h:p=[0.2,0.7]; t:p=[0.2,0.7]' or the JSON object form."""
    s = text.strip()
    if s.startswith("{"):
        return valuation_from_json(json.loads(s))
    data: dict[tuple[str, str], Interval] = {}
    for chunk in s.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            world_part, rest = chunk.split(":", 1)
            name, interval_part = rest.split("=", 1)
            interval_part = interval_part.strip()
            if not (interval_part.startswith("[") and interval_part.endswith("]")):
                raise ValueError
            lo_text, hi_text = interval_part[1:-1].split(",")
        except ValueError:
            raise ValueError(
                f"expected 'world:atom=[lo,hi]', got {chunk!r}") from None
        key = (world_part.strip(), name.strip())
        if key in data:
            raise ValueError(f"duplicate interval for {key}")
        data[key] = Interval(parse_truth(lo_text), parse_truth(hi_text))
    return Valuation(data)


def format_valuation(v: Valuation, decimal: bool = True) -> str:
    parts = []
    for world in WORLDS:
        for a in v.atoms():
            iv = v.at(world, a)
            lo = format_truth(iv.lower, decimal=decimal)
            hi = format_truth(iv.upper, decimal=decimal)
            parts.append(f"{world}:{a}=[{lo},{hi}]")
    return "; ".join(parts)


def valuation_to_json(v: Valuation) -> dict:
    out: dict[str, dict[str, list[str]]] = {"h": {}, "t": {}}
    for world in WORLDS:
        for a in v.atoms():
            iv = v.at(world, a)
            out[world][a] = [format_truth(iv.lower), format_truth(iv.upper)]
    return out


def valuation_from_json(data: dict) -> Valuation:
    intervals: dict[tuple[str, str], Interval] = {}
    for world, entries in data.items():
        for atom, bounds in entries.items():
            lo, hi = bounds
            lo = parse_truth(lo) if isinstance(lo, str) else check_truth(lo)
            hi = parse_truth(hi) if isinstance(hi, str) else check_truth(hi)
            intervals[(world, atom)] = Interval(lo, hi)
    return Valuation(intervals)


def equilibrium_verdict_to_json(verdict: EquilibriumVerdict) -> dict:
    return {
        "status": verdict.status,
        "denominator": verdict.denominator,
        "counter": None if verdict.counter is None else valuation_to_json(verdict.counter),
        "note": verdict.note,
    }
