"""Integral basis and structure constants of the invariant subring of a
signed n-fold tensor power.

A basis element is indexed by a strictly increasing tuple of odd
generators, a multiset of even generators, and a unit padding count.  Its
realization is (1/r!) * sum over sigma of the sorted elementary tensor
acted on by sigma; the coefficient of the sorted arrangement is the
product of the even multiplicities' factorials, and all coefficients are
integers.  Products of basis elements expand integrally in the basis
again; a non-integer coefficient here is a hard error, never a valid
outcome.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .rings import Ring
from .tensors import TensorElement, signed_arrangements, tensor_multiply


class NotSymmetricError(ValueError):
    pass


class InternalInconsistencyError(RuntimeError):
    """The expansion hit a tensor no symmetric element can contain; this
    signals a sign bug upstream, not bad input."""


class TheoremViolationError(RuntimeError):
    """A structure constant came out non-integral."""


@dataclass(frozen=True)
class BasisIndex:
    """Combinatorial index of a basis element.

    odd: strictly increasing generator positions of odd degree.
    even: ((position, multiplicity), ...) with positions strictly increasing.
    pad: number of unit slots; the tensor arity is len(odd) + sum(mults) + pad.
    """
    odd: tuple[int, ...]
    even: tuple[tuple[int, int], ...]
    pad: int

    def __post_init__(self):
        if list(self.odd) != sorted(set(self.odd)):
            raise ValueError(f"odd positions must strictly increase: {self.odd}")
        positions = [p for p, _ in self.even]
        if positions != sorted(set(positions)):
            raise ValueError(f"even positions must strictly increase: {self.even}")
        if any(m < 1 for _, m in self.even) or self.pad < 0:
            raise ValueError("multiplicities must be >= 1 and pad >= 0")

    @property
    def arity(self) -> int:
        return len(self.odd) + sum(m for _, m in self.even) + self.pad

    @property
    def is_unit(self) -> bool:
        return not self.odd and not self.even

    @property
    def leading_multiplier(self) -> int:
        """Coefficient of the sorted arrangement in the realization."""
        out = 1
        for _, m in self.even:
            out *= factorial(m)
        return out

    def degree(self, ring: Ring) -> int:
        return (sum(ring.slot_degree(p) for p in self.odd)
                + sum(m * ring.slot_degree(p) for p, m in self.even))

    def sorted_slots(self, ring: Ring) -> tuple[int, ...]:
        slots = list(self.odd)
        for p, m in self.even:
            slots.extend([p] * m)
        slots.extend([ring.unit_slot] * self.pad)
        return tuple(slots)

    def label(self, ring: Ring) -> str:
        if self.is_unit:
            return "chi[1]"
        parts = [ring.slot_name(p) for p in self.odd]
        parts += [ring.slot_name(p) + (f"^{m}" if m > 1 else "")
                  for p, m in self.even]
        return "chi[" + ",".join(parts) + "]"


def index_from_sorted_slots(ring: Ring, slots: tuple[int, ...]) -> BasisIndex:
    """Read the basis index off an ascending slot tuple."""
    if tuple(sorted(slots)) != slots:
        raise InternalInconsistencyError(f"slot tuple not sorted: {slots}")
    odd = []
    even: list[tuple[int, int]] = []
    pad = 0
    for slot, group in itertools.groupby(slots):
        count = sum(1 for _ in group)
        if slot == ring.unit_slot:
            pad = count
        elif ring.slot_degree(slot) % 2:
            if count > 1:
                raise InternalInconsistencyError(
                    f"odd generator repeated in {slots}")
            odd.append(slot)
        else:
            even.append((slot, count))
    return BasisIndex(tuple(odd), tuple(even), pad)


def enumerate_basis(ring: Ring, n: int, degree: int | None = None) -> list[BasisIndex]:
    """All basis indices for the n-th power (unit excluded), sorted by
    (degree, odd part, even part, pad); optionally filtered by degree."""
    if n < 2:
        raise ValueError("tensor power must have n >= 2")
    odd_positions = ring.odd_positions
    even_positions = ring.even_positions
    out = []
    for k in range(0, min(n, len(odd_positions)) + 1):
        for odd in itertools.combinations(odd_positions, k):
            budget = n - k
            for even in _even_multisets(even_positions, budget):
                if k + len(even) == 0:
                    continue
                idx = BasisIndex(odd, even, budget - sum(m for _, m in even))
                if degree is None or idx.degree(ring) == degree:
                    out.append(idx)
    out.sort(key=lambda i: (i.degree(ring), i.odd, i.even, i.pad))
    return out


def _even_multisets(positions, budget):
    """Multisets over `positions` of total multiplicity <= budget."""
    if not positions:
        yield ()
        return
    head, *tail = positions
    for m in range(budget + 1):
        for rest in _even_multisets(tail, budget - m):
            yield ((head, m),) + rest if m else rest


def realize(ring: Ring, idx: BasisIndex, n: int | None = None) -> TensorElement:
    """The basis element as a tensor: every distinct arrangement of the
    sorted slot multiset with its Koszul sign, times the product of the
    even multiplicities' factorials."""
    if n is not None and idx.arity != n:
        raise ValueError(f"index arity {idx.arity} != n = {n}")
    lead = idx.leading_multiplier
    slots = idx.sorted_slots(ring)
    terms = {arr: Fraction(lead * sign)
             for arr, sign in signed_arrangements(ring, slots)}
    return TensorElement(ring, idx.arity, terms)


@dataclass(frozen=True)
class DualElement:
    """The homology pairing partner: the sorted dual chain tensor with
    coefficient 1 over the product of the even multiplicities' factorials."""
    index: BasisIndex
    slots: tuple[int, ...]
    coefficient: Fraction


def dual_element(ring: Ring, idx: BasisIndex) -> DualElement:
    return DualElement(idx, idx.sorted_slots(ring),
                       Fraction(1, idx.leading_multiplier))


def pair(ring: Ring, gamma: BasisIndex, dual: DualElement) -> int:
    """Kronecker pairing of the realized basis element against a dual
    element; slotwise duality, so only the exactly matching arrangement
    contributes.  Always lands in {0, +1, -1}."""
    if gamma.arity != len(dual.slots):
        raise ValueError("pairing across different tensor arities")
    value = realize(ring, gamma).terms.get(dual.slots, Fraction(0)) * dual.coefficient
    if value not in (-1, 0, 1):
        raise InternalInconsistencyError(f"pairing value {value} outside 0, +-1")
    return int(value)


def expand(t: TensorElement) -> dict[BasisIndex, Fraction]:
    """Coordinates of an invariant tensor in the basis.

    Greedy elimination: the least elementary tensor of the remainder must
    be the sorted arrangement of some index, whose coefficient there is
    the known leading multiplier.  A non-invariant input is rejected; a
    remainder that cannot be consumed signals an internal sign bug.
    """
    if not t.is_symmetric():
        raise NotSymmetricError("expand requires an invariant tensor")
    ring = t.ring
    work = dict(t.terms)
    out: dict[BasisIndex, Fraction] = {}
    while work:
        least = min(work)
        idx = index_from_sorted_slots(ring, least)
        coeff = work[least] / idx.leading_multiplier
        out[idx] = coeff
        for arr, sign in signed_arrangements(ring, least):
            v = work.get(arr, Fraction(0)) - coeff * idx.leading_multiplier * sign
            if v:
                work[arr] = v
            else:
                work.pop(arr, None)
        if least in work:
            raise InternalInconsistencyError("leading term failed to cancel")
    return out


def expand_via_pairing(t: TensorElement, candidates) -> dict[BasisIndex, Fraction]:
    """Cross-check expansion: read coefficients off dual pairings.

    With the slotwise pairing convention, the coefficient of an index is
    the value of t against its dual element.
    """
    ring = t.ring
    out = {}
    for idx in candidates:
        dual = dual_element(ring, idx)
        c = t.terms.get(dual.slots, Fraction(0)) * dual.coefficient
        if c:
            out[idx] = c
    return out


def chi(ring: Ring, n: int, odds, evens) -> TensorElement:
    """Span element with the odd factors first, then the even factors.

    The factors may be arbitrary ring elements; for basis generators with
    strictly increasing odd positions this reproduces realize().
    """
    from .tensors import sym_element
    return sym_element(ring, n, list(odds) + list(evens))


class StructureTable:
    """Integer multiplication table over the basis, truncated by degree."""

    def __init__(self, ring: Ring, n: int, max_degree: int):
        self.ring = ring
        self.n = n
        self.max_degree = max_degree
        self.basis = [idx for idx in enumerate_basis(ring, n)
                      if idx.degree(ring) <= max_degree]
        self.entries: dict[tuple[BasisIndex, BasisIndex], dict[BasisIndex, int]] = {}
        realized = {idx: realize(ring, idx) for idx in self.basis}
        for i in self.basis:
            di = i.degree(ring)
            for j in self.basis:
                if di + j.degree(ring) > max_degree:
                    continue
                product = tensor_multiply(realized[i], realized[j])
                combo = expand(product)
                entry = {}
                for k, c in combo.items():
                    if c.denominator != 1:
                        raise TheoremViolationError(
                            f"non-integer structure constant {c} in "
                            f"{i.label(ring)} * {j.label(ring)} at {k.label(ring)}")
                    entry[k] = int(c)
                self.entries[(i, j)] = entry

    def product(self, i: BasisIndex, j: BasisIndex) -> dict[BasisIndex, int]:
        return self.entries[(i, j)]

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return (self.ring == other.ring and self.n == other.n
                and self.max_degree == other.max_degree
                and self.basis == other.basis
                and self.entries == other.entries)


def structure_constants(ring: Ring, n: int, up_to_degree: int) -> StructureTable:
    return StructureTable(ring, n, up_to_degree)


# -- JSON dialect ---------------------------------------------------------
#
# A basis index serializes as {"odd": [names], "even": [[name, m], ...],
# "pad": r}.  A structure table serializes in the ring-spec dialect
# (generators + products) so its output can be fed back in as a ring
# presentation; the extra "index" fields are ignored by the ring parser.

def index_to_dict(ring: Ring, idx: BasisIndex) -> dict:
    return {
        "odd": [ring.slot_name(p) for p in idx.odd],
        "even": [[ring.slot_name(p), m] for p, m in idx.even],
        "pad": idx.pad,
    }


def index_from_dict(ring: Ring, doc: dict) -> BasisIndex:
    odd = tuple(ring.position[name] for name in doc["odd"])
    even = tuple((ring.position[name], int(m)) for name, m in doc["even"])
    return BasisIndex(odd, even, int(doc["pad"]))


def table_to_dict(table: StructureTable) -> dict:
    ring = table.ring
    labels = {idx: idx.label(ring) for idx in table.basis}
    doc = {
        "name": f"sym{table.n}_{ring.name or 'ring'}",
        "n": table.n,
        "max_degree": table.max_degree,
        "generators": [
            {"name": labels[idx], "degree": idx.degree(ring),
             "index": index_to_dict(ring, idx)}
            for idx in table.basis
        ],
        "products": [],
    }
    for (i, j), entry in table.entries.items():
        doc["products"].append({
            "left": labels[i],
            "right": labels[j],
            "result": [{"gen": labels[k], "coeff": c}
                       for k, c in sorted(entry.items(),
                                          key=lambda kv: labels[kv[0]])],
        })
    return doc


def table_from_dict(ring: Ring, doc: dict) -> StructureTable:
    table = StructureTable.__new__(StructureTable)
    table.ring = ring
    table.n = int(doc["n"])
    table.max_degree = int(doc["max_degree"])
    by_label = {}
    basis = []
    for item in doc["generators"]:
        idx = index_from_dict(ring, item["index"])
        by_label[item["name"]] = idx
        basis.append(idx)
    table.basis = basis
    table.entries = {}
    for item in doc["products"]:
        entry = {by_label[t["gen"]]: int(t["coeff"]) for t in item["result"]}
        table.entries[(by_label[item["left"]], by_label[item["right"]])] = entry
    return table


def dump_table(table: StructureTable, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(table_to_dict(table), f, indent=2)
        f.write("\n")
