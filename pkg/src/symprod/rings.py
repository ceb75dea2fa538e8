"""Finite presentations of graded-commutative rings with integer constants.

A presentation lists homogeneous generators of degree >= 1 together with a
table expressing each product of two generators as an integer combination
of generators.  The degree-0 unit is implicit.  Element coefficients are
exact rationals; the integral lattice is the set of elements with integer
coefficients only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


class RingSpecError(ValueError):
    """Malformed ring description (bad JSON field, unknown generator, ...)."""


class MalformedElementError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


@dataclass(frozen=True)
class Violation:
    invariant: str
    witness: tuple
    detail: str

    def __str__(self):
        return f"{self.invariant} at {self.witness}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None


class Ring:
    """A graded ring presentation.

    Generators are reordered at construction: odd-degree ones first (by
    degree, then given order), then even-degree ones likewise, so basis
    enumeration downstream is deterministic.  ``products`` maps a pair of
    generator names to a {name: int} combination; omitted pairs are zero.
    """

    def __init__(self, generators, products, name: str = ""):
        gens = [g if isinstance(g, Generator) else Generator(*g) for g in generators]
        seen = set()
        for g in gens:
            if g.degree < 1:
                raise RingSpecError(f"generator {g.name!r} has degree {g.degree} < 1")
            if g.name in seen:
                raise RingSpecError(f"duplicate generator name {g.name!r}")
            seen.add(g.name)
        odds = [g for g in gens if g.degree % 2 == 1]
        evens = [g for g in gens if g.degree % 2 == 0]
        odds.sort(key=lambda g: g.degree)
        evens.sort(key=lambda g: g.degree)
        self.name = name
        self.generators: tuple[Generator, ...] = tuple(odds + evens)
        self.position = {g.name: i for i, g in enumerate(self.generators)}
        self.unit_slot = len(self.generators)
        self._degrees = [g.degree for g in self.generators] + [0]
        self.products: dict[tuple[int, int], dict[int, int]] = {}
        for (left, right), combo in products.items():
            i, j = self._pos(left), self._pos(right)
            entry = {}
            for gen_name, coeff in combo.items():
                if int(coeff) != coeff:
                    raise RingSpecError(
                        f"non-integer structure constant {coeff!r} in "
                        f"product {left!r}*{right!r}")
                if coeff:
                    entry[self._pos(gen_name)] = int(coeff)
            if entry:
                if (i, j) in self.products:
                    raise RingSpecError(f"duplicate product entry {left!r}*{right!r}")
                self.products[(i, j)] = entry

    def _pos(self, name: str) -> int:
        try:
            return self.position[name]
        except KeyError:
            raise RingSpecError(f"unknown generator {name!r}") from None

    # -- basic queries -------------------------------------------------

    @property
    def odd_positions(self) -> list[int]:
        return [i for i, g in enumerate(self.generators) if g.degree % 2 == 1]

    @property
    def even_positions(self) -> list[int]:
        return [i for i, g in enumerate(self.generators) if g.degree % 2 == 0]

    def slot_degree(self, slot: int) -> int:
        return self._degrees[slot]

    def slot_name(self, slot: int) -> str:
        return "1" if slot == self.unit_slot else self.generators[slot].name

    def __eq__(self, other):
        if not isinstance(other, Ring):
            return NotImplemented
        return (self.generators == other.generators
                and self.products == other.products)

    def __repr__(self):
        label = self.name or f"{len(self.generators)} generators"
        return f"Ring({label})"

    # -- elements ------------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.unit_slot: Fraction(1)})

    def gen(self, name: str) -> "Element":
        return Element(self, {self._pos(name): Fraction(1)})

    def element(self, combo: dict[str, int | Fraction]) -> "Element":
        terms = {}
        for name, coeff in combo.items():
            slot = self.unit_slot if name == "1" else self._pos(name)
            if coeff:
                terms[slot] = Fraction(coeff)
        return Element(self, terms)

    def gen_product(self, i: int, j: int) -> dict[int, int]:
        """Structure-constant row for generator positions i, j (unit aware)."""
        if i == self.unit_slot:
            return {j: 1}
        if j == self.unit_slot:
            return {i: 1}
        return self.products.get((i, j), {})

    def multiply(self, a: "Element", b: "Element") -> "Element":
        if a.ring is not self or b.ring is not self:
            raise MalformedElementError("elements from a different presentation")
        terms: dict[int, Fraction] = {}
        for i, ca in a.terms.items():
            for j, cb in b.terms.items():
                c = ca * cb
                for k, s in self.gen_product(i, j).items():
                    v = terms.get(k, Fraction(0)) + c * s
                    if v:
                        terms[k] = v
                    else:
                        terms.pop(k, None)
        return Element(self, terms)

    # -- validation ----------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check the structure-constant table against the graded ring axioms."""
        violations = []
        n = len(self.generators)
        deg = self._degrees

        for (i, j), combo in self.products.items():
            want = deg[i] + deg[j]
            for k, c in combo.items():
                if deg[k] != want:
                    violations.append(Violation(
                        "degree additivity", (self.slot_name(i), self.slot_name(j)),
                        f"term {self.slot_name(k)} has degree {deg[k]}, expected {want}"))

        for i in range(n):
            for j in range(n):
                ij = self.products.get((i, j), {})
                ji = self.products.get((j, i), {})
                sign = -1 if (deg[i] % 2 and deg[j] % 2) else 1
                if ji != {k: sign * c for k, c in ij.items()}:
                    violations.append(Violation(
                        "graded commutativity", (self.slot_name(i), self.slot_name(j)),
                        f"product({self.slot_name(j)},{self.slot_name(i)}) != "
                        f"{'-' if sign < 0 else ''}product({self.slot_name(i)},{self.slot_name(j)})"))

        for i in range(n):
            if deg[i] % 2 and self.products.get((i, i)):
                violations.append(Violation(
                    "odd square", (self.slot_name(i),),
                    f"{self.slot_name(i)}^2 is nonzero"))

        for i in range(n):
            gi = Element(self, {i: Fraction(1)})
            for j in range(n):
                gj = Element(self, {j: Fraction(1)})
                left = self.multiply(gi, gj)
                for k in range(n):
                    gk = Element(self, {k: Fraction(1)})
                    if self.multiply(left, gk) != self.multiply(gi, self.multiply(gj, gk)):
                        violations.append(Violation(
                            "associativity",
                            (self.slot_name(i), self.slot_name(j), self.slot_name(k)),
                            "(g_i g_j) g_k != g_i (g_j g_k)"))
        return ValidationReport(violations)


class Element:
    """Sparse rational combination of generators and the unit."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[int, Fraction]):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if v}

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            w = terms.get(k, Fraction(0)) + v
            if w:
                terms[k] = w
            else:
                terms.pop(k, None)
        return Element(self.ring, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return Element(self.ring, {k: v * Fraction(scalar) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.ring.multiply(self, other)
        return self.__rmul__(other)

    def __neg__(self):
        return (-1) * self

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        """True iff every coefficient is an integer."""
        return all(v.denominator == 1 for v in self.terms.values())

    def degree(self) -> int | None:
        """Common degree of all terms, or None if mixed or zero."""
        degs = {self.ring.slot_degree(k) for k in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            c = self.terms[k]
            bits.append(f"{'+' if c > 0 else '-'}{abs(c)}*{self.ring.slot_name(k)}")
        return "".join(bits)


def validate(ring: Ring) -> ValidationReport:
    return ring.validate()


def is_integral(a: Element) -> bool:
    return a.is_integral()


# -- JSON ring-spec format ----------------------------------------------
#
# {"name": "...",
#  "generators": [{"name": "a1", "degree": 1}, ...],
#  "products": [{"left": "a1", "right": "a2",
#                "result": [{"gen": "b", "coeff": 1}]}, ...]}
#
# Omitted products are zero; coefficients are decimal integers.

def ring_from_dict(doc: dict) -> Ring:
    if not isinstance(doc, dict):
        raise RingSpecError("ring spec must be a JSON object")
    try:
        gen_list = doc["generators"]
    except KeyError:
        raise RingSpecError("missing field 'generators'") from None
    generators = []
    for item in gen_list:
        if not isinstance(item, dict) or "name" not in item or "degree" not in item:
            raise RingSpecError(f"bad generator entry {item!r}: need 'name' and 'degree'")
        if not isinstance(item["degree"], int):
            raise RingSpecError(f"generator {item.get('name')!r}: degree must be an integer")
        generators.append(Generator(str(item["name"]), item["degree"]))
    products = {}
    for item in doc.get("products", []):
        for field in ("left", "right", "result"):
            if field not in item:
                raise RingSpecError(f"product entry missing field {field!r}: {item!r}")
        combo = {}
        for t in item["result"]:
            if "gen" not in t or "coeff" not in t:
                raise RingSpecError(f"bad product term {t!r}: need 'gen' and 'coeff'")
            if not isinstance(t["coeff"], int):
                raise RingSpecError(f"product term {t!r}: coeff must be an integer")
            combo[t["gen"]] = combo.get(t["gen"], 0) + t["coeff"]
        key = (item["left"], item["right"])
        if key in products:
            raise RingSpecError(f"duplicate product entry {key[0]!r}*{key[1]!r}")
        products[key] = combo
    return Ring(generators, products, name=doc.get("name", ""))


def ring_to_dict(ring: Ring) -> dict:
    doc = {
        "name": ring.name,
        "generators": [{"name": g.name, "degree": g.degree} for g in ring.generators],
        "products": [],
    }
    for (i, j) in sorted(ring.products):
        combo = ring.products[(i, j)]
        doc["products"].append({
            "left": ring.slot_name(i),
            "right": ring.slot_name(j),
            "result": [{"gen": ring.slot_name(k), "coeff": combo[k]}
                       for k in sorted(combo)],
        })
    return doc


def load_ring(path) -> Ring:
    with open(path, encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise RingSpecError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from None
    return ring_from_dict(doc)


def dump_ring(ring: Ring, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(ring_to_dict(ring), f, indent=2)
        f.write("\n")
