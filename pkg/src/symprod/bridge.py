"""Cross-validation of the two models of the surface symmetric power.

The quotient model maps into the tensor model by sending x_i, x'_i to the
spread classes of the degree-1 generators a_i, a_{i+g} and y to that of
the degree-2 generator b.  Expanding the image of each quotient-basis
monomial in the tensor-power basis gives one integer matrix per degree;
the map is an isomorphism of lattices iff every matrix is square and
unimodular.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import lattice
from .fixtures import surface_ring
from .quotient import (
    Monomial,
    Polynomial,
    ideal_generators,
    monomials_of_degree,
    multiply_nf,
    quotient_basis,
)
from .rings import Ring
from .sympower import TheoremViolationError, enumerate_basis, expand
from .tensors import TensorElement, sym_element, tensor_multiply


@dataclass
class DegreeMatrix:
    degree: int
    quotient_rank: int
    tensor_rank: int
    matrix: list[list[int]]
    unimodular: bool
    smith: list[int]


@dataclass
class BridgeReport:
    g: int
    n: int
    mode: str
    degrees: list[DegreeMatrix] = field(default_factory=list)
    relations_vanish: bool | None = None
    max_degree: int = 0

    @property
    def partial(self) -> bool:
        return self.max_degree < 2 * self.n

    @property
    def verdict(self) -> str:
        ok = (all(d.unimodular for d in self.degrees)
              and self.relations_vanish is not False)
        if not ok:
            return "mismatch"
        return "partial" if self.partial else "isomorphism"


class SurfacePowerMap:
    """The generator assignment from the quotient model into the n-th
    tensor power of the genus-g surface ring."""

    def __init__(self, g: int, n: int, ring: Ring | None = None):
        self.g = g
        self.n = n
        self.ring = ring or surface_ring(g)
        self.xi = {i: sym_element(self.ring, n, [self.ring.gen(f"a{i}")])
                   for i in range(1, g + 1)}
        self.xi_prime = {i: sym_element(self.ring, n, [self.ring.gen(f"a{i + g}")])
                         for i in range(1, g + 1)}
        self.eta = sym_element(self.ring, n, [self.ring.gen("b")])

    def image_of_monomial(self, m: Monomial) -> TensorElement:
        """Product of the generator images in the canonical written order."""
        out = TensorElement.unit(self.ring, self.n)
        for i in m.xs:
            out = tensor_multiply(out, self.xi[i])
        for j in m.xp:
            out = tensor_multiply(out, self.xi_prime[j])
        for _ in range(m.q):
            out = tensor_multiply(out, self.eta)
        return out

    def image(self, p: Polynomial) -> TensorElement:
        out = TensorElement.zero(self.ring, self.n)
        for m, c in p.terms.items():
            out = out + c * self.image_of_monomial(m)
        return out

    def coordinates(self, p: Polynomial, degree: int) -> list[int]:
        """Integer coordinates of the image in the tensor-power basis."""
        basis = enumerate_basis(self.ring, self.n, degree=degree)
        combo = expand(self.image(p))
        vec = [0] * len(basis)
        pos = {idx: k for k, idx in enumerate(basis)}
        for idx, c in combo.items():
            if c.denominator != 1:
                raise TheoremViolationError(
                    f"non-integer coordinate {c} for {p!r} in degree {degree}")
            vec[pos[idx]] = int(c)
        return vec


def bridge_degree(g: int, n: int, s: int) -> DegreeMatrix:
    """The degree-s change-of-basis matrix; degrees are independent jobs."""
    if s == 0:
        return DegreeMatrix(0, 1, 1, [[1]], True, [1])
    fmap = SurfacePowerMap(g, n)
    monos = quotient_basis(g, n, s)
    tensor_basis = enumerate_basis(fmap.ring, n, degree=s)
    matrix = [fmap.coordinates(Polynomial.monomial(m), s) for m in monos]
    square = len(matrix) == len(tensor_basis)
    return DegreeMatrix(
        degree=s,
        quotient_rank=len(monos),
        tensor_rank=len(tensor_basis),
        matrix=matrix,
        unimodular=square and lattice.is_unimodular(matrix),
        smith=lattice.smith(matrix) if matrix else [],
    )


def check_isomorphism(g: int, n: int, mode: str = "full",
                      max_degree: int | None = None,
                      jobs: int = 1) -> BridgeReport:
    """Per-degree change-of-basis matrices between the two models.

    Rows are images of quotient-basis monomials expanded in the tensor
    basis, one matrix per degree up to 2n (or the configured cutoff, in
    which case the report is only partial).  Also checks that the chosen
    generating set of the relation ideal maps to zero.
    """
    top = 2 * n if max_degree is None else min(max_degree, 2 * n)
    report = BridgeReport(g, n, mode, max_degree=top)
    degrees = list(range(top + 1))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(bridge_degree, [g] * len(degrees),
                                    [n] * len(degrees), degrees))
        report.degrees.extend(sorted(results, key=lambda d: d.degree))
    else:
        report.degrees.extend(bridge_degree(g, n, s) for s in degrees)
    fmap = SurfacePowerMap(g, n)
    vanish = True
    for poly in ideal_generators(g, n, mode).polys:
        if not fmap.image(poly).is_zero():
            vanish = False
            break
    report.relations_vanish = vanish
    return report


def multiplicativity_spot_check(g: int, n: int, samples: int = 8,
                                seed: int = 0) -> bool:
    """Random monomial pairs: the image of the reduced product must match
    the product of the images."""
    fmap = SurfacePowerMap(g, n)
    rng = random.Random(seed)
    pool = [m for s in range(1, n + 1) for m in monomials_of_degree(g, s)]
    for _ in range(samples):
        m1, m2 = rng.choice(pool), rng.choice(pool)
        direct = tensor_multiply(fmap.image_of_monomial(m1),
                                 fmap.image_of_monomial(m2))
        if m1.degree + m2.degree > 2 * n:
            if not direct.is_zero():
                return False
            continue
        reduced = multiply_nf(Polynomial.monomial(m1), Polynomial.monomial(m2), g, n)
        if fmap.image(reduced) != direct:
            return False
    return True


# -- report JSON ------------------------------------------------------------

def report_to_dict(report: BridgeReport) -> dict:
    return {
        "g": report.g,
        "n": report.n,
        "mode": report.mode,
        "max_degree": report.max_degree,
        "verdict": report.verdict,
        "relations_vanish": report.relations_vanish,
        "degrees": [
            {
                "degree": d.degree,
                "quotient_rank": d.quotient_rank,
                "tensor_rank": d.tensor_rank,
                "matrix": d.matrix,
                "unimodular": d.unimodular,
                "smith": d.smith,
            }
            for d in report.degrees
        ],
    }


def report_from_dict(doc: dict) -> BridgeReport:
    report = BridgeReport(doc["g"], doc["n"], doc["mode"],
                          max_degree=doc["max_degree"])
    report.relations_vanish = doc["relations_vanish"]
    for item in doc["degrees"]:
        report.degrees.append(DegreeMatrix(
            degree=item["degree"],
            quotient_rank=item["quotient_rank"],
            tensor_rank=item["tensor_rank"],
            matrix=[list(map(int, row)) for row in item["matrix"]],
            unimodular=item["unimodular"],
            smith=list(map(int, item["smith"])),
        ))
    return report
