"""Two four-manifolds with the same rational cohomology ring but different
integral rings: the product of two 2-spheres (intersection form [[0,1],[1,0]])
and the connected sum of the complex projective plane with its reverse
([[1,0],[0,-1]]).  This script prints the integer multiplication tables of
the squared symmetric power for both, side by side, so the integral
structure constants can be compared by eye.  No automated verdict is drawn:
deciding graded-ring isomorphism is a different (and much harder) problem.
"""

from symprod import fixtures
from symprod.sympower import structure_constants


def print_table(name, ring, n=2):
    table = structure_constants(ring, n, max(g.degree for g in ring.generators) * n)
    print(f"--- Sym^{n} of {name} ---")
    print("basis:")
    for idx in table.basis:
        print(f"  {idx.label(ring)}  (degree {idx.degree(ring)})")
    print("nonzero products (one triangle; the table is graded-commutative):")
    for (i, j), entry in table.entries.items():
        if table.basis.index(i) > table.basis.index(j) or not entry:
            continue
        rhs = " ".join(f"{c:+d}*{k.label(ring)}" for k, c in sorted(
            entry.items(), key=lambda kv: kv[0].label(ring)))
        print(f"  {i.label(ring)} * {j.label(ring)} = {rhs}")
    print()


def main():
    print(__doc__)
    print_table("the sphere product", fixtures.s2xs2_ring())
    print_table("the projective-plane connected sum", fixtures.cp2_conn_cp2bar_ring())
    print("Both tables are integral, as the theory guarantees; the diagonal")
    print("entries of the degree-4 products already distinguish the lattices")
    print("over the integers, mirroring the even/odd intersection forms.")


if __name__ == "__main__":
    main()
