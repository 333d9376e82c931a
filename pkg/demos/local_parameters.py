"""The local parameters on Kneser and Schrijver graphs.

The local chromatic number counts colors on a closed neighborhood, not in
the whole graph, so a coloring may spend many colors globally while every
vertex sees only a few.  On these families the local and global values
coincide and follow clean formulas (n - 4 for K(n,3), n - 2 for S(n,2)),
which makes them good exactness checks for the solvers; the vector
relaxation below can only go lower.
"""

from __future__ import annotations

from orthograph import (
    GF2,
    chromatic_number,
    coloring_locality,
    kneser,
    local_chromatic_number,
    local_orthogonality_dimension,
    schrijver,
)


def main() -> None:
    print("Kneser graphs K(n,3): chi_local = chi = n-4")
    for n in (6, 7):
        g = kneser(n, 3)
        chi = chromatic_number(g)
        loc = local_chromatic_number(g)
        print(f"  K({n},3): {g.n} vertices  chi={chi.value}  chi_local={loc.value}  "
              f"(witness coloring uses {len(set(loc.witness))} colors, "
              f"locality {coloring_locality(g, loc.witness)})")

    print()
    print("Schrijver graphs S(n,2): chi_local = chi = n-2, no local savings")
    for n in (5, 6, 7):
        g = schrijver(n, 2)
        chi = chromatic_number(g).value
        loc = local_chromatic_number(g).value
        print(f"  S({n},2): {g.n} vertices  chi={chi}  chi_local={loc}")

    print()
    print("vector relaxation: local orthogonality dimension over GF(2)")
    for name, g in [("S(5,2)", schrijver(5, 2)), ("K(5,2)", kneser(5, 2))]:
        res = local_orthogonality_dimension(g, GF2)
        print(f"  {name}: local orth. dim = {res.value} "
              f"(witness dimension {res.witness.t}, bound: {res.lower_bound_reason})")


if __name__ == "__main__":
    main()
