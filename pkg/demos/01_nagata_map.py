"""The base shear automorphism: construction, invariant, inverse.

The whole toolkit is organized around one automorphism of 3-space and
its powers.  Let q = y^2 + x*z.  The map

    N_k : (x, y, z)  |->  (x - 2*y*q^k - z*q^2k,  y + z*q^k,  z)

is a polynomial automorphism for every k >= 1: it is the exponential of
a locally nilpotent derivation, it preserves q, and its inverse is
N_k with q^k negated.  This script builds N_1 three different ways and
checks that all constructions agree exactly.
"""

from wildmdeg import (
    INVARIANT_QUADRIC,
    compose,
    inverse,
    multidegree,
    nagata,
    nagata_derivation,
    nagata_exp,
)


def main():
    print("invariant quadric q =", INVARIANT_QUADRIC)
    print()

    map_ = nagata(1)
    print("closed-form construction N_1:")
    for name, coord in zip("xyz", map_.coords):
        print(f"  {name} |-> {coord}")
    print("multidegree:", multidegree(map_))
    print()

    d = nagata_derivation()
    print("generating derivation:")
    print("  D(x) =", d.image_x)
    print("  D(y) =", d.image_y)
    print("  D(z) =", d.image_z)
    print("  D kills q:", d(INVARIANT_QUADRIC))

    exp_map = nagata_exp(1)
    print("exp(q*D) equals the closed form:", exp_map.coords == map_.coords)
    print()

    q_after = INVARIANT_QUADRIC.substitute(*map_.coords)
    print("q is preserved exactly:", q_after == INVARIANT_QUADRIC)

    backward = inverse(map_)
    print("inverse multidegree:", multidegree(backward))
    print(
        "two-sided inverse:",
        compose(map_, backward).is_identity()
        and compose(backward, map_).is_identity(),
    )


if __name__ == "__main__":
    main()
