"""Why the even-degree family admits no elementary reduction.

A tame automorphism of degree > 3 admits an elementary reduction or one
of a short list of exceptional reduction shapes.  For the family triple
(d, d + k(d+1), d + 2k(d+1)) with d even, gcd(d, k) = 1, the toolkit
refutes every elementary reduction by exact integer inequalities: if a
polynomial of degree s were subtracted from one coordinate to lower its
degree, the degree calculus for Poisson-type brackets forces lower
bounds that contradict the triple itself.  The type-III exceptional
shape is excluded by a parity/divisibility test.

This script prints the full audit for (d, k) = (6, 1), i.e. the triple
(6, 13, 20), and shows the degree bound su_lower_bound growing past any
usable window.
"""

from wildmdeg import (
    INVARIANT_QUADRIC,
    ReductionQuery,
    X,
    Y,
    bracket_degree,
    no_elementary_reduction_check,
    su_lower_bound,
    type_iii_check,
)


def main():
    print("bracket degree examples:")
    print("  [x, y]:", bracket_degree(X, Y))
    print("  [q, x]:", bracket_degree(INVARIANT_QUADRIC, X))
    print()

    print("degree lower bound for a candidate reducer of (6, 13, ...):")
    for q in range(4):
        bound = su_lower_bound(ReductionQuery(6, 13, q, 0))
        print(f"  q = {q}: every candidate has degree >= {bound}")
    print()

    print("full audit for the family instance (d, k) = (6, 1):")
    for report in no_elementary_reduction_check(6, 1):
        print(f"  reduce the {report.coordinate} coordinate?")
        for check in report.checks:
            mark = "ok" if check.holds else "XX"
            print(
                f"    [{mark}] {check.name}"
                f"  (lhs = {check.lhs}, rhs = {check.rhs})"
            )
        print(f"    -> {report.conclusion}")
    print()

    report = type_iii_check((6, 13, 20))
    print(
        "type-III exceptional shape:",
        "excluded" if report.excluded else "possible",
    )
    print("  middle degree even:", report.condition1)
    print("  divisibility/ratio condition:", report.condition2)


if __name__ == "__main__":
    main()
