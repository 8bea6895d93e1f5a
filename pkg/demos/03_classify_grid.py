"""Surveying tameness of degree triples.

classify_tame decides, for a sorted triple (d1, d2, d3), whether some
tame automorphism of 3-space realizes it as a multidegree.  Every
verdict carries a certificate.  This script scans all triples with
d3 <= 12 and tabulates the outcomes, then prints a few certificates in
full.
"""

import json
from collections import Counter

from wildmdeg import TameStatus, classify_tame


def main():
    counts = Counter()
    unknowns = []
    not_tame = []
    for d3 in range(1, 13):
        for d2 in range(1, d3 + 1):
            for d1 in range(1, d2 + 1):
                result = classify_tame((d1, d2, d3))
                counts[result.status, result.rule_id] += 1
                if result.status is TameStatus.UNKNOWN:
                    unknowns.append(result.triple)
                elif result.status is TameStatus.NOT_TAME:
                    not_tame.append((result.triple, result.rule_id))

    total = sum(counts.values())
    print(f"all {total} sorted triples with largest degree <= 12:")
    for (status, rule), n in sorted(
        counts.items(), key=lambda item: -item[1]
    ):
        rule_text = f"rule {rule}" if rule else "no rule applies"
        print(f"  {n:4d}  {status.value:8s}  ({rule_text})")
    print()

    print("certified not tame:", len(not_tame))
    for triple, rule in not_tame[:8]:
        print(f"  {triple} by rule {rule}")
    print()

    print("still undecided:", len(unknowns))
    print(" ", ", ".join(str(t) for t in unknowns[:8]), "...")
    print()

    print("a full certificate, as emitted by the JSON interface:")
    document = classify_tame((3, 4, 5)).to_dict()
    print(json.dumps(document, sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
