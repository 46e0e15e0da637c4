"""Search the triple-run-free Dyck map for collisions, size by size.

The map sends Dyck words avoiding UUU and DDD with semilength m to
polyominoes of semiperimeter m + 3.  Source and target classes are
equinumerous, so the map is bijective exactly when it is injective.
This script counts distinct images per size and prints the first few
colliding pairs, which start appearing at semilength 5.
"""

from __future__ import annotations

import argparse
import sys
from collections import defaultdict

from stanlab.bijections import chi_prime
from stanlab.enumeration import FamilyBound, iter_raw
from stanlab.objects import make_dyck


def scan(max_semilength: int, pairs_to_show: int) -> int:
    total_collisions = 0
    for m in range(max_semilength + 1):
        images: dict[tuple, list[str]] = defaultdict(list)
        for w in iter_raw(FamilyBound("dyck", "semilength", m)):
            if "UUU" in w or "DDD" in w:
                continue
            images[chi_prime(make_dyck(w)).rows].append(w)
        sources = sum(len(ws) for ws in images.values())
        merged = [(rows, ws) for rows, ws in images.items() if len(ws) > 1]
        total_collisions += len(merged)
        print(f"semilength {m}: {sources} sources, {len(images)} images, "
              f"{len(merged)} merged targets")
        for rows, ws in sorted(merged)[:pairs_to_show]:
            print(f"    {list(rows)} <- {', '.join(sorted(ws))}")
    return total_collisions


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-semilength", type=int, default=8)
    parser.add_argument("--pairs", type=int, default=3,
                        help="colliding pairs to print per size")
    args = parser.parse_args()
    collisions = scan(args.max_semilength, args.pairs)
    print("map is injective on the scanned range" if collisions == 0
          else f"{collisions} merged targets in total")
    return 0


if __name__ == "__main__":
    sys.exit(main())
