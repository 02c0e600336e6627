#!/usr/bin/env python3
"""Survey every constructible maximum 1-design at desk scale.

For each design: hyperplane histogram vs the closed-form h-values, the
two-weight enumerator of the associated Hamming code, SRG parameters
when the point set is a proper two-intersection set, MSRD verdict of
the sum-rank code, and the cutting/minimality status.
"""

import argparse

from subdesigns import design as de
from subdesigns import hamming as ha
from subdesigns import sumrank as sr
from subdesigns.errors import NotTwoIntersection
from subdesigns.repro import max1_corpus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-slow", action="store_true", help="skip ambients above 3^8")
    args = ap.parse_args()

    for name, D in max1_corpus():
        size = D.ambient.tower.order ** D.ambient.k
        if args.skip_slow and size > 3**8:
            continue
        t = D.ambient.tower
        hist = de.hyperplane_weight_distribution(D)
        P = ha.ext_system(D)
        enum = ha.weight_enumerator(P)
        try:
            srg = ha.srg_from_two_intersection(P).as_tuple()
        except NotTwoIntersection:
            srg = "covers the space (one-weight)"
        C = sr.code_from_system(D)
        d = sr.min_distance(C)
        verdict = sr.singleton_msrd(C, d=d)
        cut = de.is_cutting(D)
        print(f"{name}: q={t.q} m={t.m} k={D.ambient.k} t={D.t}")
        print(f"  histogram {hist}")
        print(f"  enumerator {enum}")
        print(f"  SRG {srg}")
        print(f"  d={d} MSRD={verdict['is_msrd']} cutting={cut.cutting}")


if __name__ == "__main__":
    main()
