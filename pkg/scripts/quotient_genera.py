"""Distribution of quotient-genus multisets over isomorphism classes of covers."""

import argparse
from collections import Counter

from cyclic_covers.covers import iso_classes
from cyclic_covers.curves import base_genus, standard_curve


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("d", type=int)
    parser.add_argument("r", type=int)
    args = parser.parse_args()

    curve = standard_curve(args.d, args.r)
    classes = iso_classes(curve)
    print(f"d={curve.d} r={curve.r} genus={base_genus(curve)} alpha={curve.alpha}")
    print(f"{len(classes)} isomorphism classes of strongly cyclic covers")
    for genera, n in sorted(Counter(c.quotient_genera for c in classes).items()):
        print(f"  quotient genera {list(genera)}: {n} classes")


if __name__ == "__main__":
    main()
