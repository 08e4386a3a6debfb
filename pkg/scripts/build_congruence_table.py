#!/usr/bin/env python3
"""Regenerate the packaged genus-0 congruence-subgroup signature table.

Usage::

    python scripts/build_congruence_table.py --max-level 36 -o src/schreieder/data/congruence_genus0.txt

Covers Gamma(N), Gamma0(N), Gamma1(N), GammaH(N) for every proper
intermediate H, and Gamma0(N) / Gamma1(N) intersected with Gamma(M), M | N.
A table converted from a published list can be dropped in instead as long
as it follows the same six-column format (see ``schreieder.congruence``).
"""
import argparse
import logging
import sys

from schreieder.congruence import format_table, generate_table


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-level", type=int, default=36)
    parser.add_argument("-o", "--output", default="-")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s")

    records = generate_table(args.max_level)
    header = (f"genus-0 congruence subgroups of PSL(2,Z), standard families, level <= {args.max_level}\n"
              "generated by exact coset enumeration (scripts/build_congruence_table.py)\n"
              "index = PSL index = sum of cusp widths; level = lcm of widths")
    text = format_table(records, header)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
