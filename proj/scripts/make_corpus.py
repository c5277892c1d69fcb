#!/usr/bin/env python3
"""Write every connected simple graph on 1..7 vertices as graph6, one per line.

Uses the networkx graph atlas, which lists all 1253 graphs with at most
seven vertices up to isomorphism.
"""
import argparse
import sys

import networkx as nx

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output", nargs="?", default="-")
    args = parser.parse_args()

    counts = {}
    lines = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        counts[n] = counts.get(n, 0) + 1
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())

    if counts != EXPECTED:
        print(f"unexpected counts: {counts}", file=sys.stderr)
        return 1

    out = sys.stdout if args.output == "-" else open(args.output, "w")
    out.write("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
