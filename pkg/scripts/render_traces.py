#!/usr/bin/env python3
"""Draw the step-by-step diagrams for a few worked examples.

    python scripts/render_traces.py              # built-in examples
    python scripts/render_traces.py 11,7,3 2,0,1 # one partition, one permutation
"""

import sys

from bressoud import ResiduePermutation, parse_partition, trace

EXAMPLES = [
    ("6,3", "0,1"),
    ("8,1", "0,1"),
    ("8,1", "1,0"),
    ("5,3,1", "0,1"),
    ("13,9,5,1", "2,0,1"),
    ("17,12,6", "3,1,0,2"),
]


def main(argv):
    cases = [tuple(argv[:2])] if len(argv) >= 2 else EXAMPLES
    for lam_text, pi_text in cases:
        lam = parse_partition(lam_text)
        t = trace(lam, ResiduePermutation.parse(pi_text))
        print(t.render())
        back = trace(t.output, t.pi, "inverse")
        assert back.output == lam
        print("-" * 40)


if __name__ == "__main__":
    main(sys.argv[1:])
