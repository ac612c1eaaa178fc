#!/usr/bin/env python3
"""Print the full analysis report for every built-in instance.

Usage: python scripts/corpus_report.py [--format text|machine]
"""

import argparse
import sys

from cideals import Instance, build_report, builtin_corpus, published_divergences
from cideals.io import render_machine, render_text


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    args = parser.parse_args()
    for entry in builtin_corpus():
        report = build_report(Instance(entry.name, entry.poset, entry.cp))
        render = render_machine if args.format == "machine" else render_text
        print(render(report), end="")
        for field_name, published, computed in published_divergences(entry):
            print(
                f"# NOTE {entry.name}: computed {field_name} "
                f"{{{','.join(sorted(computed))}}} diverges from the published "
                f"list {{{','.join(sorted(published))}}}"
            )
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
