"""Cross-check the 3-generator closed forms and trace positions over all
<n1, n2, n3> with n3 <= N; report counts per trace position.

    python scripts/run_corpus_checks.py --max-gen 60
"""

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass

from semitrace.core import NumericalSemigroup
from semitrace.enumeration import ordered_map, threegen_sets
from semitrace.ideals import trace_ideal
from semitrace.threegen import cross_check


@dataclass
class CorpusConfig:
    max_gen: int = 60
    jobs: int = 1


def _one(gens):
    H = NumericalSemigroup(gens)
    td = trace_ideal(H)
    return gens, td.position.value, td.residue, cross_check(H)


def run(cfg: CorpusConfig) -> dict:
    positions, residues = Counter(), Counter()
    mismatches = []
    for gens, pos, res, checks in ordered_map(_one, threegen_sets(cfg.max_gen), jobs=cfg.jobs):
        positions[pos] += 1
        residues[res] += 1
        bad = [k for k, ok in checks.items() if not ok]
        if bad:
            mismatches.append({"gens": list(gens), "failed": bad})
    return {
        "config": asdict(cfg),
        "count": sum(positions.values()),
        "positions": dict(positions),
        "residues": dict(sorted(residues.items())),
        "mismatches": mismatches,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-gen", type=int, default=60)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    print(json.dumps(run(CorpusConfig(args.max_gen, args.jobs)), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
