"""Evidence run for the bound res(H) <= g(H) - n(H) in embedding dimension >= 4.

Prints a histogram of the slack g - n - res per embedding dimension and every
semigroup where the bound fails (none so far).

    python scripts/run_q12.py --max-gen 25 --max-edim 5 --jobs 4
"""

import argparse
import json
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass

from semitrace.core import NumericalSemigroup
from semitrace.enumeration import minimal_generating_sets, ordered_map
from semitrace.ideals import bounds_report


@dataclass
class Q12Config:
    max_gen: int = 25
    max_edim: int = 5
    jobs: int = 1


def _slack(gens):
    br = bounds_report(NumericalSemigroup(gens))
    return gens, br.g - br.n - br.res


def run(cfg: Q12Config) -> dict:
    sets = minimal_generating_sets(cfg.max_gen, cfg.max_edim)
    hist: dict[int, Counter] = defaultdict(Counter)
    findings = []
    for gens, slack in ordered_map(_slack, sets, jobs=cfg.jobs):
        hist[len(gens)][slack] += 1
        if slack < 0:
            findings.append({"gens": list(gens), "slack": slack})
    tight = {e: h[0] for e, h in sorted(hist.items())}
    return {
        "config": asdict(cfg),
        "checked": sum(sum(h.values()) for h in hist.values()),
        "findings": findings,
        "tight_by_edim": tight,
        "slack_histogram": {e: dict(sorted(h.items())) for e, h in sorted(hist.items())},
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-gen", type=int, default=25)
    ap.add_argument("--max-edim", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    print(json.dumps(run(Q12Config(args.max_gen, args.max_edim, args.jobs)), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
