"""Scan every shifted family <j, j+a, j+b> with a < b <= B and summarize.

    python scripts/run_shift_grid.py --max-b 12 --out shift_grid.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from semitrace.shifted import scan, shift_params


@dataclass
class GridConfig:
    max_b: int = 12
    periods: int = 4  # scan up to 2k + periods * b
    jobs: int = 1


def run(cfg: GridConfig) -> dict:
    rows = []
    for b in range(2, cfg.max_b + 1):
        for a in range(1, b):
            p = shift_params(a, b)
            r = scan(p, 2 * p.k + cfg.periods * b, jobs=cfg.jobs)
            rows.append({
                "a": a, "b": b, "D": p.D, "T": p.T, "k": p.k,
                "ok": r.ok,
                "failed": sorted(name for name, ok in r.verdicts.items() if not ok),
                "theoretical_onset": 2 * p.k + 1,
                "empirical_onset": r.empirical_onset,
                "pseudo_symmetric_late": r.pseudo_symmetric_late,
            })
    return {"config": asdict(cfg), "all_ok": all(r["ok"] for r in rows), "families": rows}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-b", type=int, default=12)
    ap.add_argument("--periods", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = GridConfig(args.max_b, args.periods, args.jobs)

    start = time.perf_counter()
    result = run(cfg)
    result["seconds"] = round(time.perf_counter() - start, 2)
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")

    loose = [f for f in result["families"] if f["empirical_onset"] and f["empirical_onset"] < f["theoretical_onset"]]
    print(f"# {len(result['families'])} families, all verdicts ok: {result['all_ok']}, "
          f"onset earlier than 2k+1 in {len(loose)}", flush=True)


if __name__ == "__main__":
    main()
