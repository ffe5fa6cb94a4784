#!/usr/bin/env python3
"""Writes data/trials/study_synthetic.csv, a synthetic trial log whose
per-screen jump and success counts equal the published human study.

Only the counts are real. Takeoff points sit on the edge of each screen's
start platform facing the exit, landings at the exit centre, and successes
are spread evenly through each screen's rows.
"""

import argparse
import csv
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

# screen id -> (jumps, successes)
STUDY_COUNTS = {
    0: (156, 136), 1: (131, 80), 2: (158, 114), 3: (159, 104),
    4: (153, 33), 5: (150, 53), 6: (139, 76), 7: (134, 43),
    8: (148, 32), 9: (157, 139), 10: (151, 142), 11: (156, 143),
    12: (157, 156), 13: (140, 128), 14: (141, 93), 15: (131, 64),
}

HEADER = ["screen_id", "takeoff_x", "takeoff_y", "landing_x", "landing_y", "takeoff_vx", "success"]


def endpoints(level):
    start = next(p for p in level["platforms"] if p["role"] == "start")
    exit_ = next(p for p in level["platforms"] if p["role"] == "exit")
    return start, exit_


def rows_for(sid, level, jumps, successes):
    start, exit_ = endpoints(level)
    s_center = start["x"] + start["length"] / 2
    e_center = exit_["x"] + exit_["length"] / 2
    rightward = e_center >= s_center
    takeoff_x = start["x"] + start["length"] if rightward else start["x"]
    vx = 6.0 if rightward else -6.0
    rows = []
    for i in range(jumps):
        # Bresenham spread: row i succeeds when the running count steps up.
        ok = (i + 1) * successes // jumps > i * successes // jumps
        landing = (e_center, exit_["y"]) if ok else ("", "")
        rows.append([str(sid), takeoff_x, start["y"], landing[0], landing[1], vx, "true" if ok else "false"])
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", type=Path, default=ROOT / "data/screens/suite.json")
    ap.add_argument("--out", type=Path, default=ROOT / "data/trials/study_synthetic.csv")
    args = ap.parse_args()
    suite = json.loads(args.suite.read_text())
    levels = {s["id"]: s["level"] for s in suite["screens"]}
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(HEADER)
        for sid, (jumps, successes) in STUDY_COUNTS.items():
            w.writerows(rows_for(sid, levels[str(sid)], jumps, successes))


if __name__ == "__main__":
    main()
