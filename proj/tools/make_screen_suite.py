#!/usr/bin/env python3
"""Writes data/screens/suite.json: a reconstructed 16-screen jump suite.

The original study's screen geometries were never published. These screens
follow its description: 2 trivial jumps, 6 simple gap jumps of varying
width, 4 falling jumps and 4 reentrant jumps. Screen 4 needs a running
double jump; screen 8 is a reentrant jump from a moving start platform;
screen 14 drops from a fading platform.
Screen ids and jump types line up with the per-screen trial counts in
data/trials/study_synthetic.csv.
"""

import argparse
import json
from pathlib import Path

MOVEMENT = {
    "walk_speed": 6.0,
    "run_speed": 10.0,
    "air_speed": 8.0,
    "ground_accel": "inf",
    "turn_accel": "inf",
    "stop_accel": "inf",
    "air_accel": "inf",
    "gravity": 30.0,
    "takeoff_speed": 12.0,
    "max_fall_speed": 20.0,
    "jump_model": "static",
    "jump_enabled": True,
    "double_jump_enabled": True,
}


def platform(pid, x, y, length, role="none", **extra):
    p = {"id": pid, "x": x, "y": y, "length": length, "role": role}
    p.update(extra)
    return p


def screen(sid, kind, start, exit_, movement=None):
    level = {
        "schema": 1,
        "name": f"screen {sid} ({kind})",
        "movement": dict(MOVEMENT, **(movement or {})),
        "platforms": [start, exit_],
    }
    return {"id": str(sid), "level": level}


def build():
    s = []
    # Simple gap jumps, start platform on the left.
    s.append(screen(0, "simple", platform("start", 0, 0, 6, "start"), platform("exit", 9, 0, 5, "exit")))
    s.append(screen(1, "simple", platform("start", 0, 0, 6, "start"), platform("exit", 12.4, 0, 2.5, "exit")))
    s.append(screen(2, "simple", platform("start", 0, 0, 6, "start"), platform("exit", 11, 1, 3, "exit")))
    s.append(screen(3, "simple", platform("start", 0, 0, 6, "start"), platform("exit", 12, -1, 2.5, "exit")))
    s.append(screen(4, "simple", platform("start", 0, 0, 8, "start"), platform("exit", 22.5, 0, 2, "exit")))
    s.append(screen(5, "reentrant", platform("start", 0, 0, 3, "start"), platform("exit", -1, 3.6, 5, "exit")))
    s.append(screen(6, "reentrant", platform("start", 0, 0, 4, "start"), platform("exit", -0.5, 3, 5, "exit")))
    s.append(screen(7, "reentrant", platform("start", 0, 0, 2, "start"), platform("exit", -1.5, 4, 5, "exit")))
    s.append(screen(8, "reentrant",
                    platform("start", 0, 0, 2, "start", kind="dynamic",
                             motion={"axis": "horizontal", "amplitude": 2.0, "speed": 4.0}),
                    platform("exit", -2, 4.5, 7, "exit")))
    s.append(screen(9, "trivial", platform("start", 0, 0, 5, "start"), platform("exit", 4, 1.5, 3, "exit")))
    s.append(screen(10, "falling", platform("start", 0, 4, 10, "start"), platform("exit", 2, 0, 6, "exit")))
    s.append(screen(11, "falling", platform("start", 0, 5, 8, "start"), platform("exit", 1, 0, 5, "exit")))
    s.append(screen(12, "trivial", platform("start", 0, 0, 6, "start"), platform("exit", 3, -1, 7, "exit")))
    s.append(screen(13, "falling", platform("start", 0, 4, 9, "start"), platform("exit", 1, 0, 5, "exit")))
    s.append(screen(14, "falling", platform("start", 0, 8, 10, "start", kind="fading", fade_speed=1.0),
                    platform("exit", 4.5, 0, 1, "exit")))
    s.append(screen(15, "simple", platform("start", 0, 0, 6, "start"), platform("exit", 13, 0, 2, "exit")))
    return {"schema": 1, "name": "reconstructed 16-screen jump suite", "screens": s}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data/screens/suite.json")
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(build(), indent=2) + "\n")


if __name__ == "__main__":
    main()
