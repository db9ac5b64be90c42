#!/usr/bin/env python3
"""Export the belt-trick homotopy grid to a CSV or JSON file.

Example:
    python scripts/export_belt_frames.py --ns 90 --nt 24 --out belt.csv
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pairquat.belt import belt_frames, frames_to_csv_lines
from pairquat.jsonio import dumps_canonical
from pairquat.service import belt_frame_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ns", type=int, default=90, help="loop subdivisions")
    parser.add_argument("--nt", type=int, default=24, help="homotopy subdivisions")
    parser.add_argument("--out", type=Path, required=True)
    args = parser.parse_args()

    frames = belt_frames(args.ns, args.nt)
    if args.out.suffix == ".json":
        args.out.write_text(dumps_canonical({"frames": [belt_frame_json(f) for f in frames]}) + "\n")
    else:
        args.out.write_text("\n".join(frames_to_csv_lines(frames)) + "\n")
    print(f"wrote {len(frames)} frames to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
