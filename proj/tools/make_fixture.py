#!/usr/bin/env python3
"""Writes synthetic order-type fixture files in the catalogue byte layout.

Each record is n points in general position, x then y, unsigned little-endian.
"""
import random
import struct
import sys


def general_position(pts):
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                return False
            for k in range(j + 1, len(pts)):
                (ax, ay), (bx, by), (cx, cy) = pts[i], pts[j], pts[k]
                if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
                    return False
    return True


def record(rng, n, hi):
    while True:
        pts = [(rng.randrange(hi), rng.randrange(hi)) for _ in range(n)]
        if general_position(pts):
            return pts


def main():
    n, count, seed, out = int(sys.argv[1]), int(sys.argv[2]), int(sys.argv[3]), sys.argv[4]
    width = 1 if n <= 8 else 2
    fmt = "<" + ("B" if width == 1 else "H") * (2 * n)
    rng = random.Random(seed)
    with open(out, "wb") as f:
        for _ in range(count):
            pts = record(rng, n, 256 if width == 1 else 65536)
            f.write(struct.pack(fmt, *[c for p in pts for c in p]))


if __name__ == "__main__":
    main()
