#!/usr/bin/env python3
"""Regenerates MANIFEST (FNV-1a-64 of each fixture's canonical text).

usage: write_manifest.py DIR [DIR ...]
"""
import sys
from pathlib import Path


def fnv1a64(data: bytes) -> int:
    h = 1469598103934665603
    for b in data:
        h ^= b
        h = (h * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return h


def canonical(raw: bytes) -> bytes:
    return raw.replace(b"\r", b"").rstrip()


for d in map(Path, sys.argv[1:]):
    lines = ["# name fnv1a64(canonical text)"]
    for f in sorted(d.glob("*.expr")):
        lines.append(f"{f.stem} {fnv1a64(canonical(f.read_bytes())):016x}")
    (d / "MANIFEST").write_text("\n".join(lines) + "\n")
    print(d, len(lines) - 1, "entries")
