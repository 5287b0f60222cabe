#!/usr/bin/env python3
"""Writes the resultant goldens with sympy, independently of the C++ engine.

usage: make_resultant_goldens.py FIXTURE_DIR GOLDEN_DIR
"""
import sys
from pathlib import Path

import sympy as sp

v1, v2, v3 = sp.symbols("v1 v2 v3")
NAMES = {"v1": v1, "v2": v2, "v3": v3}
PAIRS = [("P2", "P3"), ("P1", "Q")]


def load(path):
    text = path.read_text().strip().replace("^", "**")
    return sp.Poly(sp.sympify(text, locals=NAMES), v1, v2, v3)


def canonical(poly):
    # Descending graded-lex order over (v1, v2, v3), matching the C++ printer.
    terms = sorted(poly.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    out = []
    for exps, coef in terms:
        factors = []
        for name, e in zip(("v1", "v2", "v3"), exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coef)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not out:
            out.append(("-" if coef < 0 else "") + body)
        else:
            out.append((" - " if coef < 0 else " + ") + body)
    return "".join(out) if out else "0"


def main():
    fixtures, goldens = Path(sys.argv[1]), Path(sys.argv[2])
    goldens.mkdir(parents=True, exist_ok=True)
    for p, q in PAIRS:
        r = sp.resultant(load(fixtures / f"{p}.expr").as_expr(), load(fixtures / f"{q}.expr").as_expr(), v3)
        poly = sp.Poly(sp.expand(r), v1, v2, v3)
        (goldens / f"resultant_{p}_{q}.expr").write_text(canonical(poly) + "\n")
        print(p, q, len(poly.terms()), "terms")


if __name__ == "__main__":
    main()
