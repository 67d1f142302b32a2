#!/usr/bin/env python3
"""Independent check of ideal dimensions reported by the osculum binary.

For each parametrized fixture: dump its spec, parse the coordinates with
sympy, evaluate all degree-d monomials at random integer parameter points
and take the rank mod a 31-bit prime. dim I_d = #monomials - rank. The
result is compared to `osculum ci --json` and, for d = 2, to classical
closed forms.
"""
import itertools
import json
import random
import subprocess
import sys
from math import comb

import numpy as np
import sympy

P = 2147483629  # prime < 2^31


def rank_mod_p(rows):
    m = np.array(rows, dtype=np.int64) % P
    r = 0
    nrows, ncols = m.shape
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i, c] != 0), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), P - 2, P)
        m[r] = (m[r] * inv) % P
        for i in range(nrows):
            if i != r and m[i, c] != 0:
                m[i] = (m[i] - m[i, c] * m[r]) % P
        r += 1
        if r == nrows:
            break
    return r


def monomials(nvars, d):
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        yield combo


def sampled_dim(spec, d, rng):
    n = spec["n"]
    ts = sympy.symbols(" ".join(f"t{i + 1}" for i in range(n)))
    if n == 1:
        ts = (ts,)
    coords = [sympy.sympify(c.replace("^", "**"), locals={f"t{i + 1}": ts[i] for i in range(n)})
              for c in spec["coords"]]
    funcs = [sympy.lambdify(ts, c, "math") for c in coords]
    monos = list(monomials(len(coords), d))
    rows = []
    for _ in range(len(monos) + 10):
        pt = [rng.randint(-1000, 1000) for _ in range(n)]
        x = [int(f(*pt)) % P for f in funcs]
        row = []
        for mono in monos:
            v = 1
            for i in mono:
                v = (v * x[i]) % P
            row.append(v)
        rows.append(row)
    return len(monos) - rank_mod_p(rows)


def classical(name):
    if name.startswith("veronese-"):
        m = int(name.split("-")[1]) + 1
        return comb(comb(m + 1, 2) + 1, 2) - comb(m + 3, 4)
    if name.startswith("segre-"):
        a, b = map(int, name.split("-")[1:])
        return comb(a + 1, 2) * comb(b + 1, 2)
    if name.startswith("grass2-"):
        return comb(int(name.split("-")[1]), 4)
    table = {"conic": 1, "twisted-cubic": 3, "plane-cubic": 0, "spinor10": 10,
             "severi-1": 6, "severi-2": 9, "severi-4": 15, "six-quadric": 12}
    return table.get(name)


def run(binary, *args):
    return subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout


def main():
    binary = sys.argv[1]
    names = ["conic", "twisted-cubic", "plane-cubic", "veronese-1", "veronese-2", "segre-1-1",
             "segre-1-2", "segre-2-2", "grass2-4", "grass2-5", "severi-1", "severi-2",
             "six-quadric", "spinor10"]
    rng = random.Random(7)
    failures = 0
    for name in names:
        spec = json.loads(run(binary, "catalog", "dump", name))
        top = 3 if len(spec["coords"]) <= 10 else 2
        report = json.loads(run(binary, "ci", "--variety", name, "--json", "--max-degree", str(top)))
        got = {row["degree"]: row["ideal_dim"] for row in report["ci"]["per_degree"]}
        for d in range(1, top + 1):
            want = sampled_dim(spec, d, rng)
            ok = got.get(d) == want
            if d == 2 and classical(name) is not None:
                ok = ok and want == classical(name)
            print(f"{'ok  ' if ok else 'FAIL'} {name} d={d} binary={got.get(d)} oracle={want}")
            failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
