"""Compare the compiled kernels with the pure-Python fallback.

Each workload runs in a fresh interpreter per backend (the backend is chosen
at import time), reports the best of ``--repeat`` runs, and checks that both
backends produced the same result.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--only compose]
"""

import argparse
import hashlib
import json
import os
import subprocess
import sys

WORKLOADS = {
    "compose": "dense composition, n=3, k=8, rational",
    "invert": "dense inversion, n=3, k=8, rational",
    "cyclotomic": "inversion over Q(w_5), n=2, k=7",
    "relations": "symbolic relation table, p=3 through degree 10",
    "gen-diagonal": "diagonal generator, p=4, n=3, k=7",
}

CHILD = r"""
import hashlib, json, random, sys, time
from truncgroup import BACKEND, ScalarDomain, compose, invert, relation_table
from truncgroup import DiagonalSpec, HomogeneousPart, gen_periodic_diagonal
from truncgroup import samples

name, repeat = sys.argv[1], int(sys.argv[2])

def setup():
    rng = random.Random(1)
    if name in ("compose", "invert"):
        dom = ScalarDomain.rational()
        a = samples.random_series(rng, 3, 8, dom, density=1.0)
        b = samples.random_series(rng, 3, 8, dom, density=1.0)
        return (lambda: compose(a, b)) if name == "compose" else (lambda: invert(a).series)
    if name == "cyclotomic":
        dom = ScalarDomain.cyclotomic(5)
        a = samples.random_series(rng, 2, 7, dom, density=1.0)
        return lambda: invert(a).series
    if name == "relations":
        return lambda: relation_table(3, 10).to_text()
    dom = ScalarDomain.cyclotomic(4)
    spec = DiagonalSpec(4, (1, 1, 3))
    seeds = {}
    for d in range(2, 8):
        part = samples.random_part(rng, 3, d, dom, -2, 2, 0.6)
        terms = [(i, e, c) for i, e, c in part.terms() if not spec.is_resonant(i, e)]
        seeds[d] = HomogeneousPart.from_terms(3, d, terms)
    return lambda: gen_periodic_diagonal(spec, seeds, 7, dom).series

fn = setup()
best = None
for _ in range(repeat):
    start = time.perf_counter()
    out = fn()
    t = time.perf_counter() - start
    best = t if best is None else min(best, t)
digest = hashlib.sha256(str(out).encode()).hexdigest()[:16]
print(json.dumps({"backend": BACKEND, "seconds": best, "digest": digest}))
"""


def run(name, pure, repeat):
    env = dict(os.environ)
    env.pop("TRUNCGROUP_PURE_PYTHON", None)
    if pure:
        env["TRUNCGROUP_PURE_PYTHON"] = "1"
    res = subprocess.run([sys.executable, "-c", CHILD, name, str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--only", choices=tuple(WORKLOADS))
    args = parser.parse_args(argv)
    names = [args.only] if args.only else list(WORKLOADS)
    print(f"{'workload':<14} {'compiled':>10} {'pure':>10} {'speedup':>8}  same  description")
    ok = True
    for name in names:
        fast = run(name, False, args.repeat)
        slow = run(name, True, args.repeat)
        same = fast["digest"] == slow["digest"]
        ok &= same
        label = fast["backend"]
        speed = slow["seconds"] / fast["seconds"] if fast["seconds"] else float("nan")
        print(f"{name:<14} {fast['seconds']:>9.4f}s {slow['seconds']:>9.4f}s {speed:>7.2f}x  "
              f"{'yes' if same else 'NO ':<4}  {WORKLOADS[name]}"
              + ("" if label == "compiled" else "  (extension not built)"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
