import json
import os
import random
import subprocess
import sys

import pytest

from truncgroup import _kernels_py as py
from truncgroup import kernels
from truncgroup.scalars import cyclotomic_field, rational

try:
    from truncgroup import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def _rand_poly(rng, size=12):
    return {rng.randint(0, 1 << 24): rational(rng.randint(-9, 9), rng.randint(1, 4))
            for _ in range(size)}


def test_pure_kernels_basic():
    a = {1: 2, 3: -1}
    b = {1: 1, 2: 5}
    assert py.sparse_mul(a, b) == {2: 2, 3: 10, 4: -1, 5: -5}
    assert py.pruned(py.add_into(dict(a), {1: -2})) == {3: -1}
    assert py.axpy_into({}, a, 3) == {1: 6, 3: -3}
    # (1 + x)(1 - x) = 1 - x^2 = 2 mod x^2 + 1 (p = 4 table)
    table = cyclotomic_field(4)._table
    assert [int(c) for c in py.cyclo_mul([1, 1], [1, -1], table)] == [2, 0]


@needs_compiled
def test_compiled_matches_pure_on_random_inputs():
    rng = random.Random(3)
    for _ in range(50):
        a, b = _rand_poly(rng), _rand_poly(rng)
        assert compiled.sparse_mul(a, b) == py.sparse_mul(a, b)
        assert compiled.mul_into(dict(a), a, b) == py.mul_into(dict(a), a, b)
        c = rational(rng.randint(-5, 5), 3)
        assert compiled.axpy_into(dict(b), a, c) == py.axpy_into(dict(b), a, c)
        assert compiled.add_into(dict(b), a) == py.add_into(dict(b), a)
        assert compiled.pruned(a) == py.pruned(a)
    for p in (3, 5, 7, 12):
        f = cyclotomic_field(p)
        for _ in range(20):
            x = tuple(rng.randint(-20, 20) for _ in range(f.degree))
            y = tuple(rng.randint(-20, 20) for _ in range(f.degree))
            assert list(compiled.cyclo_mul(x, y, f._table)) == list(py.cyclo_mul(x, y, f._table))


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")
    if compiled is not None:
        assert kernels.BACKEND == "compiled"


def test_pure_python_mode_gives_same_results():
    code = ("import json, truncgroup; from truncgroup import relation_table, c_sequence;"
            "print(json.dumps([truncgroup.BACKEND, relation_table(3, 7).to_text(), c_sequence(8)]))")
    env = dict(os.environ, TRUNCGROUP_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, text, cs = json.loads(out.stdout)
    assert backend == "python"
    from truncgroup import c_sequence, relation_table
    assert text == relation_table(3, 7).to_text()
    assert cs == c_sequence(8)
