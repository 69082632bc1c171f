"""Acceptance suite.

Each test prints one ``criterion N: PASS`` or ``criterion N: FAIL`` line.
Run standalone with ``python3 tests/test_acceptance.py`` or through pytest.
"""

import json
import random
import sys
from contextlib import redirect_stdout
from io import StringIO
from math import gcd
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ramseycert.certificate import Certificate, verify_certificate
from ramseycert.cli import main as cli_main
from ramseycert.colouring import (builtin_colouring, check_periodic_avoidance,
                                  enumerate_mono_solutions, search_avoiding_colouring)
from ramseycert.constructors import (construct_cz2, construct_czp, construct_general,
                                     construct_power, construct_scaled_cz2,
                                     construct_solution_in_class, resclass_partner)
from ramseycert.errors import HypothesisUnsatisfied
from ramseycert.poly import EquationSpec, IntPolynomial, parse_poly

from oracles import avoiding_sign_vectors, brute_reduced_solutions, direct_conditions

RESULTS = {}


def report(number, check):
    """Run ``check``, print its verdict line, re-raise on failure."""
    try:
        check()
    except Exception:
        RESULTS[number] = False
        _emit(f"criterion {number}: FAIL")
        raise
    RESULTS[number] = True
    _emit(f"criterion {number}: PASS")


_capsys = None


def _emit(line):
    if _capsys is not None:
        with _capsys.disabled():
            print(line)
    else:
        print(line)


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def _is_pow2(n):
    return n & (n - 1) == 0


def _verified(res):
    return verify_certificate(res.equation, res.certificate).passed


def _cli(*argv):
    buf = StringIO()
    with redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, json.loads(buf.getvalue())


def criterion_1():
    rng = random.Random(101)
    count = 0
    for a in range(1, 13):
        for b in range(1, 13):
            if gcd(a, b) != 1:
                continue
            for _ in range(60):
                deg = rng.randint(2, 4)
                mid = [rng.randint(-9, 9) for _ in range(deg - 2)]
                a1 = rng.choice([c for c in range(-9, 10) if c])
                coeffs = (0, a1, *mid, rng.randint(1, 9))
                res = construct_general(a, b, IntPolynomial(coeffs))
                assert _verified(res), (a, b, coeffs, res.certificate)
                count += 1
    assert count == 91 * 60


def criterion_2():
    res = construct_power(2, 2)
    assert res.certificate == Certificate(2, 2, 0, 0)
    for a in range(1, 13):
        for n in range(2, 7):
            res = construct_power(a, n)
            assert res.equation == EquationSpec(a, 1, IntPolynomial.monomial(1, n))
            assert _verified(res), (a, n, res.certificate)


def criterion_3():
    seen = 0
    for a in range(1, 11):
        for b in range(1, 11):
            if gcd(a, b) != 1:
                continue
            for c in range(1, 7):
                if not (_is_pow2(gcd(a, c)) and _is_pow2(gcd(b, c))):
                    continue
                try:
                    res = construct_cz2(a, b, c)
                except HypothesisUnsatisfied:
                    raise AssertionError(f"t-scan failed for {(a, b, c)}")
                assert {res.equation.a, res.equation.b} == {a, b}
                assert res.equation.p == IntPolynomial.monomial(c, 2)
                assert _verified(res), (a, b, c)
                seen += 1
    assert seen > 0
    for a, b, c in [(2, 3, 1), (2, 5, 3), (2, 9, 1), (2, 3, 3)]:
        res = construct_czp(a, b, c, 3)
        assert res.equation == EquationSpec(a, b, IntPolynomial.monomial(c, 3))
        assert _verified(res), (a, b, c)


def criterion_4():
    rng = random.Random(404)
    done = 0
    while done < 50:
        a, b, c = rng.randint(1, 30), rng.randint(1, 30), rng.randint(1, 12)
        g = gcd(a, b)
        if not (_is_pow2(gcd(c, a // g)) and _is_pow2(gcd(c, b // g))):
            continue
        chain, res = construct_scaled_cz2(a, b, c)
        assert _verified(res)
        red = chain.reduced
        assert (red.a, red.b) == (a // g, b // g)
        sols = brute_reduced_solutions(red.a, red.b, red.p, 40)
        for s in sols:
            assert red.is_solution(*s)
            x, y, z = chain.lift(s)
            assert a * x + b * y == c * z * z, (a, b, c, s)
        done += 1


def criterion_5():
    cases = [
        ("1", "4", "z^2+3z+2", "builtin:example3", 0),
        ("3", "1", "z^2-1", "builtin:example2:3,1", 0),
        ("5", "1", "z^4-1", "builtin:example2:5,1", 0),
        ("1", "1", "z^2+z+1", "builtin:parity", 0),
        ("1", "1", "z^2", "builtin:parity", 1),
    ]
    for a, b, p, col, expected in cases:
        code, out = _cli("check-colouring", "--a", a, "--b", b, "--poly", p, "--colouring", col)
        assert code == expected, (a, b, p, col, out)
    code, out = _cli("check-colouring", "--a", "1", "--b", "1", "--poly", "z^2",
                     "--colouring", "builtin:parity")
    assert out["violations"] == [{"residues": [0, 0, 0], "colour": "+", "lift": [2, 2, 2]}]


def criterion_6():
    rng = random.Random(606)
    checked = 0
    for a in range(1, 7):
        for b in range(1, 7):
            if gcd(a, b) != 1:
                continue
            for d in range(1, 13):
                for u in range(1, 13):
                    deg = rng.choice([2, 3])
                    coeffs = [rng.randint(-5, 5) for _ in range(deg)] + [rng.randint(1, 5)]
                    e = EquationSpec(a, b, IntPolynomial(tuple(coeffs)))
                    c = Certificate(d, u, rng.randrange(d), rng.randrange(u))
                    fast = [cond.passed for cond in verify_certificate(e, c).conditions]
                    assert fast == direct_conditions(e, c, terms=1000), (e, c)
                    checked += 1
    assert checked == 23 * 144


def criterion_7():
    e = EquationSpec(1, 1, parse_poly("z^2"))
    assert construct_solution_in_class(e, 2, 0, 10) == (50, 50, 10)
    e = EquationSpec(2, 3, parse_poly("z^2+z"))
    assert construct_solution_in_class(e, 6, 0, 1) == (324, 228, 36)
    rng = random.Random(707)
    done = 0
    while done < 200:
        a, b, d = rng.randint(1, 10), rng.randint(1, 10), rng.randint(1, 8)
        if gcd(a, b) != 1:
            continue
        deg = rng.choice([2, 3])
        coeffs = [rng.randint(-6, 6) for _ in range(deg)] + [rng.randint(1, 6)]
        e = EquationSpec(a, b, IntPolynomial(tuple(coeffs)))
        classes = [t for t in range(d) if ((a + b) * t - e.p(t)) % d == 0]
        if not classes:
            continue
        t, K = rng.choice(classes), rng.randint(1, 10**4)
        x, y, z = construct_solution_in_class(e, d, t, K)
        assert a * x + b * y == e.p(z)
        assert min(x, y, z) >= K
        assert x % d == y % d == z % d == t
        done += 1


def criterion_8():
    tuples = 0
    for u in range(1, 61):
        for mp in range(1, 60 // u + 1):
            if gcd(u, mp) != 1:
                continue
            m = u * mp
            for a1 in range(1, 9):
                if gcd(a1, mp) != 1:
                    continue
                for a2 in range(1, 9):
                    if gcd(a2, mp) != 1:
                        continue
                    for v in range(u):
                        for C in range((a1 + a2) * v % u, m, u):
                            cls = np.arange(v, m, u)
                            partners = [resclass_partner(u, mp, a1, a2, C, v, int(g1)) for g1 in cls]
                            # the map lands in the class and hits every member once
                            assert sorted(partners) == cls.tolist()
                            # uniqueness: scanning the whole class finds exactly one partner
                            hits = (a1 * cls[:, None] + a2 * cls[None, :] - C) % m == 0
                            assert (hits.sum(axis=1) == 1).all()
                            assert (cls[hits.argmax(axis=1)] == np.array(partners)).all()
                            tuples += 1
    assert tuples > 0


def _naive_mono_np(eq, colour, N):
    vals = np.arange(1, N + 1, dtype=np.int64)
    cols = np.array([colour(int(n)) for n in vals])
    out = []
    for z in range(1, N + 1):
        hit = (eq.a * vals[:, None] + eq.b * vals[None, :] == eq.p(z))
        hit &= (cols[:, None] == cols[z - 1]) & (cols[None, :] == cols[z - 1])
        for i, j in zip(*np.nonzero(hit)):
            out.append((int(vals[i]), int(vals[j]), z, int(cols[z - 1])))
    return out


def criterion_9():
    e = EquationSpec(1, 1, parse_poly("z^2"))
    assert len(enumerate_mono_solutions(e, builtin_colouring("const"), 5)) == 5
    rng = random.Random(909)
    colourings = [
        builtin_colouring("const"),
        builtin_colouring("parity"),
        builtin_colouring("example3"),
        lambda n: 1 if bin(n).count("1") % 2 else -1,
        lambda n: 1 if (n * 2654435761) % 7 < 3 else -1,
    ]
    for _ in range(30):
        deg = rng.choice([2, 3])
        coeffs = [rng.randint(-4, 4) for _ in range(deg)] + [rng.randint(1, 3)]
        e = EquationSpec(rng.randint(1, 8), rng.randint(1, 8), IntPolynomial(tuple(coeffs)))
        N = rng.randint(20, 60)
        for col in colourings:
            got = [(s.x, s.y, s.z, s.colour) for s in enumerate_mono_solutions(e, col, N)]
            assert got == _naive_mono_np(e, col, N), (e, N)


def criterion_10():
    e = EquationSpec(1, 1, parse_poly("z^2"))
    for m in range(1, 11):
        assert search_avoiding_colouring(e, m) is None
    rng = random.Random(1010)
    for _ in range(10):
        deg = rng.choice([2, 3])
        coeffs = [rng.randint(-4, 4) for _ in range(deg)] + [rng.randint(1, 3)]
        e = EquationSpec(rng.randint(1, 8), rng.randint(1, 8), IntPolynomial(tuple(coeffs)))
        for m in range(1, 13):
            found = search_avoiding_colouring(e, m)
            brute = avoiding_sign_vectors(e, m)
            assert (found is None) == (not brute), (e, m)
            if found is not None:
                plus = sum(1 << r for r in range(m) if found.signs[r] == 1)
                assert plus in brute
                assert check_periodic_avoidance(e, found, lift_budget=1).avoids


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number):
    report(number, CRITERIA[number - 1])


if __name__ == "__main__":
    failed = 0
    for i, fn in enumerate(CRITERIA, 1):
        try:
            report(i, fn)
        except Exception as exc:
            failed += 1
            print(f"  {type(exc).__name__}: {exc}")
    sys.exit(1 if failed else 0)
