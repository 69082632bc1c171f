"""Certificates ``(d, u, t, v)`` and their verifier.

The six conditions quantify over whole residue classes ``k = t (mod d)`` and
``j = v (mod u)``.  Each one only depends on ``k`` (and ``j``) modulo some
finite period, so the verifier walks one full period per condition:

* C2 looks at ``p(k+d) - p(k) mod a``, periodic in ``k`` with period ``a``;
  the class ``t + d*Z`` meets ``lcm(a, d) / d`` residues mod ``a``.
* C3 (``u | m``, ``m/u`` odd, and coprime to ``a``, ``b``, ``u``) pins the
  ``q``-adic valuation of ``m`` to that of ``u`` at every prime ``q`` of
  ``2abu`` and says nothing at other primes.  Writing ``e = v_q(u) + v_q(a)``
  this is ``p(k+d) - p(k) = 0 mod q^e`` and ``!= 0 mod q^(e+1)``, periodic
  with period ``q^(e+1)``.  A vanishing difference fails the second test.
* C5 is periodic mod ``u``; C6 is periodic mod ``b`` in both ``k`` and ``j``.
"""

from dataclasses import dataclass, field
from math import gcd, lcm

from .arith import p_adic_valuation, prime_divisors
from .errors import PreconditionError
from .poly import EquationSpec, IntPolynomial

CONDITION_NAMES = {
    1: "(a+b)t = p(t) mod d",
    2: "a | p(k+d)-p(k) for k = t mod d",
    3: "u | m, m/u odd and coprime to a, b, u",
    4: "p(v) = (a+b)v mod u",
    5: "p(k) = (a+b)v mod u for k = t mod d",
    6: "b | p(k)-aj for k = t mod d, j = v mod u",
}


@dataclass(frozen=True)
class Certificate:
    d: int
    u: int
    t: int = 0
    v: int = 0

    def __post_init__(self):
        if self.d < 1 or self.u < 1:
            raise PreconditionError("d and u must be positive")
        object.__setattr__(self, "t", self.t % self.d)
        object.__setattr__(self, "v", self.v % self.u)

    def as_dict(self):
        return {"d": self.d, "u": self.u, "t": self.t, "v": self.v}


@dataclass(frozen=True)
class ConditionResult:
    index: int
    passed: bool
    witnesses: tuple = ()

    def as_dict(self):
        return {
            "condition": self.index,
            "description": CONDITION_NAMES[self.index],
            "status": "pass" if self.passed else "fail",
            "witnesses": [list(w) if isinstance(w, tuple) else w for w in self.witnesses],
        }


@dataclass(frozen=True)
class ConditionReport:
    conditions: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return all(c.passed for c in self.conditions)

    def __getitem__(self, index):
        return self.conditions[index - 1]

    def failed(self):
        return [c.index for c in self.conditions if not c.passed]

    def as_dict(self):
        return {
            "overall": "pass" if self.passed else "fail",
            "conditions": [c.as_dict() for c in self.conditions],
        }


def check_standing_hypotheses(eq):
    if gcd(eq.a, eq.b) != 1:
        raise PreconditionError(f"gcd(a, b) = {gcd(eq.a, eq.b)} != 1")
    if eq.p.degree < 2:
        raise PreconditionError(f"degree of p is {eq.p.degree} < 2")
    if eq.p.leading <= 0:
        raise PreconditionError("leading coefficient of p must be positive")


def _result(index, witnesses):
    witnesses = tuple(sorted(witnesses))
    return ConditionResult(index, not witnesses, witnesses)


def _class_members(t, d, modulus):
    """Representatives of ``t + d*Z`` covering every residue mod ``modulus``."""
    return [t + i * d for i in range(lcm(modulus, d) // d)]


def _check_c1(eq, c):
    ok = (eq.p.eval_mod(c.t, c.d) - (eq.a + eq.b) * c.t) % c.d == 0
    return _result(1, [] if ok else [c.t])


def _check_c2(eq, c):
    a, p = eq.a, eq.p
    bad = [k for k in _class_members(c.t, c.d, a)
           if (p.eval_mod(k + c.d, a) - p.eval_mod(k, a)) % a]
    return _result(2, bad)


def _check_c3(eq, c):
    a, p = eq.a, eq.p
    bad = []
    for q in prime_divisors(2 * a * eq.b * c.u):
        e = p_adic_valuation(q, c.u) + p_adic_valuation(q, a)
        low, high = q**e, q ** (e + 1)
        for k in _class_members(c.t, c.d, high):
            r = (p.eval_mod(k + c.d, high) - p.eval_mod(k, high)) % high
            if r % low or r == 0:
                bad.append((k, q))
    return _result(3, bad)


def _check_c4(eq, c):
    ok = (eq.p.eval_mod(c.v, c.u) - (eq.a + eq.b) * c.v) % c.u == 0
    return _result(4, [] if ok else [c.v])


def _check_c5(eq, c):
    target = (eq.a + eq.b) * c.v
    bad = [k for k in _class_members(c.t, c.d, c.u)
           if (eq.p.eval_mod(k, c.u) - target) % c.u]
    return _result(5, bad)


def _check_c6(eq, c):
    b = eq.b
    ks = _class_members(c.t, c.d, b)
    js = _class_members(c.v, c.u, b)
    values = [(k, eq.p.eval_mod(k, b)) for k in ks]
    bad = [(k, j) for k, pk in values for j in js if (pk - eq.a * j) % b]
    return _result(6, bad)


_CHECKS = (_check_c1, _check_c2, _check_c3, _check_c4, _check_c5, _check_c6)


def verify_certificate(eq, cert):
    """Decide each of the six certificate conditions for ``eq``.

    Witnesses are the failing ``k`` (C1, C2, C5), ``v`` (C4), ``(k, q)``
    (C3) or ``(k, j)`` (C6) inside one period, sorted ascending.
    """
    check_standing_hypotheses(eq)
    return ConditionReport(tuple(check(eq, cert) for check in _CHECKS))


def unit_coeff_criterion(p):
    """2-Ramsey test for ``x + y = p(z)``: true iff ``p(1)*p(2)`` is even."""
    if p.degree < 1 or p.leading <= 0:
        raise PreconditionError("need degree >= 1 and positive leading coefficient")
    return p(1) * p(2) % 2 == 0


def certificate_record(eq, cert):
    return {"a": eq.a, "b": eq.b, "poly": eq.p.to_text(), **cert.as_dict()}


def certificate_from_record(record):
    eq = EquationSpec(int(record["a"]), int(record["b"]), IntPolynomial.parse(str(record["poly"])))
    cert = Certificate(int(record["d"]), int(record["u"]), int(record["t"]), int(record["v"]))
    return eq, cert
