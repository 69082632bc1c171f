"""Explicit certificate recipes and the constructive lemmas behind them."""

from dataclasses import dataclass
from math import gcd

from .arith import bezout_bounded, crt, factorize, is_prime, mod_inverse, p_adic_valuation
from .certificate import Certificate, check_standing_hypotheses
from .errors import BelowThreshold, BudgetExceeded, HypothesisUnsatisfied, PreconditionError
from .poly import EquationSpec, IntPolynomial, scale_reduce

DEFAULT_SCAN_BUDGET = 10**7


@dataclass(frozen=True)
class ConstructionResult:
    certificate: Certificate
    swapped: bool
    method: str
    equation: EquationSpec  # the (possibly swapped) equation the certificate is for

    def as_dict(self):
        return {"method": self.method, "swapped": self.swapped,
                "certificate": self.certificate.as_dict()}


@dataclass(frozen=True)
class ReductionChain:
    """Scaling steps from the original equation to the one certified."""

    original: EquationSpec
    scale: int
    reduced: EquationSpec

    def lift(self, solution):
        return tuple(self.scale * s for s in solution)

    def as_dict(self):
        return {"original": _eq_dict(self.original), "scale": self.scale,
                "reduced": _eq_dict(self.reduced)}


def _eq_dict(eq):
    return {"a": eq.a, "b": eq.b, "poly": eq.p.to_text()}


def _require_coprime(a, b):
    if a < 1 or b < 1:
        raise PreconditionError("a and b must be positive")
    if gcd(a, b) != 1:
        raise PreconditionError(f"gcd(a, b) = {gcd(a, b)} != 1")


def construct_general(a, b, p):
    """Certificate for ``a*x + b*y = p(z)`` when the linear coefficient ``a_1`` is nonzero.

    Every prime of ``a`` (always including 2) and of ``b`` gets exponent
    ``max(own exponent, v(a_1) + 1)`` in ``d``; ``u`` is chosen so that
    ``v_q(m) = v_q(u)`` at each of those primes.  A nonzero constant term is
    allowed when both ``d`` and ``u`` divide it.
    """
    _require_coprime(a, b)
    check_standing_hypotheses(EquationSpec(a, b, p))
    a1 = p.coeff(1)
    if a1 == 0:
        raise PreconditionError("a_1 = 0: linear coefficient must be nonzero")
    swapped = a % 2 == 1 and b % 2 == 0
    if swapped:
        a, b = b, a
    fa, fb = factorize(a).as_dict(), factorize(b).as_dict()
    fa.setdefault(2, 0)
    d = u = 1
    for q, alpha in fa.items():
        w = p_adic_valuation(q, a1)
        d *= q ** max(alpha, w + 1)
        u *= q ** max(w, 2 * w + 1 - alpha)
    for q, gamma in fb.items():
        w = p_adic_valuation(q, a1)
        d *= q ** max(gamma, w + 1)
        u *= q ** max(gamma + w, 2 * w + 1)
    a0 = p.coeff(0)
    if a0 % d or a0 % u:
        raise PreconditionError(f"constant term a_0={a0} must be divisible by d={d} and u={u}")
    eq = EquationSpec(a, b, p)
    return ConstructionResult(Certificate(d, u, 0, 0), swapped, "general", eq)


def construct_power(a, n, alpha_prime=None):
    """Certificate for ``a*x + y = z**n``.

    ``alpha_prime`` defaults to ``ceil(v_2(a) / n)``; any value with
    ``alpha_prime * n >= v_2(a)`` works (and it must be 0 when ``a`` is odd).
    """
    if a < 1 or n < 2:
        raise PreconditionError("need a >= 1 and n >= 2")
    alpha = p_adic_valuation(2, a)
    if alpha_prime is None:
        alpha_prime = -(-alpha // n)
    if alpha == 0 and alpha_prime != 0:
        raise PreconditionError("alpha' must be 0 when a is odd")
    if alpha_prime * n < alpha:
        raise PreconditionError(f"alpha'={alpha_prime} too small: need alpha'*n >= {alpha}")
    alpha0 = alpha_prime * n - alpha
    odd_a = a >> alpha  # a'' = a' * prod p_i^alpha_i
    d = 2**alpha_prime * odd_a
    u = 2**alpha0
    for q in factorize(odd_a).primes:
        if n % q == 0:
            u *= q ** p_adic_valuation(q, n)
    t, _ = crt([(0, 2**alpha_prime), (1, odd_a)])
    v = mod_inverse(a + 1, u) * pow(t, n, u) % u
    eq = EquationSpec(a, 1, IntPolynomial.monomial(1, n))
    return ConstructionResult(Certificate(d, u, t, v), False, "power", eq)


def split_valuation(b, q):
    """Write ``b = q**(q*n - eps) * B`` with ``0 <= eps < q``; return ``(n, eps, B)``."""
    nu = p_adic_valuation(q, b)
    n = -(-nu // q)
    return n, q * n - nu, b // q**nu


def construct_czp(a, b, c, q, budget=DEFAULT_SCAN_BUDGET):
    """Certificate for ``a*x + b*y = c*z**q`` with ``q`` prime.

    Scans ``t`` in ``[0, a*B*q**n)`` for ``t = 0 mod q**n``,
    ``t**(q-1) = a/c mod B`` and ``t**(q-1) = b/c mod a``.
    """
    _require_coprime(a, b)
    if c < 1:
        raise PreconditionError("c must be positive")
    if not is_prime(q):
        raise PreconditionError(f"q={q} is not prime")
    if a % q == 0:
        raise PreconditionError(f"q={q} divides a={a}")
    if gcd(a, c) != 1:
        raise PreconditionError(f"gcd(a, c) = {gcd(a, c)} != 1")
    n, _, big_b = split_valuation(b, q)
    if gcd(big_b, c) != 1:
        raise PreconditionError(f"gcd(B, c) = {gcd(big_b, c)} != 1 (B = {big_b})")
    d = a * big_b * q**n
    if d // q**n > budget:
        raise BudgetExceeded(f"t-scan over {d} values exceeds budget {budget}")
    target_b = a * mod_inverse(c, big_b) % big_b
    target_a = b * mod_inverse(c, a) % a
    t = None
    for cand in range(0, d, q**n):
        if (pow(cand, q - 1, big_b) == target_b % big_b
                and pow(cand, q - 1, a) == target_a % a):
            t = cand
            break
    if t is None:
        raise HypothesisUnsatisfied(
            f"no t in [0, {d}) satisfies the congruence system for ({a}, {b}, {c}, q={q})")
    nu_c = p_adic_valuation(q, c)
    two_c = p_adic_valuation(2, c)
    u = q ** (nu_c + q * n) * big_b
    if q != 2:
        u *= 2**two_c
    v, _ = crt([(0, q ** (nu_c + q * n)), (0, 2**two_c), (t, big_b)])
    eq = EquationSpec(a, b, IntPolynomial.monomial(c, q))
    return ConstructionResult(Certificate(d, u, t, v % u), False, "czp", eq)


def construct_cz2(a, b, c):
    """Certificate for ``a*x + b*y = c*z**2`` when ``gcd(a,c)`` and ``gcd(b,c)`` are powers of 2."""
    _require_coprime(a, b)
    for name, g in (("gcd(a, c)", gcd(a, c)), ("gcd(b, c)", gcd(b, c))):
        if g & (g - 1):
            raise PreconditionError(f"{name} = {g} is not a power of two")
    swapped = a % 2 == 0
    if swapped:
        a, b = b, a
    res = construct_czp(a, b, c, 2)
    return ConstructionResult(res.certificate, swapped, "cz2", res.equation)


def construct_scaled_cz2(a, b, c):
    """Certificate for ``a*x + b*y = c*z**2`` after dividing out ``g = gcd(a, b)``.

    Returns ``(chain, result)``; solutions of ``chain.reduced`` lift to the
    original equation through ``chain.lift``.
    """
    if min(a, b, c) < 1:
        raise PreconditionError("a, b, c must be positive")
    g = gcd(a, b)
    for name, h in (("gcd(c, a/g)", gcd(c, a // g)), ("gcd(c, b/g)", gcd(c, b // g))):
        if h & (h - 1):
            raise PreconditionError(f"{name} = {h} is not a power of two")
    p = IntPolynomial.monomial(c, 2)
    reduced = scale_reduce(a // g, b // g, g, p)
    chain = ReductionChain(EquationSpec(a, b, p), g, reduced)
    res = construct_cz2(reduced.a, reduced.b, reduced.p.leading)
    return chain, ConstructionResult(res.certificate, res.swapped, "scaled-cz2", res.equation)


def construct_solution_in_class(eq, d, t, K):
    """A solution with ``x, y, z >= K`` all congruent to ``t`` mod ``d``.

    Takes the smallest admissible ``z``, splits the excess
    ``p(z) - (a+b)z = l*d`` as ``l = l1*2ab + l2`` and distributes it with a
    bounded Bezout pair.
    """
    check_standing_hypotheses(eq)
    a, b, p = eq.a, eq.b, eq.p
    if d < 1 or K < 1:
        raise PreconditionError("d and K must be positive")
    if (p(t) - (a + b) * t) % d:
        raise PreconditionError(f"(a+b)t = {(a + b) * t} is not p(t) = {p(t)} mod {d}")
    z = K + (t - K) % d
    slack = 4 * a * a * b * b * d
    while p(z) < (a + b) * z + slack:
        z += d
    ell = (p(z) - (a + b) * z) // d
    ell1, ell2 = divmod(ell, 2 * a * b)
    r, s = bezout_bounded(a, b)
    x = z + (ell1 * b + ell2 * r) * d
    y = z + (ell1 * a + ell2 * s) * d
    return x, y, z


def find_value_in_gap(p, d, t, delta_num, delta_den, x):
    """Smallest positive ``z = t mod d`` with ``p(z) >= x``, provided ``p(z) <= (1+delta) x``."""
    if p.degree < 1 or p.leading <= 0:
        raise PreconditionError("need degree >= 1 and positive leading coefficient")
    if d < 1 or delta_num < 1 or delta_den < 1:
        raise PreconditionError("d and delta must be positive")
    z = 1 + (t - 1) % d
    while p(z) < x:
        z += d
    if p(z) * delta_den > x * (delta_den + delta_num):
        raise BelowThreshold(
            f"x={x} below the gap threshold: p({z}) = {p(z)} exceeds (1+{delta_num}/{delta_den})x")
    return z


def resclass_partner(u, m_prime, a1, a2, C, v, gamma1):
    """The unique ``gamma2 = v mod u`` in ``[0, u*m')`` with ``a1*gamma1 + a2*gamma2 = C mod u*m'``."""
    if min(u, m_prime, a1, a2) < 1:
        raise PreconditionError("u, m', a1, a2 must be positive")
    for name, g in (("gcd(u, m')", gcd(u, m_prime)), ("gcd(a1, m')", gcd(a1, m_prime)),
                    ("gcd(a2, m')", gcd(a2, m_prime))):
        if g != 1:
            raise PreconditionError(f"{name} = {g} != 1")
    if ((a1 + a2) * v - C) % u:
        raise PreconditionError("(a1+a2)v is not C mod u")
    m = u * m_prime
    if not 0 <= gamma1 < m or (gamma1 - v) % u:
        raise PreconditionError(f"gamma1={gamma1} is not in the class {v} mod {u} of [0, {m})")
    # gamma2 = v + i*u; only the congruence mod m' constrains i.
    rhs = (C - a1 * gamma1 - a2 * v) % m_prime
    i = rhs * mod_inverse(a2 * u, m_prime) % m_prime
    return (v + i * u) % m
