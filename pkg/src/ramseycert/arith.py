"""Exact integer primitives: Bezout, CRT, inverses, valuations, factoring.

Everything works on Python ints, so there is no overflow at any size; only
factorization is guarded by a work budget.
"""

from dataclasses import dataclass
from math import gcd, isqrt, lcm, prod

from .errors import BudgetExceeded, InconsistentCongruences, PreconditionError

# Trial divisors tried before giving up on splitting a composite cofactor.
DEFAULT_FACTOR_BUDGET = 10**6

# Miller-Rabin with the first 13 primes as bases is exact below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple  # ((prime, exponent), ...) with primes ascending

    def __post_init__(self):
        if self.value < 1:
            raise PreconditionError("factorization value must be positive")
        last = 1
        for q, e in self.factors:
            if q <= last or e < 1 or not is_prime(q):
                raise PreconditionError(f"bad factor entry ({q}, {e})")
            last = q
        if prod(q**e for q, e in self.factors) != self.value:
            raise PreconditionError("factors do not multiply to value")

    @property
    def primes(self):
        return tuple(q for q, _ in self.factors)

    def exponent(self, q):
        for prime, e in self.factors:
            if prime == q:
                return e
        return 0

    def as_dict(self):
        return dict(self.factors)


def ext_gcd(a, b):
    """Return ``(g, r, s)`` with ``g = gcd(a, b) >= 0`` and ``r*a + s*b = g``."""
    if a == 0 and b == 0:
        raise PreconditionError("ext_gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def bezout_bounded(a, b):
    """Bezout pair ``(r, s)`` for coprime positive ``a, b`` with ``|r| <= b``, ``|s| <= a``.

    For ``b > 1``, ``r`` is the representative of ``a^-1 mod b`` in ``(-b/2, b/2]``.
    For ``b == 1`` we take ``r = 1, s = 1 - a``.
    """
    if a < 1 or b < 1:
        raise PreconditionError("bezout_bounded needs positive arguments")
    if gcd(a, b) != 1:
        raise PreconditionError(f"gcd({a}, {b}) = {gcd(a, b)} != 1")
    if b == 1:
        return 1, 1 - a
    r = pow(a, -1, b)
    if 2 * r > b:
        r -= b
    s = (1 - r * a) // b
    return r, s


def mod_inverse(a, m):
    """Inverse of ``a`` modulo ``m`` as a residue in ``[0, m)``."""
    if m < 1:
        raise PreconditionError("modulus must be positive")
    if gcd(a, m) != 1:
        raise PreconditionError(f"{a} is not invertible modulo {m}")
    if m == 1:
        return 0
    return pow(a, -1, m)


def crt(congruences):
    """Solve ``x = r_i (mod m_i)`` for all i; moduli need not be coprime.

    Returns ``(x, M)`` with ``M`` the lcm of the moduli and ``0 <= x < M``.
    """
    system = [(int(r), int(m)) for r, m in congruences]
    if not system:
        raise PreconditionError("crt needs at least one congruence")
    for _, m in system:
        if m < 1:
            raise PreconditionError(f"modulus {m} is not positive")
    # Pairwise consistency is necessary and sufficient for a common solution.
    for i in range(len(system)):
        ri, mi = system[i]
        for j in range(i + 1, len(system)):
            rj, mj = system[j]
            if (ri - rj) % gcd(mi, mj):
                raise InconsistentCongruences(system[i], system[j])
    x, big_m = system[0][0] % system[0][1], system[0][1]
    for r, m in system[1:]:
        g = gcd(big_m, m)
        # x + big_m*k = r (mod m)  ->  (big_m/g)*k = (r-x)/g (mod m/g)
        step = m // g
        k = ((r - x) // g) * mod_inverse(big_m // g, step) % step
        x += big_m * k
        big_m = lcm(big_m, m)
        x %= big_m
    return x, big_m


def p_adic_valuation(q, n):
    """Largest ``e`` with ``q**e`` dividing ``n``; ``q`` must be prime."""
    if n == 0:
        raise PreconditionError("valuation of 0 is infinite")
    if q < 2:
        raise PreconditionError(f"{q} is not a prime")
    n = abs(n)
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


def is_prime(n):
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= _MR_LIMIT:
        raise BudgetExceeded(f"primality of {n} is beyond the deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n, budget=None):
    """Trial-division factorization of a positive integer.

    ``budget`` bounds the largest trial divisor; a composite cofactor left
    over after that raises :class:`BudgetExceeded`.
    """
    if n < 1:
        raise PreconditionError("factorize needs n >= 1")
    if budget is None:
        budget = DEFAULT_FACTOR_BUDGET
    value = n
    factors = []
    for q in (2, 3):
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        if e:
            factors.append((q, e))
    q, step = 5, 2
    limit = min(isqrt(n), budget)
    while q <= limit:
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            factors.append((q, e))
            limit = min(isqrt(n), budget)
        q += step
        step = 6 - step
    if n > 1:
        if q * q <= n and not is_prime(n):
            raise BudgetExceeded(f"factorization budget exceeded for {value}")
        factors.append((n, 1))
    return Factorization(value, tuple(factors))


def radical(n):
    """Product of the distinct primes dividing ``n``."""
    return prod(factorize(n).primes)


def prime_divisors(n):
    return factorize(abs(n)).primes if n else ()
