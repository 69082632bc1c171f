"""Integer polynomials and the equation triple ``a*x + b*y = p(z)``."""

import re
from dataclasses import dataclass

from .errors import PreconditionError


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``z**i``."""

    coeffs: tuple

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def parse(cls, text):
        return parse_poly(text)

    @classmethod
    def monomial(cls, coefficient, power):
        return cls((0,) * power + (coefficient,))

    @property
    def degree(self):
        # The zero polynomial reports degree 0.
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x, m):
        """``p(x) mod m`` without forming the full value."""
        x %= m
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    def to_text(self):
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("z" if i == 1 else f"z^{i}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


_TERM = re.compile(r"^(\d*)\*?(z(?:\^(\d+))?)?$")


def parse_poly(text):
    """Parse ``"2,3,1"`` (low-to-high coefficients) or ``"z^2+3*z+2"``."""
    s = text.replace(" ", "")
    if not s:
        raise PreconditionError("empty polynomial")
    if "z" not in s:
        try:
            return IntPolynomial(tuple(int(c) for c in s.split(",")))
        except ValueError:
            raise PreconditionError(f"cannot parse polynomial {text!r}") from None
    s = s.replace("**", "^")
    coeffs = {}
    for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise PreconditionError(f"cannot parse term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if sign == "-":
            c = -c
        power = 0
        if m.group(2):
            power = int(m.group(3)) if m.group(3) else 1
        coeffs[power] = coeffs.get(power, 0) + c
    if re.sub(r"([+-]?)([^+-]+)", "", s):
        raise PreconditionError(f"cannot parse polynomial {text!r}")
    top = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(i, 0) for i in range(top + 1)))


@dataclass(frozen=True)
class EquationSpec:
    """The equation ``a*x + b*y = p(z)`` with positive ``a`` and ``b``."""

    a: int
    b: int
    p: IntPolynomial

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise PreconditionError("coefficients a and b must be positive")
        if not isinstance(self.p, IntPolynomial):
            object.__setattr__(self, "p", IntPolynomial(tuple(self.p)))

    def swapped(self):
        return EquationSpec(self.b, self.a, self.p)

    def is_solution(self, x, y, z):
        return self.a * x + self.b * y == self.p(z)

    def __str__(self):
        return f"{self.a}x + {self.b}y = {self.p}"


def evaluate(p, x):
    return p(x)


def difference_quotient(eq, d, k):
    """``(p(k+d) - p(k)) / a``, which must be an exact integer."""
    diff = eq.p(k + d) - eq.p(k)
    if diff % eq.a:
        raise PreconditionError(f"a={eq.a} does not divide p({k + d}) - p({k}) = {diff}")
    return diff // eq.a


def scale_reduce(a, b, c, p):
    """Reduce ``ac*x + bc*y = p(z)`` to ``a*x + b*y = p(c*z) / c**2``.

    Requires ``c | a_1`` and ``c**2 | a_0``; higher coefficients scale by
    ``c**(i-2)`` and stay integral.
    """
    if c < 1:
        raise PreconditionError("scale factor must be positive")
    if p.coeff(1) % c:
        raise PreconditionError(f"c={c} does not divide a_1={p.coeff(1)}")
    if p.coeff(0) % (c * c):
        raise PreconditionError(f"c^2={c * c} does not divide a_0={p.coeff(0)}")
    new = [p.coeff(0) // (c * c), p.coeff(1) // c]
    new += [p.coeff(i) * c ** (i - 2) for i in range(2, p.degree + 1)]
    return EquationSpec(a, b, IntPolynomial(tuple(new)))


def lift_scaled_solution(c, sol):
    """Map a solution of the reduced equation back to ``ac*x + bc*y = p(z)``."""
    return tuple(c * v for v in sol)
