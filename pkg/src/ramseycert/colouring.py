"""2-colourings of the positive integers and monochromatic solutions.

A periodic colouring mod ``m`` is decided exactly by reducing the equation
mod ``m``: if no residue triple ``(x, y, z)`` with ``a*x + b*y = p(z) mod m``
is monochromatic, no integer solution is either.  The converse needs a
concrete lift, which :func:`lift_residue_triple` searches for.
"""

from dataclasses import dataclass, field
from math import gcd

from .arith import is_prime, mod_inverse
from .errors import PreconditionError

DEFAULT_SEARCH_CEILING = 24
DEFAULT_LIFT_BUDGET = 1000


def _sign_char(s):
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class PeriodicColouring:
    modulus: int
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if self.modulus < 1 or len(self.signs) != self.modulus:
            raise PreconditionError(f"need {self.modulus} signs, got {len(self.signs)}")
        if any(s not in (1, -1) for s in self.signs):
            raise PreconditionError("signs must be +1 or -1")

    @classmethod
    def from_text(cls, text):
        text = text.strip()
        if not text or set(text) - {"+", "-"}:
            raise PreconditionError(f"bad sign string {text!r}")
        return cls(len(text), tuple(1 if ch == "+" else -1 for ch in text))

    def __call__(self, n):
        return self.signs[n % self.modulus]

    def flipped(self):
        return PeriodicColouring(self.modulus, tuple(-s for s in self.signs))

    def to_text(self):
        return "".join(_sign_char(s) for s in self.signs)


@dataclass(frozen=True)
class TableColouring:
    """An arbitrary colouring of ``1..N`` given as an explicit table."""

    signs: tuple

    def __call__(self, n):
        if not 1 <= n <= len(self.signs):
            raise PreconditionError(f"{n} is outside the table range 1..{len(self.signs)}")
        return self.signs[n - 1]

    @property
    def size(self):
        return len(self.signs)


@dataclass(frozen=True)
class MonoSolution:
    x: int
    y: int
    z: int
    colour: int

    def as_dict(self):
        return {"x": self.x, "y": self.y, "z": self.z, "colour": _sign_char(self.colour)}


@dataclass(frozen=True)
class AvoidanceVerdict:
    violations: tuple = ()
    lifted: tuple = ()  # per violation: (x, y, z) or None
    colours: tuple = field(default=(), compare=False)

    @property
    def avoids(self):
        return not self.violations

    @property
    def status(self):
        return "avoids" if self.avoids else "residue-violations"

    def as_dict(self):
        return {
            "status": self.status,
            "violations": [
                {"residues": list(v), "colour": _sign_char(c),
                 "lift": list(l) if l is not None else "no lift found within bound"}
                for v, c, l in zip(self.violations, self.colours, self.lifted)
            ],
        }


def enumerate_mono_solutions(eq, colouring, N):
    """All monochromatic solutions with ``1 <= x, y, z <= N``, ordered by ``(z, x)``."""
    if N < 1:
        raise PreconditionError("N must be positive")
    a, b = eq.a, eq.b
    g = gcd(a, b)
    step = b // g
    inv = mod_inverse(a // g, step)
    out = []
    for z in range(1, N + 1):
        value = eq.p(z)
        if value % g:
            continue
        # x runs over one residue mod b/g, with 1 <= y = (value - a x)/b <= N
        x0 = (value // g) * inv % step
        lo = max(1, -((b * N - value) // a))
        hi = min(N, (value - b) // a)
        if lo > hi:
            continue
        x = lo + (x0 - lo) % step
        colour = colouring(z)
        while x <= hi:
            y = (value - a * x) // b
            if colouring(x) == colour and colouring(y) == colour:
                out.append(MonoSolution(x, y, z, colour))
            x += step
    return out


def residue_triples(eq, m):
    """Residue triples ``(x, y, z)`` mod ``m`` with ``a*x + b*y = p(z) mod m``."""
    values = [eq.p.eval_mod(z, m) for z in range(m)]
    by_value = {}
    for z, r in enumerate(values):
        by_value.setdefault(r, []).append(z)
    triples = []
    for x in range(m):
        for y in range(m):
            for z in by_value.get((eq.a * x + eq.b * y) % m, ()):
                triples.append((x, y, z))
    return triples


def lift_residue_triple(eq, m, triple, K=1, budget=DEFAULT_LIFT_BUDGET):
    """Find an integer solution ``>= K`` realizing ``triple`` mod ``m``, or None.

    Tries ``budget`` values of ``z`` in the class, smallest first, and for each
    solves ``a*alpha + b*beta = N/m`` over the nonnegative integers.
    """
    xr, yr, zr = triple
    a, b = eq.a, eq.b
    if (a * xr + b * yr - eq.p(zr)) % m:
        raise PreconditionError(f"{triple} does not solve the equation mod {m}")
    start = max(K, 1)
    x0, y0, z0 = (start + (r - start) % m for r in triple)
    g = gcd(a, b)
    ag, bg = a // g, b // g
    inv = mod_inverse(ag, bg)
    for i in range(budget):
        z = z0 + i * m
        rest = eq.p(z) - a * x0 - b * y0
        if rest < 0 or rest % m:
            continue
        target = rest // m
        if target % g:
            continue
        alpha = (target // g) * inv % bg
        beta = (target - a * alpha) // b
        if beta >= 0:
            x, y = x0 + alpha * m, y0 + beta * m
            assert eq.is_solution(x, y, z)
            return x, y, z
    return None


def check_periodic_avoidance(eq, col, K=1, lift_budget=DEFAULT_LIFT_BUDGET):
    m = col.modulus
    violations, colours, lifted = [], [], []
    for x, y, z in residue_triples(eq, m):
        s = col.signs[x]
        if col.signs[y] == s and col.signs[z] == s:
            violations.append((x, y, z))
            colours.append(s)
            lifted.append(lift_residue_triple(eq, m, (x, y, z), K, lift_budget))
    return AvoidanceVerdict(tuple(violations), tuple(lifted), tuple(colours))


def nae_constraints(eq, m):
    """Distinct-residue sets that must not be monochromatic, deduplicated and sorted."""
    return sorted({tuple(sorted(set(t))) for t in residue_triples(eq, m)})


def search_avoiding_colouring(eq, m, ceiling=DEFAULT_SEARCH_CEILING):
    """A colouring mod ``m`` with no monochromatic residue triple, or None.

    Backtracking over residues in ascending order, +1 before -1, with unit
    propagation on the not-all-equal constraints.  The first constrained
    residue is fixed to +1 and unconstrained residues are +1.
    """
    if m < 1:
        raise PreconditionError("modulus must be positive")
    if m > ceiling:
        raise PreconditionError(f"modulus {m} exceeds search ceiling {ceiling}")
    constraints = nae_constraints(eq, m)
    if any(len(c) == 1 for c in constraints):
        return None
    watch = {}
    for c in constraints:
        for r in c:
            watch.setdefault(r, []).append(c)
    order = sorted(watch)
    signs = {}

    def assign(r, s, trail):
        # Returns False on conflict; every assignment made is pushed on trail.
        queue = [(r, s)]
        while queue:
            r, s = queue.pop()
            if r in signs:
                if signs[r] != s:
                    return False
                continue
            signs[r] = s
            trail.append(r)
            for c in watch[r]:
                free = [q for q in c if q not in signs]
                fixed = {signs[q] for q in c if q in signs}
                if len(fixed) == 2:
                    continue
                if not free:
                    return False
                if len(free) == 1:
                    queue.append((free[0], -s))
        return True

    def undo(trail):
        for r in trail:
            del signs[r]

    def solve(pos):
        while pos < len(order) and order[pos] in signs:
            pos += 1
        if pos == len(order):
            return True
        choices = (1,) if pos == 0 else (1, -1)
        for s in choices:
            trail = []
            if assign(order[pos], s, trail) and solve(pos + 1):
                return True
            undo(trail)
        return False

    if not solve(0):
        return None
    return PeriodicColouring(m, tuple(signs.get(r, 1) for r in range(m)))


def builtin_colouring(name, *params):
    """Named colourings: ``const``, ``parity``, ``example3``, ``example2(q, n)``."""
    if name == "const":
        return PeriodicColouring(1, (1,))
    if name == "parity":
        return PeriodicColouring(2, (1, -1))
    if name == "example3":
        return PeriodicColouring(4, (1, 1, -1, -1))
    if name == "example2":
        if len(params) == 1:
            params = (params[0], 1)
        if len(params) != 2:
            raise PreconditionError("example2 takes (q, n)")
        q, n = (int(x) for x in params)
        if not is_prime(q) or n < 1:
            raise PreconditionError(f"example2 needs a prime q and n >= 1, got ({q}, {n})")
        # + on multiples of q; written with period q**n to match the exponent.
        m = q**n
        return PeriodicColouring(m, tuple(1 if r % q == 0 else -1 for r in range(m)))
    raise PreconditionError(f"unknown builtin colouring {name!r}")


def parse_builtin(spec):
    """Parse ``name`` or ``name:p1,p2`` as used on the command line."""
    name, _, args = spec.partition(":")
    params = tuple(int(x) for x in args.split(",")) if args else ()
    return builtin_colouring(name, *params)


def _read_lines(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise PreconditionError("colouring file must have exactly two non-empty lines")
    try:
        n = int(lines[0])
    except ValueError:
        raise PreconditionError(f"first line must be an integer, got {lines[0]!r}") from None
    if len(lines[1]) != n or set(lines[1]) - {"+", "-"}:
        raise PreconditionError(f"second line must be {n} characters from '+-'")
    return tuple(1 if ch == "+" else -1 for ch in lines[1])


def load_periodic(text):
    signs = _read_lines(text)
    return PeriodicColouring(len(signs), signs)


def load_table(text):
    return TableColouring(_read_lines(text))


def dump_periodic(col):
    return f"{col.modulus}\n{col.to_text()}\n"


def no_solutions_mod_gcd(eq):
    """True when ``gcd(a, b)`` divides no value of ``p``, so there are no solutions at all."""
    g = gcd(eq.a, eq.b)
    return all(eq.p.eval_mod(z, g) for z in range(g))
