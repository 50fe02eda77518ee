"""Prime fields, exponent-vector monomials, and the classical term orders.

Monomials are plain tuples of non-negative exponents, one slot per ring
variable.  A :class:`TermOrder` translates monomials into integer "key"
tuples whose lexicographic comparison realizes the order; keys add
componentwise under monomial multiplication, which is what the polynomial
layer runs on.
"""

from __future__ import annotations

from operator import add, sub

from .errors import DimensionError, DivisibilityError

# --------------------------------------------------------------------------
# prime fields
# --------------------------------------------------------------------------

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """GF(p) with elements kept as canonical int residues in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError("field modulus must be prime, got %r" % (p,))
        self.p = p

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.p)
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


# --------------------------------------------------------------------------
# monomials
# --------------------------------------------------------------------------

Monomial = tuple  # exponent vector, e.g. (2, 0, 1) for x1^2*x3


def _check_dims(a: Monomial, b: Monomial):
    if len(a) != len(b):
        raise DimensionError("monomial lengths differ: %d vs %d" % (len(a), len(b)))


def mono_one(nvars: int) -> Monomial:
    return (0,) * nvars


def mono_deg(a: Monomial) -> int:
    return sum(a)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    return tuple(map(add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact division a / b; raises DivisibilityError when b does not divide a."""
    _check_dims(a, b)
    q = tuple(map(sub, a, b))
    if any(e < 0 for e in q):
        raise DivisibilityError("%r does not divide %r" % (b, a))
    return q


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b componentwise."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    return tuple(map(max, a, b))


# --------------------------------------------------------------------------
# term orders
# --------------------------------------------------------------------------

LEX = "lex"
GRLEX = "grlex"
GREVLEX = "grevlex"

ORDER_KINDS = (LEX, GRLEX, GREVLEX)

LESS, EQUAL, GREATER = -1, 0, 1


class TermOrder:
    """One of lex / grlex / grevlex over a fixed number of variables.

    ``precedence`` lists variable indices from most to least significant;
    the default is declaration order.  ``key`` maps a monomial to an int
    tuple such that key comparison equals the order and keys are additive:
    key(a*b) == key(a) + key(b) componentwise.  That additivity is load
    bearing; the polynomial layer stores keys instead of monomials.
    """

    __slots__ = ("kind", "nvars", "precedence", "one_key", "_unrank")

    def __init__(self, kind: str, nvars: int, precedence=None):
        if kind not in ORDER_KINDS:
            raise ValueError("unknown term order %r" % (kind,))
        if nvars < 1:
            raise ValueError("need at least one variable")
        if precedence is None:
            precedence = tuple(range(nvars))
        else:
            precedence = tuple(precedence)
            if sorted(precedence) != list(range(nvars)):
                raise ValueError("precedence must be a permutation of 0..%d" % (nvars - 1))
        self.kind = kind
        self.nvars = nvars
        self.precedence = precedence
        self.one_key = self.key((0,) * nvars)
        # position of each variable inside the key tuple, for unkey
        if kind == LEX:
            self._unrank = {slot: var for slot, var in enumerate(precedence)}
        elif kind == GRLEX:
            self._unrank = {slot + 1: var for slot, var in enumerate(precedence)}
        else:
            rev = tuple(reversed(precedence))
            self._unrank = {slot + 1: var for slot, var in enumerate(rev)}

    # -- monomial <-> key ---------------------------------------------------

    def key(self, mono: Monomial):
        if len(mono) != self.nvars:
            raise DimensionError("expected %d exponents, got %d" % (self.nvars, len(mono)))
        if self.kind == LEX:
            return tuple(mono[i] for i in self.precedence)
        if self.kind == GRLEX:
            return (sum(mono),) + tuple(mono[i] for i in self.precedence)
        return (sum(mono),) + tuple(-mono[i] for i in reversed(self.precedence))

    def unkey(self, key) -> Monomial:
        out = [0] * self.nvars
        if self.kind == LEX:
            for slot, var in self._unrank.items():
                out[var] = key[slot]
        elif self.kind == GRLEX:
            for slot, var in self._unrank.items():
                out[var] = key[slot]
        else:
            for slot, var in self._unrank.items():
                out[var] = -key[slot]
        return tuple(out)

    # -- key arithmetic -----------------------------------------------------

    def key_mul(self, ka, kb):
        return tuple(map(add, ka, kb))

    def key_div(self, ka, kb):
        """Key of mono(ka) / mono(kb); assumes divisibility was checked."""
        return tuple(map(sub, ka, kb))

    def key_divides(self, ka, kb) -> bool:
        """Does mono(ka) divide mono(kb)?"""
        if self.kind == GREVLEX:
            # exponent fields are negated, so divisor fields must dominate
            for x, y in zip(ka[1:], kb[1:]):
                if x < y:
                    return False
            return True
        if self.kind == GRLEX:
            for x, y in zip(ka[1:], kb[1:]):
                if x > y:
                    return False
            return True
        for x, y in zip(ka, kb):
            if x > y:
                return False
        return True

    def key_lcm(self, ka, kb):
        if self.kind == GREVLEX:
            fields = tuple(map(min, ka[1:], kb[1:]))
            return (-sum(fields),) + fields
        if self.kind == GRLEX:
            fields = tuple(map(max, ka[1:], kb[1:]))
            return (sum(fields),) + fields
        return tuple(map(max, ka, kb))

    def key_deg(self, key) -> int:
        if self.kind == LEX:
            return sum(key)
        return key[0]

    # -- comparisons ----------------------------------------------------------

    def cmp(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LESS
        if ka > kb:
            return GREATER
        return EQUAL

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and other.kind == self.kind
            and other.nvars == self.nvars
            and other.precedence == self.precedence
        )

    def __hash__(self):
        return hash((self.kind, self.nvars, self.precedence))

    def __repr__(self):
        return "TermOrder(%r, %d)" % (self.kind, self.nvars)


def mono_cmp(a: Monomial, b: Monomial, order: TermOrder) -> int:
    """Three-way comparison under ``order``: -1, 0 or 1."""
    _check_dims(a, b)
    return order.cmp(a, b)
