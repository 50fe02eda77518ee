"""Shared fixtures: small rings, a polynomial literal helper, suite systems."""

import random

import pytest

from siggb.bench import cyclic, katsura
from siggb.cli import _ExprParser, _tokenize
from siggb.ground import TermOrder
from siggb.poly import PolyRing


def poly_of(ring, text):
    """Parse one polynomial expression in the CLI grammar."""
    return _ExprParser(_tokenize(text, 1), ring, 1).parse()


@pytest.fixture
def gf7_xy():
    return PolyRing(7, ("x", "y"), TermOrder("grevlex", 2))


@pytest.fixture
def gf7_xyz():
    return PolyRing(7, ("x", "y", "z"), TermOrder("grevlex", 3))


@pytest.fixture
def two_poly(gf7_xy):
    # x^2 - 1 and x*y - 1; reduced basis is {x - y, y^2 - 1}
    return [poly_of(gf7_xy, "x^2 - 1"), poly_of(gf7_xy, "x*y - 1")]


def random_ideal(rng, ring, max_gens=4, max_deg=3):
    """A few random dense-ish generators of bounded degree, at least one."""
    monos = []
    n = ring.nvars
    def walk(prefix, left):
        if len(prefix) == n:
            monos.append(tuple(prefix))
            return
        for e in range(left + 1):
            walk(prefix + [e], left - e)
    walk([], max_deg)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        picks = rng.sample(monos, rng.randint(1, 5))
        terms = [(m, rng.randint(1, ring.field.p - 1)) for m in picks]
        f = ring.from_terms(terms)
        if f.terms:
            gens.append(f)
    if not gens:
        gens.append(ring.one())
    return gens


def suite_systems():
    """The oracle-equivalence suite: named (label, polys) entries."""
    out = []
    for n in (3, 4, 5):
        s = cyclic(n, 7919)
        out.append((s.name, list(s.polys)))
    for k in range(1, 7):
        s = katsura(k, 7919)
        out.append((s.name, list(s.polys)))
    ring = PolyRing(7, ("x", "y"), TermOrder("grevlex", 2))
    out.append(("twopoly", [poly_of(ring, "x^2 - 1"), poly_of(ring, "x*y - 1")]))
    rng = random.Random(258071)
    r3 = PolyRing(7, ("x", "y", "z"), TermOrder("grevlex", 3))
    for i in range(20):
        out.append(("random%02d" % i, random_ideal(rng, r3)))
    return out
