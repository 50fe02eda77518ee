"""Command-line front end.

Two subcommands: ``run`` takes a problem file, ``bench`` takes a family
name and index.  Both drive the engine under the selected configuration,
print the reduced basis and a stats block, and can cross-check the result
against the classical oracle.  Exit codes: 0 success, 1 verification
failure, 2 usage or parse error, 3 pair cap exceeded.

Problem file grammar::

    field <p>
    vars <name>(,<name>)*
    order lex|grlex|grevlex
    polys:
    <expr>
    <expr> ...

Expressions use integers, declared variable names, ``^`` with positive
integer exponents, ``*``, ``+``, ``-`` and parentheses.  ``#`` starts a
comment anywhere on a line.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .bench import make_system
from .engine import CRITERIA, EngineConfig, extract_gb, signature_groebner
from .errors import CapExceededError, ConfigError, ProblemParseError
from .ground import ORDER_KINDS, TermOrder, _is_prime
from .oracle import buchberger, reduce_gb
from .pairs import STRATEGIES
from .poly import PolyRing, Polynomial, render_poly
from .sig import POT, SCHREYER


@dataclass
class ProblemFile:
    characteristic: int
    variables: tuple
    order_name: str
    polys: tuple

    @property
    def ring(self) -> PolyRing:
        return self.polys[0].ring if self.polys else PolyRing(
            self.characteristic, list(self.variables),
            TermOrder(self.order_name, len(self.variables)))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()])|(\S))")


def _tokenize(text: str, line: int):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        num, name, op, bad = m.groups()
        if bad is not None:
            raise ProblemParseError("unexpected character %r" % bad, line)
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append((op, op))
    return out


class _ExprParser:
    """Recursive descent over one polynomial line."""

    def __init__(self, tokens, ring: PolyRing, line: int):
        self.toks = tokens
        self.i = 0
        self.ring = ring
        self.line = line
        self.gens = {n: ring.gen(j) for j, n in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg):
        raise ProblemParseError(msg, self.line)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.i != len(self.toks):
            self.fail("trailing input after expression")
        return p

    def expr(self):
        if self.peek() == "-":
            self.take()
            acc = -self.base_term()
        else:
            acc = self.base_term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.base_term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def base_term(self):
        acc = self.factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            kind, val = self.take() if self.i < len(self.toks) else (None, None)
            if kind != "int" or val < 1:
                self.fail("exponent must be a positive integer")
            out = base
            for _ in range(val - 1):
                out = out * base
            return out
        return base

    def atom(self):
        if self.peek() is None:
            self.fail("unexpected end of expression")
        kind, val = self.take()
        if kind == "int":
            return self.ring.constant(val)
        if kind == "name":
            gen = self.gens.get(val)
            if gen is None:
                self.fail("unknown variable %r" % val)
            return gen
        if kind == "(":
            inner = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("unexpected token %r" % val)


def parse_problem(text: str) -> ProblemFile:
    """Parse the problem grammar; diagnostics carry 1-based line numbers."""
    lines = text.splitlines()
    stage = 0  # 0: field, 1: vars, 2: order, 3: polys header, 4: poly lines
    p = None
    names = None
    order_name = None
    ring = None
    polys = []
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        head = body.split(None, 1)[0]
        if stage == 4 and (head in ("field", "vars", "order") or body == "polys:"):
            raise ProblemParseError("duplicate section %r" % head, lineno)
        if stage == 0:
            if head != "field":
                raise ProblemParseError("expected 'field <p>'", lineno)
            rest = body[len("field"):].strip()
            if not rest.isdigit():
                raise ProblemParseError("field characteristic must be an integer", lineno)
            p = int(rest)
            if not _is_prime(p):
                raise ProblemParseError("field characteristic %d is not prime" % p, lineno)
            stage = 1
        elif stage == 1:
            if head != "vars":
                raise ProblemParseError("expected 'vars <name>,...'", lineno)
            rest = body[len("vars"):].strip()
            names = [s.strip() for s in rest.split(",")]
            if not rest or any(not n for n in names):
                raise ProblemParseError("empty variable name", lineno)
            for n in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", n):
                    raise ProblemParseError("bad variable name %r" % n, lineno)
            if len(set(names)) != len(names):
                raise ProblemParseError("duplicate variable name", lineno)
            stage = 2
        elif stage == 2:
            if head != "order":
                raise ProblemParseError("expected 'order lex|grlex|grevlex'", lineno)
            rest = body[len("order"):].strip()
            if rest not in ORDER_KINDS:
                raise ProblemParseError("unknown order %r" % rest, lineno)
            order_name = rest
            stage = 3
        elif stage == 3:
            if body != "polys:":
                raise ProblemParseError("expected 'polys:'", lineno)
            ring = PolyRing(p, names, TermOrder(order_name, len(names)))
            stage = 4
        else:
            toks = _tokenize(body, lineno)
            if not toks:
                continue
            polys.append(_ExprParser(toks, ring, lineno).parse())
    if stage != 4:
        raise ProblemParseError("incomplete problem: missing %s" %
                                ("field", "vars", "order", "polys:")[stage],
                                len(lines) or 1)
    return ProblemFile(p, tuple(names), order_name, tuple(polys))


def render_problem(pf: ProblemFile) -> str:
    out = ["field %d" % pf.characteristic,
           "vars %s" % ", ".join(pf.variables),
           "order %s" % pf.order_name,
           "polys:"]
    out.extend(render_poly(f) for f in pf.polys)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------


def _engine_flags(sub):
    sub.add_argument("--criterion", choices=CRITERIA, default="ratio")
    sub.add_argument("--strategy", choices=STRATEGIES, default="sig")
    sub.add_argument("--modorder", choices=(POT, SCHREYER), default=SCHREYER)
    sub.add_argument("--no-koszul", action="store_true",
                     help="skip recording Koszul syzygies for new basis elements")
    sub.add_argument("--signature-only", action="store_true",
                     help="drop module vectors, keep signatures only")
    sub.add_argument("--check-admissible", action=argparse.BooleanOptionalAction,
                     default=True, help="verify the partial order shrinks along reductions")
    sub.add_argument("--oracle", action="store_true",
                     help="cross-check against a classical Buchberger run")
    sub.add_argument("--cap", type=int, default=None, metavar="N",
                     help="abort after N processed pairs (exit 3)")
    sub.add_argument("--stats-json", metavar="PATH",
                     help="also write the stats record as JSON")


def _config_from(args) -> EngineConfig:
    kwargs = dict(
        criterion=args.criterion,
        strategy=args.strategy,
        modorder=args.modorder,
        koszul=not args.no_koszul,
        full_vector=not args.signature_only,
        check_admissible=args.check_admissible,
        allow_unsound=args.criterion == "earlier-unsound",
    )
    if args.cap is not None:
        kwargs["cap"] = args.cap
    return EngineConfig(**kwargs)


def _execute(polys, args, label=None) -> int:
    if args.criterion == "earlier-unsound":
        print("warning: earlier-unsound order is a negative control; "
              "output may be wrong", file=sys.stderr)
    try:
        cfg = _config_from(args)
        basis, stats = signature_groebner(list(polys), cfg)
    except (ConfigError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except CapExceededError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    gb = extract_gb(basis)
    stats.reduced_gb_size = len(gb)
    if label:
        print("system %s" % label)
    for f in gb:
        print(render_poly(f))
    print()
    record = stats.as_dict()
    for k, v in record.items():
        print(k, v)
    if args.stats_json:
        with open(args.stats_json, "w") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
    code = 0
    if args.check_admissible and basis.monitor is not None and basis.monitor.violations:
        for parent_serial, child_serial, psig, csig in basis.monitor.violations:
            print("admissibility violation: child %d not below parent %d"
                  % (child_serial, parent_serial), file=sys.stderr)
        code = 1
    if args.oracle:
        expected = reduce_gb(buchberger(list(polys)))
        if gb != expected:
            print("oracle mismatch: engine found %d elements, oracle %d"
                  % (len(gb), len(expected)), file=sys.stderr)
            code = 1
        else:
            print("oracle ok (%d elements)" % len(expected))
    return code


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="siggb",
        description="signature-based Groebner bases over small prime fields")
    subs = parser.add_subparsers(dest="command", required=True)
    runp = subs.add_parser("run", help="compute a basis from a problem file")
    runp.add_argument("problem", help="problem file path")
    _engine_flags(runp)
    benchp = subs.add_parser("bench", help="run a generated benchmark system")
    benchp.add_argument("family", help="cyclic or katsura")
    benchp.add_argument("index", type=int)
    _engine_flags(benchp)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.command == "run":
        try:
            with open(args.problem) as fh:
                text = fh.read()
        except OSError as e:
            print("error: %s" % e, file=sys.stderr)
            return 2
        try:
            pf = parse_problem(text)
        except ProblemParseError as e:
            print("error: %s: %s" % (args.problem, e), file=sys.stderr)
            return 2
        return _execute(pf.polys, args)
    try:
        system = make_system(args.family, args.index)
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    return _execute(system.polys, args, label=system.name)


def script_main():
    sys.exit(main())
