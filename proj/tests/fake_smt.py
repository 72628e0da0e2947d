#!/usr/bin/env python3
"""Stand-in SMT solver for tests.

Speaks just enough SMT-LIB 2 for the entailment queries this project emits:
set-logic, push/pop with depth 1, declare-const of Bool/Int, assert,
check-sat.  Integer variables must be boxed by a range assertion of the shape
(assert (and (>= v lo) (<= v hi))); check-sat then decides satisfiability by
enumerating all valuations.  Anything else is answered with an error line so
the client fails loudly instead of silently misbehaving.
"""

import sys
from itertools import product


def tokenize(line):
    return line.replace("(", " ( ").replace(")", " ) ").split()


def parse(tokens, pos):
    if tokens[pos] != "(":
        return tokens[pos], pos + 1
    pos += 1
    out = []
    while tokens[pos] != ")":
        node, pos = parse(tokens, pos)
        out.append(node)
    return out, pos + 1


def parse_line(line):
    tokens = tokenize(line)
    node, pos = parse(tokens, 0)
    if pos != len(tokens):
        raise ValueError("trailing tokens in: " + line)
    return node


def as_int(node):
    if isinstance(node, str) and (node.isdigit() or
                                  (node[0] == "-" and node[1:].isdigit())):
        return int(node)
    if isinstance(node, list) and len(node) == 2 and node[0] == "-":
        inner = as_int(node[1])
        return None if inner is None else -inner
    return None


def evaluate(node, env):
    if isinstance(node, str):
        if node == "true":
            return True
        if node == "false":
            return False
        lit = as_int(node)
        if lit is not None:
            return lit
        if node in env:
            return env[node]
        raise ValueError("unknown symbol: " + node)
    head, args = node[0], [evaluate(a, env) for a in node[1:]]
    if head == "and":
        return all(args)
    if head == "or":
        return any(args)
    if head == "not":
        return not args[0]
    if head == "=>":
        return (not args[0]) or args[1]
    if head == "=":
        return args[0] == args[1]
    if head == "<":
        return args[0] < args[1]
    if head == "<=":
        return args[0] <= args[1]
    if head == ">":
        return args[0] > args[1]
    if head == ">=":
        return args[0] >= args[1]
    if head == "+":
        return args[0] + args[1]
    if head == "-":
        return -args[0] if len(args) == 1 else args[0] - args[1]
    if head == "*":
        return args[0] * args[1]
    raise ValueError("unknown operator: " + str(head))


def range_bounds(node):
    """Match (and (>= v lo) (<= v hi)); returns (v, lo, hi) or None."""
    if not (isinstance(node, list) and len(node) == 3 and node[0] == "and"):
        return None
    ge, le = node[1], node[2]
    if not (isinstance(ge, list) and len(ge) == 3 and ge[0] == ">="):
        return None
    if not (isinstance(le, list) and len(le) == 3 and le[0] == "<="):
        return None
    if not (isinstance(ge[1], str) and ge[1] == le[1]):
        return None
    lo, hi = as_int(ge[2]), as_int(le[2])
    if lo is None or hi is None:
        return None
    return ge[1], lo, hi


def check_sat(decls, bounds, asserts):
    names = list(decls)
    domains = []
    for name in names:
        if decls[name] == "Bool":
            domains.append((False, True))
        else:
            if name not in bounds:
                raise ValueError("integer without range assertion: " + name)
            lo, hi = bounds[name]
            domains.append(tuple(range(lo, hi + 1)))
    for values in product(*domains):
        env = dict(zip(names, values))
        if all(evaluate(a, env) for a in asserts):
            return "sat"
    return "unsat"


def main():
    decls, bounds, asserts = {}, {}, []
    stack = []
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            node = parse_line(line)
            head = node[0]
            if head == "set-logic":
                continue
            if head == "push":
                stack.append((dict(decls), dict(bounds), list(asserts)))
            elif head == "pop":
                decls, bounds, asserts = stack.pop()
            elif head == "declare-const":
                name, sort = node[1], node[2]
                if sort not in ("Bool", "Int"):
                    raise ValueError("unsupported sort: " + str(sort))
                decls[name] = sort
            elif head == "assert":
                rb = range_bounds(node[1])
                if rb is not None and rb[0] in decls:
                    bounds[rb[0]] = (rb[1], rb[2])
                asserts.append(node[1])
            elif head == "check-sat":
                print(check_sat(decls, bounds, asserts), flush=True)
            else:
                raise ValueError("unsupported command: " + str(head))
        except Exception as e:  # answer in-band so the client raises
            print("error: " + str(e), flush=True)
            print("fake_smt: " + str(e), file=sys.stderr, flush=True)


if __name__ == "__main__":
    main()
