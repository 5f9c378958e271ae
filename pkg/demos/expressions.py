"""Coefficient expressions: parsing, evaluation, printing and error reporting.

Every coefficient of a problem (``K``, ``p_j``, ``phi``) is a small arithmetic
expression in ``y``. This script shows what the grammar accepts, how trees
print back, and what the errors look like.
"""

from __future__ import annotations

import numpy as np

from degenfrac.expr import DomainError, ExpressionError, parse, unparse

# {{{ evaluation

for source, y in [("sin(pi*y)", 0.5), ("y^2*(1-y)", 0.5), ("sqrt(y)", 0.25), ("2^3^2", 0.0), ("-y^2", 3.0)]:
    print(f"{source:>12} at y={y:<5g} -> {parse(source)(y)!r}")

# the same tree evaluates on arrays, elementwise
K = parse("y^0.5*(2+y)")
print("K on a grid:", np.round(K(np.linspace(0.0, 1.0, 5)), 6))

# }}}

# {{{ printing

# minimal parentheses, and printing then parsing gives the same tree back
for source in ["(y^2)*(1-y)", "(-y)^2", "(2^3)^2", "1-(y-2)"]:
    text = unparse(parse(source))
    assert parse(text).root == parse(source).root
    print(f"{source:>12} prints as {text}")

# }}}

# {{{ errors

# offsets are byte positions in the UTF-8 source
for source in ["2*+", "y + q", "sin(y, y)", "(y"]:
    try:
        parse(source)
    except ExpressionError as exc:
        print(f"{source!r:>12}: {type(exc).__name__} at byte {exc.offset}: {exc}")

# evaluation outside the real domain raises instead of returning nan
for source, y in [("log(y)", -1.0), ("1/y", 0.0), ("y^0.5", -2.0)]:
    try:
        parse(source)(y)
    except DomainError as exc:
        print(f"{source:>12} at y={y:g}: {exc}")

# }}}
