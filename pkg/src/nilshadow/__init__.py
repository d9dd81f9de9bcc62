"""nilshadow: exact splitting, nil-shadow and algebraic-hull computations
for polynomial-growth group models of the form B ⋊ Z^k."""

__version__ = "0.1.0"
