"""Cycle structure of monomial maps a * x**n over finite fields.

Closed-form counts of periodic points and cycles, a brute-force
functional-graph engine for cross-validation, prime-averaged mean
values, and exact density experiments over rational function fields.
"""

__version__ = "0.1.0"
