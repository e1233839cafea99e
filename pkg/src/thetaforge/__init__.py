"""Exact theta series of code lattices over cyclotomic integers.

Subpackages cover codes over prime fields, cyclotomic integer arithmetic,
lattice construction and enumeration, truncated q-expansions, numerical
Hilbert-modular evaluation, a representation ring of lattice-coset modules,
the rank-8 Clifford group with its spinor representations, and the
hyperoctahedral subgroup tower used for cohomological sanity checks.
"""

__version__ = "0.1.0"
