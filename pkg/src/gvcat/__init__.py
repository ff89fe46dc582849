"""gvcat — an exact computer-algebra workbench for monoidal categories with
a dualizing object, their module categories, Frobenius algebras in them, and
relative Serre functors.

Everything is computed over exact fields (Q or F_p); every structural claim
the package makes is certified by explicit matrix identities.
"""

__version__ = "0.1.0"
