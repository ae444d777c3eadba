"""
germ-lab v0.1.0 - exact invariants of x^k1 - y^k2 germs

Orbit trees of coprime pairs, Diophantine solution lattices,
Hirzebruch-Jung chains, blowup resolution graphs and symmetric-group
monodromy classification, all in exact integer arithmetic.

Licensed under the Apache License, Version 2.0
"""

__all__ = ["__version__"]
__version__ = "0.1.0"
