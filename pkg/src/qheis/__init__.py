"""qheis: group-covariant q-deformed Heisenberg algebras on truncated
Fock spaces, verified numerically.

The package constructs Weyl/Clifford algebras covariant under sl(N) or
so(N), realizes explicit q-deforming maps inside them, and turns every
implementable algebraic identity (deformed exchange relations,
invariants, *-structures, braid-matrix properties, the reduced
Knizhnik-Zamolodchikov machinery behind the coassociator) into residual
checks with explicit tolerances.
"""

__version__ = "0.1.0"
