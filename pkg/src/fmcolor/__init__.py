"""fmcolor: exact verification of graded color-algebra identities.

Finite-dimensional algebras graded by a finite abelian group carry a sign
rule through a bicharacter into an N-th cyclotomic field; this package
stores their structure constants exactly, checks every supported axiom
system exhaustively on basis tuples, and runs the standard constructions
(commutator bracket, symmetrization, adjoint pair, semidirect product, dual
actions, induced structures) with machine re-verification.
"""

from fmcolor.scalars import CyclotomicScalar, context, root_of_unity

__version__ = "0.1.0"

__all__ = ["CyclotomicScalar", "context", "root_of_unity", "__version__"]
