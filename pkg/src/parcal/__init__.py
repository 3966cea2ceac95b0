"""Desk-scale partition-calculus workbench.

Finite surrogates for block-structured ground sets, budgeted partial
assignments, half-graph polarized partition relations, lexicographic
reductions, and discrete-subspace extractions, all exhaustively checkable
at small scale.
"""

from parcal.core import Block, Lex, ParamSet

__version__ = "0.1.0"

__all__ = ["Block", "Lex", "ParamSet", "__version__"]
