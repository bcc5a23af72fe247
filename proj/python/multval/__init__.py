"""Exact arithmetic in multiplicative valued difference fields.

The heavy lifting happens in the C++ extension; this package re-exports the
Context class, which owns a rho order type and a residue field choice and
operates on exact text in the CLI grammars.
"""

from ._multval import Context, MathError, __version__

__all__ = ["Context", "MathError", "__version__"]
