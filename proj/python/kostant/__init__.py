"""Weyl alternation sets, Kostant's partition function and q-multiplicities
for the adjoint representation of sl_{r+1}.

Weights are lists of simple-root coordinates; polynomials are coefficient
lists ``[c0, c1, ...]`` in ascending powers of q.
"""

from ._core import *  # noqa: F401,F403
from ._core import CapacityError, WeylElement  # noqa: F401

__version__ = "0.1.0"
