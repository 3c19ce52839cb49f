"""Exact psi-class intersection numbers, Virasoro constraints, Hurwitz numbers,
linear Hodge integrals and the asymptotics linking them."""

from .combinatorics import Partition, Rational
from .psi import psi_correlator, tilde_correlator

__version__ = "0.1.0"

__all__ = ["Partition", "Rational", "psi_correlator", "tilde_correlator", "__version__"]
