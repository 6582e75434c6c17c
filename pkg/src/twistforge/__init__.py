"""Exact twist verification for quantum groups.

Symbolic coefficients in Q(q), normal forms in presented algebras, Hopf
structure on tensor powers, quantum enveloping algebras with PBW bases and
the Drinfeld twists built on them.
"""

__version__ = "0.1.0"

from .coeff import Q, QRatFunc, qpow
from .hopf import HopfPresentation, NotInvertible, TensorPoly, TSeries, coproduct, counit, antipode
from .ncalg import BudgetExceeded, NCPoly, Presentation
