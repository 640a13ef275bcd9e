"""Hyperbolic ends, Kulkarni-Pinkall forms and the Schwarzian calculus."""

from ._hypend import *  # noqa: F401,F403
from ._hypend import __doc__  # noqa: F401

#: The point at infinity of the Riemann sphere; "inf" is accepted as well.
INF = None

__version__ = "0.1.0"
