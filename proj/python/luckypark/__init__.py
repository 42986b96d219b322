"""Exact lucky-car and lucky-spot statistics of parking functions.

Counts cross the boundary as python ints and exact rationals as
fractions.Fraction; nothing is ever rounded.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
