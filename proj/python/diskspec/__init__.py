"""Exact spectral geometry of the disk metric 4/(1-r^2)(dx^2+dy^2).

Thin re-export of the compiled ``_diskspec`` extension. Rational results come
back as :class:`fractions.Fraction`; rational inputs may be given as
Fractions, ints, or strings such as ``"1/3"`` and ``"0.25"``.
"""

from ._diskspec import *  # noqa: F401,F403
from ._diskspec import __doc__  # noqa: F401
