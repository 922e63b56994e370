"""Attraction-domain analysis for steady states of Lindblad open quantum systems.

The heavy lifting lives in the compiled extension; this package re-exports it.
Matrices cross the boundary as complex numpy arrays (column kets, |1> = (1,0)^T,
site 1 leftmost, column-stacking vectorization).
"""

from lindoa._core import *  # noqa: F401,F403
from lindoa._core import __version__  # noqa: F401
