"""Gravitational decoherence of two-site macroscopic superpositions.

Thin wrapper over the compiled core: sphere fields and mutual potentials,
meta density-operator evolution and partial traces, Monte Carlo beam
experiments, and the mutual-information estimate of the signaling channel.
"""

from nungsim._core import *  # noqa: F401,F403
from nungsim._core import __version__  # noqa: F401
