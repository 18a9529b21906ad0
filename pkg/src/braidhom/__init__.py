"""Exact homology of braid groups and annular braid groups with twisted coefficients."""

from .config import ENGINE_VERSION as __version__
from .kernels import BACKEND
