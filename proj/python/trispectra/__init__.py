"""q-triangulation spectra, random-walk metrics and closed-form transfers."""

from ._trispectra import *  # noqa: F401,F403
from ._trispectra import TrispectraError

__all__ = [name for name in dir() if not name.startswith("_")]
