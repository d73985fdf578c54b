"""Half-wave Dirac-Klein-Gordon simulator and estimate lab."""

from dkglab._core import *  # noqa: F401,F403
from dkglab._core import __version__  # noqa: F401
