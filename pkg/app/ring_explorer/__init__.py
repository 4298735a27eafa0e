from .src import *  # noqa: F401,F403
from .src import __version__  # noqa: F401
