from posetcyl._core import *  # noqa: F401,F403
from posetcyl._core import __doc__  # noqa: F401
