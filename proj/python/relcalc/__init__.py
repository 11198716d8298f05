from ._relcalc import *  # noqa: F401,F403
from ._relcalc import __doc__  # noqa: F401
