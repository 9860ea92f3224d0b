"""Level curves of the completed zeta function Z(s) = pi^(-s/2) Gamma(s/2) zeta(s).

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from zetascope._core import *  # noqa: F401,F403
from zetascope._core import __version__  # noqa: F401
