"""Svetlichny-inequality bounds for generalized-GHZ and maximal-slice states.

The heavy lifting lives in the compiled extension ``svet._core``; this
package re-exports its public surface.
"""

from svet._core import *  # noqa: F401,F403
from svet._core import __doc__ as _core_doc

__version__ = "0.1.0"
__doc__ = _core_doc or __doc__
