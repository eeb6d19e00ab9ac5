"""Causal discovery on categorical data with missing values."""

try:
    from ._mgd import *  # noqa: F401,F403
    from ._mgd import MgdError, __version__
except ImportError:  # in-tree build: the extension sits next to the package
    from _mgd import *  # type: ignore  # noqa: F401,F403
    from _mgd import MgdError, __version__  # type: ignore
