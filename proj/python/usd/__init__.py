try:
    from ._usd import *  # noqa: F401,F403
    from ._usd import __doc__  # noqa: F401
except ImportError:
    from _usd import *  # noqa: F401,F403
    from _usd import __doc__  # noqa: F401
