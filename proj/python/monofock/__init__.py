"""Python bindings for the monotone Fock position-operator toolkit."""

try:
    from ._monofock import *  # noqa: F401,F403
    from ._monofock import __doc__ as _core_doc
except ImportError:  # in-tree builds put the extension on PYTHONPATH directly
    from _monofock import *  # noqa: F401,F403
    from _monofock import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
