# mouldkit: exact symbolic computation with moulds, mould symmetries, and
# the double shuffle / Kashiwara-Vergne Lie algebra membership conditions.

from ._speed import backend_name, compiled

__version__ = "0.1.0"

__all__ = ["backend_name", "compiled", "__version__"]
