"""Exception hierarchy shared by every orthotl module.

Each concrete error also derives from the closest builtin exception, so callers
may catch either ``OrthoTLError`` or e.g. ``ValueError``.
"""


class OrthoTLError(Exception):
    """Base class for all orthotl errors."""


class PoleError(OrthoTLError, ZeroDivisionError):
    """Division by zero in Q(v), or specialization at a pole."""


class LengthMismatchError(OrthoTLError, ValueError):
    """Two tensors, 1-factors or diagrams have different lengths."""


class ShapeMismatchError(OrthoTLError, ValueError):
    """Two 1-factors were required to have the same shape."""


class IndexRangeError(OrthoTLError, IndexError):
    """A generator or position index lies outside its admissible range."""


class ZeroVectorError(OrthoTLError, ValueError):
    """An operation needing a nonzero vector received the zero vector."""


class NotInvariantError(OrthoTLError, ValueError):
    """Nesting was applied to a vector that is not an invariant."""


class InhomogeneousError(OrthoTLError, ValueError):
    """A vector is not weight-homogeneous of the declared weight."""


class InvalidCombinatorialDataError(OrthoTLError, ValueError):
    """Malformed 1-factor, walk, tableau, link diagram or planar diagram."""


class ConfigError(OrthoTLError, ValueError):
    """Configuration file is unreadable or fails validation."""
