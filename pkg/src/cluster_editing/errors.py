"""Exception hierarchy shared by the library and the CLI."""


class ClusterEditingError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(ClusterEditingError, ValueError):
    """An operation was called outside its documented precondition."""


class InputError(ClusterEditingError, ValueError):
    """Malformed instance or certificate data."""


class InvariantError(ClusterEditingError, RuntimeError):
    """An internal invariant failed; this always signals a bug."""
