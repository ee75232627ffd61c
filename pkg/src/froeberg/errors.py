class ResourceLimitError(RuntimeError):
    """Raised when a requested enumeration or matrix exceeds a configured cap."""
