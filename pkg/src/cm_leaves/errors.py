class DomainError(ValueError):
    """Input is well-formed but outside the supported mathematical regime
    (for instance a = 0, or a parameter vector that is not standard)."""
