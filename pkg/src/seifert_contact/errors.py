"""Shared error type with a machine-readable tag (surfaced by the CLI)."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain.

    The tag is a stable, machine-readable identifier; the message is
    human-oriented and may change.
    """

    def __init__(self, tag: str, message: str):
        super().__init__(message)
        self.tag = tag
