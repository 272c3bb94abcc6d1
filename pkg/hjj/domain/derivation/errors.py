"""Derivation domain errors."""
from hjj.core.errors import ValidationError


class NotAMember(ValidationError):
    """A map declared to lie in a derivation space does not."""

    def __init__(self, name: str, space: str):
        super().__init__(
            message=f"{name} is not a member of {space}",
            details={"map": name, "space": space},
        )
