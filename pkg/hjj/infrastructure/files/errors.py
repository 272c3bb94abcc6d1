"""Input file errors."""
from hjj.core.errors import ConflictError, ValidationError


class ParseError(ValidationError):
    """A file is not valid JSON or does not match its schema."""

    def __init__(
        self,
        message: str,
        source: str | None = None,
        field: str | None = None,
        line: int | None = None,
    ):
        self.raw_message = message
        location = ", ".join(
            part
            for part in (
                source,
                f"line {line}" if line is not None else None,
                f"field {field}" if field else None,
            )
            if part
        )
        super().__init__(
            message=f"{location}: {message}" if location else message,
            details={"source": source, "field": field, "line": line},
        )


class ConflictingProduct(ConflictError):
    """The same unordered pair is given two different products."""

    def __init__(self, left: str, right: str):
        super().__init__(
            message=f"Conflicting products for {left} * {right} and {right} * {left}",
            details={"left": left, "right": right},
        )
