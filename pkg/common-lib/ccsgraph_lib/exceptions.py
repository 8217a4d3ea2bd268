from typing import Optional


class CCSGraphError(Exception):
    """
    Base class for ccsgraph errors.
    """

    pass


class InvalidInput(CCSGraphError):
    """
    Thrown when an argument or input document is malformed or out of range.
    """

    pass


class PermutationError(InvalidInput):
    """
    Thrown when cycle notation cannot be parsed or permutations are incompatible.
    """

    pass


class GroupFileError(InvalidInput):
    """
    Thrown when a group file cannot be read or parsed.
    """

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:"
        if line is not None:
            location = f"{location}{line}:"
        super().__init__(f"{location} {message}" if location else message)


class CatalogError(InvalidInput):
    """
    Thrown when a catalog name is unknown or its parameters are out of range.
    """

    pass


class UnknownVertex(InvalidInput):
    """
    Thrown when a vertex is not part of a graph.
    """

    pass


class UnknownStatement(InvalidInput):
    """
    Thrown when a statement name does not match any registered check.
    """

    pass


class NotNormalError(CCSGraphError):
    """
    Thrown when a subgroup is required to be normal and is not.

    Carries the witness: g * h * g^-1 is not in the subgroup.
    """

    def __init__(self, g: int, h: int, message: Optional[str] = None):
        self.g = g
        self.h = h
        super().__init__(
            message or f"Subgroup is not normal: conjugating element {h} by {g} leaves it"
        )


class ResourceCapExceeded(CCSGraphError):
    """
    Thrown when a computation would exceed a configured size cap.
    """

    pass
