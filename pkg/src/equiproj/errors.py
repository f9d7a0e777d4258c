"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class EquiprojError(Exception):
    """Base class for all library errors."""


class InputError(EquiprojError, ValueError):
    """Malformed input: bad file, bad parameters, violated precondition."""


class DimensionError(InputError):
    """The polytope does not have the dimension an operation requires."""


class NotAnEdgeDirectionError(InputError):
    pass


class InadmissibleDirectionError(InputError):
    """A projection direction is orthogonal to a facet normal."""

    def __init__(self, direction, facet, normal):
        self.direction = tuple(direction)
        self.facet = facet
        self.normal = tuple(normal)
        super().__init__(
            f"direction {self.direction} is inadmissible: orthogonal to the "
            f"normal {self.normal} of facet {facet}"
        )


class NotEquiprojectiveError(EquiprojError):
    """A summand or sum fails the equiprojectivity requirement of an operation."""


class ResourceBudgetError(EquiprojError):
    """A configurable search or sampling budget was exhausted."""
