from enum import Enum


class SchemeKind(Enum):
    """Різницева схема, що застосовується у вузлі x_i."""
    BOUNDARY_LEFT = "boundary_left"
    MIDPOINT_LEFT = "midpoint_left"
    CENTRAL_LEFT = "central_left"
    INTERFACE = "interface"
    CENTRAL_RIGHT = "central_right"
    MIDPOINT_RIGHT = "midpoint_right"
    BOUNDARY_RIGHT = "boundary_right"

    @property
    def is_boundary(self) -> bool:
        return self in (SchemeKind.BOUNDARY_LEFT, SchemeKind.BOUNDARY_RIGHT)

    @property
    def is_central(self) -> bool:
        return self in (SchemeKind.CENTRAL_LEFT, SchemeKind.CENTRAL_RIGHT)

    @property
    def is_midpoint(self) -> bool:
        return self in (SchemeKind.MIDPOINT_LEFT, SchemeKind.MIDPOINT_RIGHT)
