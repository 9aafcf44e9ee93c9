from enum import Enum


class Side(Enum):
    """Одностороння границя в точці розриву x = d."""
    LEFT_LIMIT = "left"
    RIGHT_LIMIT = "right"
