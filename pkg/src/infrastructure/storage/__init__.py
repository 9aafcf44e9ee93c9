"""Storage infrastructure."""

from .result_storage import ResultStorage

__all__ = ['ResultStorage']
