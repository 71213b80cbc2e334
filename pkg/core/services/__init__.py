"""Services package for classification runs."""

from .classification_service import CubeClassificationService

__all__ = [
    "CubeClassificationService",
]
