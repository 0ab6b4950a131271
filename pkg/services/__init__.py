from .homology_service import homology_service
from .complex_service import complex_service
from .torus_service import torus_service
from .cabling_service import cabling_service
from .alexander_service import alexander_service

__all__ = [
    "homology_service",
    "complex_service",
    "torus_service",
    "cabling_service",
    "alexander_service",
]
