"""Minimum constrained diffuse reflection paths in simple polygons."""

__version__ = "0.1.0"

from .geom import Orientation, Point
from .instances import Instance, dump_instance, load_instance
from .polygon import BoundaryPoint, Polygon

__all__ = [
    "Orientation",
    "Point",
    "Polygon",
    "BoundaryPoint",
    "Instance",
    "load_instance",
    "dump_instance",
    "__version__",
]
