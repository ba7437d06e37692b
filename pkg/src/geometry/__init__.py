"""
Geometria da esfera: coordenadas, rotação de polo e grade computável.
"""

from .sphere import (
    SpherePoint,
    GridSpec,
    GridPoint,
    rotate_latitude,
    grid_overlap_count,
    overlap_points,
    grid_overlap_bruteforce,
    colatitude_between,
)

__all__ = [
    "SpherePoint",
    "GridSpec",
    "GridPoint",
    "rotate_latitude",
    "grid_overlap_count",
    "overlap_points",
    "grid_overlap_bruteforce",
    "colatitude_between",
]
