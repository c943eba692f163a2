"""Finite elements for optimal control with the integral fractional Laplacian.

The package discretizes control-constrained optimal control problems whose
state equation is a semilinear elliptic PDE driven by the integral fractional
Laplacian on the unit disk.  Piecewise linear elements carry the state and
adjoint variables, piecewise constants carry the control, and a projection /
active-set loop solves the discrete optimality system.  A manufactured exact
solution on the disk drives the convergence-rate studies.
"""

from .mesh import (
    PanelRelation,
    TriangleMesh,
    classify_pair,
    generate_disk_mesh,
    prolong_p0,
    prolong_p1,
    read_mesh,
    uniform_refine,
    write_mesh,
)
from .quadrature import reference_quadrature

__all__ = [
    "PanelRelation",
    "TriangleMesh",
    "classify_pair",
    "generate_disk_mesh",
    "prolong_p0",
    "prolong_p1",
    "read_mesh",
    "reference_quadrature",
    "uniform_refine",
    "write_mesh",
]
