"""Quadrature rules on the reference triangle.

All rules are given in barycentric coordinates with weights normalized to
sum to one, so that the integral of f over a physical triangle T is
approximated by area(T) * sum_k w_k f(x_k).

The rules of ``reference_quadrature`` are built by collapsing tensor
Gauss-Legendre rules onto the triangle (a Duffy-type map), which keeps all
weights positive at every order.  Order 1 is the single-point centroid rule.
"""

import numpy as np

MAX_ORDER = 10


def gauss_legendre_01(n):
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def duffy_rule(nu, nv):
    """Collapsed tensor Gauss rule on the reference triangle.

    Maps the unit square onto the triangle via (u, v) -> barycentric
    (1-u, u(1-v), uv); the Jacobian factor u is absorbed into the weights.

    Parameters
    ----------
    nu, nv : int
        Number of Gauss points in the radial (u) and transverse (v)
        directions.

    Returns
    -------
    points : (nu*nv, 3) array
        Barycentric coordinates.
    weights : (nu*nv,) array
        Positive weights summing to one.
    """
    u, wu = gauss_legendre_01(nu)
    v, wv = gauss_legendre_01(nv)
    U, V = np.meshgrid(u, v, indexing="ij")
    WU, WV = np.meshgrid(wu, wv, indexing="ij")
    lam = np.stack([1.0 - U, U * (1.0 - V), U * V], axis=-1).reshape(-1, 3)
    w = (2.0 * WU * WV * U).reshape(-1)
    return lam, w


def reference_quadrature(order):
    """Quadrature rule exact for polynomials of the given total degree.

    Parameters
    ----------
    order : int
        Requested polynomial exactness, between 1 and 10.

    Returns
    -------
    points : (m, 3) array
        Barycentric coordinates of the nodes.
    weights : (m,) array
        Positive weights summing to one.
    """
    if not isinstance(order, (int, np.integer)) or not 1 <= order <= MAX_ORDER:
        raise ValueError(f"unsupported quadrature order {order!r}; expected 1..{MAX_ORDER}")
    if order == 1:
        return np.full((1, 3), 1.0 / 3.0), np.ones(1)
    # the collapsed map turns total degree p into degree p+1 in u and p in v
    nu = (order + 3) // 2
    nv = (order + 2) // 2
    return duffy_rule(nu, nv)


def physical_points(vertices, triangles, points):
    """Map barycentric nodes onto every triangle of a mesh.

    Parameters
    ----------
    vertices : (nv, 2) array
    triangles : (nt, 3) int array
    points : (m, 3) array
        Barycentric nodes.

    Returns
    -------
    (nt, m, 2) array of physical quadrature points.
    """
    corners = vertices[triangles]  # (nt, 3, 2)
    return np.einsum("qa,tax->tqx", points, corners)
