"""Triangulations of the unit disk and convex polygons.

Meshes are conforming triangulations stored as flat numpy arrays.  The disk
family starts from a regular fan of six triangles around the origin; each
uniform refinement splits every triangle into four, projecting the midpoints
of boundary edges radially onto the unit circle so that all boundary nodes
stay on the circle and the polygonal domain exhausts the disk with an O(h^2)
area deficit.

Mesh objects are immutable after construction and safe to share read-only.
"""

import enum

import numpy as np

BOUNDARY_TOL = 1e-12


class PanelRelation(enum.Enum):
    """Adjacency of a pair of triangles, as seen by the nonlocal assembler."""

    IDENTICAL = "identical"
    SHARED_EDGE = "shared_edge"
    SHARED_VERTEX = "shared_vertex"
    DISJOINT = "disjoint"


class TriangleMesh:
    """Conforming triangle mesh with boundary bookkeeping.

    Parameters
    ----------
    vertices : (nv, 2) array
    triangles : (nt, 3) int array
        Vertex index triples; reoriented counterclockwise on construction.
    is_boundary : (nv,) bool array
        Flags for vertices on the polygon boundary.

    Attributes
    ----------
    areas : (nt,) array of triangle areas (all positive).
    diameters : (nt,) array of triangle diameters (longest edge).
    h : float, max triangle diameter.
    interior_index : (nv,) int array, contiguous interior-DOF index or -1.
    n_interior : number of interior vertices.
    """

    def __init__(self, vertices, triangles, is_boundary):
        vertices = np.ascontiguousarray(vertices, dtype=float)
        triangles = np.ascontiguousarray(triangles, dtype=np.int64)
        is_boundary = np.ascontiguousarray(is_boundary, dtype=bool)
        if vertices.ndim != 2 or vertices.shape[1] != 2:
            raise ValueError("vertices must be an (nv, 2) array")
        if triangles.ndim != 2 or triangles.shape[1] != 3:
            raise ValueError("triangles must be an (nt, 3) array")
        if is_boundary.shape != (len(vertices),):
            raise ValueError("is_boundary must have one flag per vertex")

        # enforce counterclockwise orientation
        signed = _signed_areas(vertices, triangles)
        flip = signed < 0
        if np.any(flip):
            triangles = triangles.copy()
            triangles[flip] = triangles[flip][:, [0, 2, 1]]
            signed = np.abs(signed)
        if np.any(signed <= 0):
            raise ValueError("mesh contains a degenerate triangle")

        self.vertices = vertices
        self.triangles = triangles
        self.is_boundary = is_boundary
        self.areas = signed
        edges = vertices[triangles] - vertices[np.roll(triangles, -1, axis=1)]
        self.diameters = np.sqrt((edges**2).sum(-1)).max(axis=1)
        self.h = float(self.diameters.max())

        self.interior_index = np.full(len(vertices), -1, dtype=np.int64)
        interior = np.flatnonzero(~is_boundary)
        self.interior_index[interior] = np.arange(len(interior))
        self.n_interior = len(interior)

        # provenance of refinement, filled in by uniform_refine
        self.parent_vertex_count = None
        self.parent_edge_endpoints = None
        self._cache = {}

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_triangles(self):
        return len(self.triangles)

    def area(self):
        """Total area of the polygonal domain."""
        return float(self.areas.sum())

    def boundary_edges(self):
        """Edges belonging to exactly one triangle, as (ne, 2) vertex ids."""
        if "boundary_edges" not in self._cache:
            e = np.concatenate(
                [self.triangles[:, [0, 1]], self.triangles[:, [1, 2]], self.triangles[:, [2, 0]]]
            )
            key = np.sort(e, axis=1)
            _, inv, counts = np.unique(key, axis=0, return_inverse=True, return_counts=True)
            self._cache["boundary_edges"] = e[counts[inv] == 1]
        return self._cache["boundary_edges"]

    def boundary_loop(self):
        """Boundary vertex ids ordered counterclockwise around the polygon."""
        if "boundary_loop" not in self._cache:
            edges = self.boundary_edges()
            nxt = dict(edges)  # oriented edges of CCW triangles walk the boundary CCW
            start = edges[0, 0]
            loop = [start]
            v = nxt[start]
            while v != start:
                loop.append(v)
                v = nxt[v]
            loop = np.asarray(loop, dtype=np.int64)
            if _polygon_area(self.vertices[loop]) < 0:
                loop = loop[::-1].copy()
            self._cache["boundary_loop"] = loop
        return self._cache["boundary_loop"]

    def vertex_to_triangles(self):
        """List of incident triangle ids per vertex."""
        if "v2t" not in self._cache:
            v2t = [[] for _ in range(self.n_vertices)]
            for t, tri in enumerate(self.triangles):
                for v in tri:
                    v2t[v].append(t)
            self._cache["v2t"] = v2t
        return self._cache["v2t"]


def _signed_areas(vertices, triangles):
    a, b, c = (vertices[triangles[:, k]] for k in range(3))
    return 0.5 * np.cross(b - a, c - a)


def _polygon_area(pts):
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)


def generate_disk_mesh(levels):
    """Quasi-uniform triangulation of the unit disk.

    Level 0 is a fan of six triangles around the origin with the outer
    vertices on the unit circle; every further level applies
    ``uniform_refine``.

    Parameters
    ----------
    levels : int
        Number of uniform refinements, >= 0.
    """
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    ang = np.linspace(0.0, 2.0 * np.pi, 7)[:-1]
    vertices = np.vstack([[0.0, 0.0], np.column_stack([np.cos(ang), np.sin(ang)])])
    triangles = np.array([[0, k + 1, (k + 1) % 6 + 1] for k in range(6)])
    is_boundary = np.array([False] + [True] * 6)
    m = TriangleMesh(vertices, triangles, is_boundary)
    for _ in range(levels):
        m = uniform_refine(m)
    return m


def uniform_refine(m, project_to_circle=None):
    """Split every triangle into four via edge midpoints.

    Midpoints of boundary edges become boundary vertices; when the parent
    boundary lies on the unit circle they are projected radially onto it.
    Children of triangle t occupy slots 4t..4t+3 in the refined mesh, with
    the three corner children first and the central child last.

    Parameters
    ----------
    m : TriangleMesh
    project_to_circle : bool, optional
        Force or suppress the radial projection; autodetected by default.
    """
    tris = m.triangles
    edges = np.concatenate([tris[:, [0, 1]], tris[:, [1, 2]], tris[:, [2, 0]]])
    key = np.sort(edges, axis=1)
    uniq, inv = np.unique(key, axis=0, return_inverse=True)
    counts = np.bincount(inv)

    mid = 0.5 * (m.vertices[uniq[:, 0]] + m.vertices[uniq[:, 1]])
    edge_on_boundary = counts == 1
    if project_to_circle is None:
        norms = np.linalg.norm(m.vertices[m.is_boundary], axis=1)
        project_to_circle = bool(norms.size) and np.all(np.abs(norms - 1.0) <= BOUNDARY_TOL)
    if project_to_circle and edge_on_boundary.any():
        bmid = mid[edge_on_boundary]
        mid[edge_on_boundary] = bmid / np.linalg.norm(bmid, axis=1)[:, None]

    nv = m.n_vertices
    vertices = np.vstack([m.vertices, mid])
    is_boundary = np.concatenate([m.is_boundary, edge_on_boundary])

    mids = nv + inv.reshape(3, -1).T  # per triangle: midpoints of (01, 12, 20)
    a, b, c = tris[:, 0], tris[:, 1], tris[:, 2]
    mab, mbc, mca = mids[:, 0], mids[:, 1], mids[:, 2]
    children = np.stack(
        [
            np.column_stack([a, mab, mca]),
            np.column_stack([mab, b, mbc]),
            np.column_stack([mca, mbc, c]),
            np.column_stack([mab, mbc, mca]),
        ],
        axis=1,
    ).reshape(-1, 3)

    refined = TriangleMesh(vertices, children, is_boundary)
    refined.parent_vertex_count = nv
    refined.parent_edge_endpoints = uniq
    return refined


def classify_pair(m, t1, t2):
    """Panel relation of two triangles (symmetric in its arguments)."""
    if not (0 <= t1 < m.n_triangles and 0 <= t2 < m.n_triangles):
        raise IndexError("triangle id out of range")
    if t1 == t2:
        return PanelRelation.IDENTICAL
    shared = len(set(m.triangles[t1]) & set(m.triangles[t2]))
    if shared == 2:
        return PanelRelation.SHARED_EDGE
    if shared == 1:
        return PanelRelation.SHARED_VERTEX
    return PanelRelation.DISJOINT


def prolong_p0(values):
    """Carry per-triangle constants to the four children of each triangle."""
    return np.repeat(np.asarray(values), 4)


def prolong_p1(fine, coarse_values):
    """Interpolate nodal values of the parent mesh onto a refined mesh.

    New vertices take the mean of their parent edge endpoints; projected
    boundary midpoints keep that mean (they carry homogeneous data anyway).
    """
    if fine.parent_vertex_count is None:
        raise ValueError("mesh was not produced by uniform_refine")
    coarse_values = np.asarray(coarse_values, dtype=float)
    if len(coarse_values) != fine.parent_vertex_count:
        raise ValueError("parent nodal vector has wrong length")
    ends = fine.parent_edge_endpoints
    new = 0.5 * (coarse_values[ends[:, 0]] + coarse_values[ends[:, 1]])
    return np.concatenate([coarse_values, new])


def write_mesh(m, path):
    """Write the plain-text mesh format: "nv nt", vertex and triangle lines."""
    with open(path, "w") as f:
        f.write(f"{m.n_vertices} {m.n_triangles}\n")
        for (x, y), b in zip(m.vertices, m.is_boundary):
            f.write(f"{x!r} {y!r} {int(b)}\n")
        for i, j, k in m.triangles:
            f.write(f"{i} {j} {k}\n")


def read_mesh(path):
    """Read the plain-text mesh format written by ``write_mesh``."""
    with open(path) as f:
        tokens = f.read().split()
    nv, nt = int(tokens[0]), int(tokens[1])
    data = tokens[2:]
    if len(data) != 3 * nv + 3 * nt:
        raise ValueError("mesh file has wrong token count")
    vdata = np.array(data[: 3 * nv], dtype=float).reshape(nv, 3)
    tdata = np.array(data[3 * nv :], dtype=np.int64).reshape(nt, 3)
    return TriangleMesh(vdata[:, :2], tdata, vdata[:, 2] != 0.0)
