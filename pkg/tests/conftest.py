"""Shared builders for the test suite."""

import itertools

import pytest

from helly_topo.complex_core import (
    Subcomplex,
    SubcomplexFamily,
    build_complex,
    face_closure,
    grid_complex,
)
from helly_topo.transversal_plane import ConvexPolygon


def known_spaces():
    """Classical fixed complexes with their reduced Betti numbers.

    Values are the textbook ones; the projective plane is the designated
    witness where GF(2) and rational homology disagree.
    """
    torus_tris = sorted(
        {tuple(sorted((i % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)}
        | {tuple(sorted((i % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)}
    )
    rp2_tris = [
        (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
        (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
    ]
    annulus_tris = [
        (0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5), (0, 2, 5), (0, 3, 5),
    ]
    return {
        "empty": (build_complex([]), {}, {}),
        "point": (build_complex([[0]]), {0: 0}, {0: 0}),
        "two_points": (build_complex([[0], [1]]), {0: 1}, {0: 1}),
        "triangle_boundary": (
            build_complex([[0, 1], [1, 2], [0, 2]]),
            {0: 0, 1: 1},
            {0: 0, 1: 1},
        ),
        "solid_triangle": (
            build_complex([[0, 1, 2]]),
            {0: 0, 1: 0, 2: 0},
            {0: 0, 1: 0, 2: 0},
        ),
        "tetrahedron_boundary": (
            build_complex([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]),
            {0: 0, 1: 0, 2: 1},
            {0: 0, 1: 0, 2: 1},
        ),
        "annulus": (
            build_complex(annulus_tris),
            {0: 0, 1: 1, 2: 0},
            {0: 0, 1: 1, 2: 0},
        ),
        "torus_7": (
            build_complex(torus_tris),
            {0: 0, 1: 2, 2: 1},
            {0: 0, 1: 2, 2: 1},
        ),
        "projective_plane_6": (
            build_complex(rp2_tris),
            {0: 0, 1: 1, 2: 1},  # GF(2)
            {0: 0, 1: 0, 2: 0},  # rationals
        ),
    }


def cell_triangles(n, ix, iy):
    """The two triangles of grid cell (ix, iy) in grid_complex(n)."""
    stride = n + 1
    a = iy * stride + ix
    b = a + 1
    c = a + stride
    d = c + 1
    return [tuple(sorted((a, b, d))), tuple(sorted((a, c, d)))]


def rect_subcomplex(ambient, n, x0, x1, y0, y1):
    """Face closure of all cells with x0 <= ix < x1, y0 <= iy < y1."""
    tris = []
    for iy in range(y0, y1):
        for ix in range(x0, x1):
            tris.extend(cell_triangles(n, ix, iy))
    return Subcomplex(ambient, face_closure(tris))


def cells_subcomplex(ambient, n, cells):
    tris = []
    for ix, iy in cells:
        tris.extend(cell_triangles(n, ix, iy))
    return Subcomplex(ambient, face_closure(tris))


def make_family(ambient, members):
    labels = tuple(f"A{i + 1}" for i in range(len(members)))
    return SubcomplexFamily(ambient, tuple(members), labels)


def square(cx, cy, half=0.5):
    """Axis-aligned open square polygon centered at (cx, cy)."""
    return ConvexPolygon(
        (
            (cx - half, cy - half),
            (cx + half, cy - half),
            (cx + half, cy + half),
            (cx - half, cy + half),
        )
    )


@pytest.fixture
def grid6():
    return grid_complex(6)
