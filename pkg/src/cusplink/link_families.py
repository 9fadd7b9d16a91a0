"""Blueprint descriptions of the link families: components, linking
structure, the symmetry action on components, and hyperbolicity status.

A blueprint records what is exactly checkable about each family at desk
scale: component counts, pairwise linking data, and the permutation
action of the visible symmetries, whose transitivity degree is computed
(never asserted).  Hyperbolicity is provenance metadata only, it is
never computed here.

Crossing-sign convention: right-handed crossings count +1.  Chain
neighbor linking numbers are reported as +1 for diagrams with t >= 0
half-twists and -1 otherwise; any consistent convention satisfies the
symmetry invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .finite_field import FieldSpec
from .perm_action import (
    PermGroup,
    Permutation,
    affine_group,
    group_closure,
    transitivity_degree,
)
from .regular_map import biggs_map


@dataclass(frozen=True)
class Hyperbolicity:
    """Status tag plus a provenance note; statuses are
    asserted_by_paper, conditional, or unknown."""

    status: str
    note: str

    def to_json_dict(self) -> dict:
        return {"status": self.status, "note": self.note}


@dataclass(frozen=True)
class LinkBlueprint:
    """One link family instance.

    linking_matrix is a symmetric integer matrix with zero diagonal (one
    row per component), or None when only the completeness flag is
    meaningful (every pair of components links).  Every symmetry
    generator acts on component indices and preserves the linking data.
    """

    family: str
    ambient: str
    components: tuple[str, ...]
    linking_matrix: tuple[tuple[int, ...], ...] | None
    linking_complete: bool
    symmetry_generators: tuple[Permutation, ...]
    symmetry_order: int
    transitivity_degree: int
    hyperbolicity: Hyperbolicity
    params: dict = field(default_factory=dict)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def symmetry_group(self) -> PermGroup:
        return group_closure(self.symmetry_generators)

    def to_json_dict(self) -> dict:
        if self.linking_matrix is not None:
            linking = [list(row) for row in self.linking_matrix]
        elif self.linking_complete:
            linking = "complete"
        else:
            linking = None
        return {
            "family": self.family,
            "ambient": self.ambient,
            "n_components": self.n_components,
            "components": list(self.components),
            "linking": linking,
            "symmetry_order": self.symmetry_order,
            "transitivity_degree": self.transitivity_degree,
            "hyperbolicity": self.hyperbolicity.to_json_dict(),
            "params": dict(self.params),
        }


def _validate_blueprint(blueprint: LinkBlueprint) -> LinkBlueprint:
    n = blueprint.n_components
    for g in blueprint.symmetry_generators:
        if g.degree != n:
            raise ValueError("symmetry generator degree differs from component count")
    matrix = blueprint.linking_matrix
    if matrix is not None:
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("linking matrix shape mismatch")
        for i in range(n):
            if matrix[i][i] != 0:
                raise ValueError("linking matrix diagonal must be zero")
            for j in range(n):
                if matrix[i][j] != matrix[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        for g in blueprint.symmetry_generators:
            for i in range(n):
                for j in range(n):
                    if matrix[g(i)][g(j)] != matrix[i][j]:
                        raise ValueError("symmetry generator does not preserve linking")
    return blueprint


def _symmetry_stats(generators) -> tuple[int, int]:
    group = group_closure(generators)
    return group.order, transitivity_degree(group)


# ---------------------------------------------------------------------------
# chains


def chain_link(n: int, t: int) -> LinkBlueprint:
    """A closed chain of n unknotted loops, linked in a cycle, with t
    half-twists.  Cyclic symmetry; neighbor-only linking; hyperbolic for
    every t once n >= 5 (Neumann-Reid), with finitely many unresolved
    low-twist exceptions for shorter chains."""
    if n < 2:
        raise ValueError("a chain needs at least 2 loops")
    sign = 1 if t >= 0 else -1
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        if i != j:
            matrix[i][j] = sign
            matrix[j][i] = sign
    shift = Permutation(tuple((i + 1) % n for i in range(n)))
    order, degree = _symmetry_stats([shift])
    if n >= 5:
        hyperbolic = Hyperbolicity(
            "asserted_by_paper",
            "hyperbolic for every twist count (Neumann-Reid, arithmetic chain links)")
    else:
        hyperbolic = Hyperbolicity(
            "unknown",
            f"hyperbolic except for {5 - n} low-twist values of t, not enumerated here")
    return _validate_blueprint(LinkBlueprint(
        family="chain",
        ambient="S3",
        components=tuple(f"loop_{i}" for i in range(n)),
        linking_matrix=tuple(tuple(row) for row in matrix),
        linking_complete=(n <= 3),
        symmetry_generators=(shift,),
        symmetry_order=order,
        transitivity_degree=degree,
        hyperbolicity=hyperbolic,
        params={"n": n, "half_twists": t},
    ))


# ---------------------------------------------------------------------------
# braids and cyclic closures


@dataclass(frozen=True)
class BraidWord:
    """A braid as a word in the standard generators: entry +i (1-based)
    is a right-handed crossing of strands i-1 and i, negative entries
    are the inverses."""

    strands: int
    word: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        word = tuple(int(g) for g in self.word)
        object.__setattr__(self, "word", word)
        for g in word:
            if g == 0 or not 1 <= abs(g) <= self.strands - 1:
                raise ValueError(f"generator index {g} out of range for {self.strands} strands")

    def __mul__(self, repeats: int) -> BraidWord:
        return BraidWord(self.strands, self.word * repeats)


# Bundled 5-strand example: permutation is the 5-cycle (0 2 4 3 1),
# i.e. strands 1..5 permute as (1 3 5 4 2), and the closure of the
# single word is unknotted (4 crossings, one per generator).
EXAMPLE_BRAID = BraidWord(strands=5, word=(3, 4, -1, -2))


def braid_permutation(braid: BraidWord) -> Permutation:
    """Underlying strand permutation: the transpositions of the word
    applied in order, left to right."""
    perm = Permutation.identity(braid.strands)
    for g in braid.word:
        i = abs(g) - 1
        swap = Permutation.from_cycles(braid.strands, [(i, i + 1)])
        perm = swap * perm
    return perm


def _closure_linking(braid: BraidWord, repeats: int) -> list[list[int]]:
    """Pairwise linking numbers of the closure of braid**repeats when the
    total permutation is trivial (component = starting position).  Each
    crossing contributes half its sign to the pair of strands involved.
    """
    n = braid.strands
    doubled = [[0] * n for _ in range(n)]
    occupant = list(range(n))
    for _ in range(repeats):
        for g in braid.word:
            i = abs(g) - 1
            u, v = occupant[i], occupant[i + 1]
            s = 1 if g > 0 else -1
            doubled[u][v] += s
            doubled[v][u] += s
            occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    if occupant != list(range(n)):
        raise ValueError("total permutation is not trivial; components would merge")
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                if doubled[i][j] % 2:
                    raise AssertionError("odd crossing sum between closed components")
                matrix[i][j] = doubled[i][j] // 2
    return matrix


def cyclic_braid_closure(braid: BraidWord, m: int = 1) -> LinkBlueprint:
    """Close braid**(n*m) for a braid whose permutation is a single
    n-cycle on its n strands.  The closure has exactly n components
    (verified by direct cycle count), carried cyclically into each other
    by shifting the diagram one block."""
    if m < 1:
        raise ValueError("power m must be >= 1")
    n = braid.strands
    perm = braid_permutation(braid)
    cycles = perm.cycles(include_fixed=True)
    if len(cycles) != 1 or len(cycles[0]) != n:
        raise ValueError("braid permutation must be a single n-cycle on n strands")
    repeats = n * m
    total = perm ** repeats
    components = len(total.cycles(include_fixed=True))
    if components != n:
        raise AssertionError("closure component count disagrees with cycle count")
    matrix = _closure_linking(braid, repeats)
    order, degree = _symmetry_stats([perm])
    return _validate_blueprint(LinkBlueprint(
        family="braid_closure",
        ambient="S3",
        components=tuple(f"strand_{i}" for i in range(n)),
        linking_matrix=tuple(tuple(row) for row in matrix),
        linking_complete=all(matrix[i][j] != 0 for i in range(n) for j in range(n) if i != j),
        symmetry_generators=(perm,),
        symmetry_order=order,
        transitivity_degree=degree,
        hyperbolicity=Hyperbolicity(
            "conditional",
            "closure of the (n*m)-th power; the 2-pi theorem (Gromov-Thurston) "
            "gives hyperbolicity for sufficiently large m"),
        params={"strands": n, "word": list(braid.word), "m": m, "power": repeats},
    ))


# ---------------------------------------------------------------------------
# polyhedral great-circle links


_CUBE_PLANES = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _cube_diagonal_generators() -> tuple[Permutation, Permutation]:
    """Two cube rotations as permutations of the four diagonals, indexed
    by the plane signs (A, B): a quarter turn about a face axis maps
    (A, B) -> (B, -A); a third turn about a diagonal maps (A, B) -> (B, A*B)."""
    index = {pair: i for i, pair in enumerate(_CUBE_PLANES)}
    quarter = Permutation(tuple(index[(b, -a)] for (a, b) in _CUBE_PLANES))
    third = Permutation(tuple(index[(b, a * b)] for (a, b) in _CUBE_PLANES))
    return quarter, third


def cube_link() -> LinkBlueprint:
    """Four great circles cut by the planes A*x + B*y + z = 0 with
    A, B in {+1, -1} (one per cube diagonal), meeting in twelve points
    resolved alternately.  The rotation group of the cube permutes the
    four components 4-transitively."""
    generators = _cube_diagonal_generators()
    order, degree = _symmetry_stats(generators)
    n = 4
    matrix = tuple(tuple(0 if i == j else 1 for j in range(n)) for i in range(n))
    return _validate_blueprint(LinkBlueprint(
        family="cube_diagonal",
        ambient="S3",
        components=tuple(f"plane({a:+d},{b:+d})" for (a, b) in _CUBE_PLANES),
        linking_matrix=matrix,
        linking_complete=True,
        symmetry_generators=generators,
        symmetry_order=order,
        transitivity_degree=degree,
        hyperbolicity=Hyperbolicity(
            "asserted_by_paper",
            "alternating resolution of the four great circles; "
            "hyperbolicity verified externally with SnapPea"),
        params={"crossings": 12, "alternating": True},
    ))


def _cube_vertices() -> list[tuple[int, int, int]]:
    return [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]


def _cube_edges() -> list[tuple[tuple, tuple]]:
    vertices = _cube_vertices()
    edges = set()
    for u in vertices:
        for v in vertices:
            if sum(a != b for a, b in zip(u, v)) == 1:
                edges.add(tuple(sorted((u, v))))
    return sorted(edges)


def _edge_permutation(rotate) -> Permutation:
    edges = _cube_edges()
    index = {e: i for i, e in enumerate(edges)}
    return Permutation(tuple(index[tuple(sorted((rotate(u), rotate(v))))]
                             for (u, v) in edges))


def _vertex_sign_label(v: tuple[int, int, int]) -> str:
    return "".join("+" if c > 0 else "-" for c in v)


def cube_edge_link() -> LinkBlueprint:
    """Twelve loops following the edges of a cube, the three at each
    vertex interlocking pairwise.  The rotation group of the cube acts
    transitively (and only transitively) on the twelve components."""
    edges = _cube_edges()
    generators = (
        _edge_permutation(lambda v: (v[1], -v[0], v[2])),
        _edge_permutation(lambda v: (v[2], v[0], v[1])),
    )
    order, degree = _symmetry_stats(generators)
    n = len(edges)
    # loops at a common vertex interlock: linking 1 when edges share a vertex
    matrix = tuple(tuple(
        0 if i == j else int(bool(set(edges[i]) & set(edges[j])))
        for j in range(n)) for i in range(n))
    return _validate_blueprint(LinkBlueprint(
        family="cube_edge",
        ambient="S3",
        components=tuple(f"{_vertex_sign_label(u)}|{_vertex_sign_label(v)}" for (u, v) in edges),
        linking_matrix=matrix,
        linking_complete=False,
        symmetry_generators=generators,
        symmetry_order=order,
        transitivity_degree=degree,
        hyperbolicity=Hyperbolicity(
            "asserted_by_paper",
            "hyperbolicity verified externally with SnapPea"),
        params={"vertices": 8, "loops_per_vertex": 3},
    ))


def icosahedral_link() -> LinkBlueprint:
    """Six great circles perpendicular to the six five-fold axes of an
    icosahedron, resolved alternately.  The rotation group (order 60)
    acts on the axes as the Moebius action on the projective line over
    GF(5), which is 2-transitive but not 3-transitive."""
    # points 0..4 and infinity (index 5); z -> z+1 and z -> -1/z
    points = 6
    cycle = Permutation(tuple([1, 2, 3, 4, 0, 5]))
    inversion_images = [5, 4, 2, 3, 1, 0]
    inversion = Permutation(tuple(inversion_images))
    generators = (cycle, inversion)
    order, degree = _symmetry_stats(generators)
    matrix = tuple(tuple(0 if i == j else 1 for j in range(points)) for i in range(points))
    labels = tuple(f"axis_{x}" for x in (0, 1, 2, 3, 4, "inf"))
    return _validate_blueprint(LinkBlueprint(
        family="icosahedral",
        ambient="S3",
        components=labels,
        linking_matrix=matrix,
        linking_complete=True,
        symmetry_generators=generators,
        symmetry_order=order,
        transitivity_degree=degree,
        hyperbolicity=Hyperbolicity(
            "asserted_by_paper",
            "alternating resolution of the six great circles; "
            "hyperbolicity verified externally with SnapPea"),
        params={"crossings": 30, "alternating": True},
    ))


# ---------------------------------------------------------------------------
# helical links over the regular maps


def polygon_geometry(p: int, q: int) -> str:
    """Geometry of a regular p-gon with interior angle 2*pi/q:
    euclidean when (p-2)(q-2) = 4, hyperbolic when larger, spherical
    when smaller."""
    if p < 3 or q < 3:
        raise ValueError("need p >= 3 and q >= 3")
    excess = (p - 2) * (q - 2)
    if excess < 4:
        return "spherical"
    return "euclidean" if excess == 4 else "hyperbolic"


def polygon_radii(p: int, q: int) -> tuple[float, float]:
    """Inradius r1 (center to edge midpoint) and circumradius r2 (center
    to vertex) of the regular p-gon with interior angle 2*pi/q.

    Euclidean polygons are normalized to unit edge length; hyperbolic
    radii are intrinsic (curvature -1).  Both come from solving the
    right triangle with angles pi/p at the center, pi/q at the vertex,
    and the right angle at the edge midpoint.  Spherical inputs are out
    of scope and raise ValueError.
    """
    geometry = polygon_geometry(p, q)
    if geometry == "spherical":
        raise ValueError(f"({p},{q}) is spherical; only flat and hyperbolic polygons are supported")
    if geometry == "euclidean":
        r1 = 0.5 / math.tan(math.pi / p)
        r2 = 0.5 / math.sin(math.pi / p)
        return r1, r2
    r1 = math.acosh(math.cos(math.pi / q) / math.sin(math.pi / p))
    r2 = math.acosh(1.0 / (math.tan(math.pi / p) * math.tan(math.pi / q)))
    return r1, r2


@dataclass(frozen=True)
class HelicalSpec:
    """Geometric bookkeeping for the helical-arc construction over the
    order-n map: each face carries n-1 helical arcs of slope
    (n-1)/sigma on a cylinder of radius rho, where sigma stays symbolic
    (only the arc count and the end-matching matter combinatorially) and
    rho must lie strictly inside the window (r1, r2) so that each strand
    reaches out to link with an arc of the neighboring face.  rho_window
    is None for the one spherical case (n = 4), whose metric model is
    out of scope."""

    n: int
    strands_per_face: int
    slope_numerator: int
    slope_symbol: str
    rho_window: tuple[float, float] | None
    arc_count: int
    puncture_count_per_fiber: int

    def __post_init__(self):
        if self.rho_window is not None:
            r1, r2 = self.rho_window
            if not r1 < r2:
                raise ValueError("radius window must satisfy r1 < r2 strictly")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "strands_per_face": self.strands_per_face,
            "slope": f"{self.slope_numerator}/{self.slope_symbol}",
            "rho_window": list(self.rho_window) if self.rho_window else None,
            "arc_count": self.arc_count,
            "puncture_count_per_fiber": self.puncture_count_per_fiber,
        }


def helical_link(spec: FieldSpec) -> tuple[LinkBlueprint, HelicalSpec]:
    """One closed curve per face of the order-n regular map, each a
    (n-1, 1) torus knot swept out by n-1 helical arcs around the face
    center, inside the product of the map's surface with a circle.
    Because every pair of faces shares an edge and the radius window
    forces each strand onto the neighboring faces, every pair of
    components links.  The affine symmetry of the face labels carries
    the components 2-transitively."""
    n = spec.n
    if n <= 3:
        raise ValueError("field order must exceed 3")
    surface = biggs_map(spec)
    vertex_degree = len(surface.vertices[0])
    geometry = polygon_geometry(n - 1, vertex_degree)
    window = None if geometry == "spherical" else polygon_radii(n - 1, vertex_degree)
    group = affine_group(spec)
    degree = transitivity_degree(group)
    helix = HelicalSpec(
        n=n,
        strands_per_face=n - 1,
        slope_numerator=n - 1,
        slope_symbol="sigma",
        rho_window=window,
        arc_count=n * (n - 1),
        puncture_count_per_fiber=n * (n - 1),
    )
    blueprint = _validate_blueprint(LinkBlueprint(
        family="helical",
        ambient="SxS1",
        components=tuple(f"face_{element}" for element in spec.elements()),
        linking_matrix=None,
        linking_complete=True,
        symmetry_generators=group.generators,
        symmetry_order=group.order,
        transitivity_degree=degree,
        hyperbolicity=Hyperbolicity(
            "asserted_by_paper",
            "mapping torus of a point-pushing pseudo-Anosov monodromy "
            "(stretch factor 3+2*sqrt(2)); hyperbolicity not computed here"),
        params={
            "n": n,
            "face_polygon": n - 1,
            "vertex_degree": vertex_degree,
            "geometry": geometry,
            "genus": surface.genus,
        },
    ))
    return blueprint, helix
