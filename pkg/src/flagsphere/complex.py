"""Pure simplicial complexes stored by their facets.

Vertices are integer ids with a label table; labels follow the naming used
for the sphere families (``a``, ``b``, ``y_1^2``, ``u_3``, ``w_1``, ...), so
printed complexes can be compared against hand drawings.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Iterable, Mapping

import networkx as nx

from .errors import InvalidInput, NotAFace, NotAFacet
from .graph import Graph


def _maximal_sets(sets: Iterable[frozenset]) -> frozenset:
    """Drop every set contained in another one."""
    ordered = sorted(set(sets), key=len, reverse=True)
    kept = []
    by_vertex: dict[int, list[frozenset]] = defaultdict(list)
    for s in ordered:
        if s:
            pivot = min(s, key=lambda v: len(by_vertex[v]))
            if any(s <= t for t in by_vertex[pivot]):
                continue
        elif kept:
            continue
        kept.append(s)
        for v in s:
            by_vertex[v].append(s)
    return frozenset(kept)


class Complex:
    """Immutable simplicial complex given by its inclusion-maximal faces.

    ``facets`` is a frozenset of frozensets of vertex ids and ``labels`` maps
    each vertex id to a string. Two complexes compare equal when their
    labelled facet sets agree, regardless of the integer ids used.
    """

    def __init__(self, facets: Iterable[Iterable[int]], labels: Mapping[int, str],
                 *, maximal: bool = False):
        fs = (frozenset(f) for f in facets)
        self._facets = frozenset(fs) if maximal else _maximal_sets(fs)
        verts = set().union(*self._facets) if self._facets else set()
        missing = [v for v in verts if v not in labels]
        if missing:
            raise InvalidInput(f"vertices without labels: {sorted(missing)}")
        self._labels = {v: str(labels[v]) for v in sorted(verts)}
        if len(set(self._labels.values())) != len(self._labels):
            raise InvalidInput("vertex labels must be distinct")

    # -- basic accessors -------------------------------------------------
    @property
    def facets(self) -> frozenset:
        return self._facets

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    def label(self, v: int) -> str:
        return self._labels[v]

    @cached_property
    def ids(self) -> dict[str, int]:
        return {lab: v for v, lab in self._labels.items()}

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._labels)

    @property
    def n(self) -> int:
        return len(self._labels)

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def face(self, *items) -> frozenset:
        """Vertex-id set for a face given by ids or labels."""
        if len(items) == 1 and not isinstance(items[0], (int, str)):
            items = tuple(items[0])
        out = set()
        for x in items:
            if isinstance(x, str):
                if x not in self.ids:
                    raise NotAFace(f"unknown vertex label {x!r}")
                out.add(self.ids[x])
            else:
                out.add(int(x))
        return frozenset(out)

    def contains_face(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        if not face:
            return bool(self._facets)
        pivot = min(face, key=lambda v: len(self._star_index.get(v, ())))
        return any(face <= f for f in self._star_index.get(pivot, ()))

    @cached_property
    def _star_index(self) -> dict[int, list[frozenset]]:
        index = defaultdict(list)
        for f in self._facets:
            for v in f:
                index[v].append(f)
        return dict(index)

    def facets_containing(self, face: Iterable[int]) -> list[frozenset]:
        face = frozenset(face)
        if not face:
            return list(self._facets)
        pivot = min(face, key=lambda v: len(self._star_index.get(v, ())))
        return [f for f in self._star_index.get(pivot, ()) if face <= f]

    def faces(self, k: int) -> frozenset:
        """All ``k``-dimensional faces (as vertex-id frozensets)."""
        return self._faces_by_dim.get(k, frozenset())

    @cached_property
    def _faces_by_dim(self) -> dict[int, frozenset]:
        out = {-1: frozenset([frozenset()])}
        for size in range(1, self.dim + 2):
            seen = set()
            for f in self._facets:
                if len(f) >= size:
                    seen.update(map(frozenset, itertools.combinations(sorted(f), size)))
            out[size - 1] = frozenset(seen)
        return out

    def labelled_facets(self) -> frozenset:
        return frozenset(frozenset(self._labels[v] for v in f) for f in self._facets)

    def sorted_facet_labels(self) -> list[list[str]]:
        """Facets as sorted label lists, in lexicographic order."""
        return sorted(sorted(self._labels[v] for v in f) for f in self._facets)

    def relabel(self, mapping: Mapping[str, str]) -> "Complex":
        """Rename labels; unmapped labels are kept."""
        return Complex(self._facets, {v: mapping.get(s, s) for v, s in self._labels.items()},
                       maximal=True)

    def renumber(self, order: Iterable[int] | None = None) -> "Complex":
        """Same complex with dense ids 0..n-1 (in ``order`` if given)."""
        order = list(order) if order is not None else list(self._labels)
        new = {v: i for i, v in enumerate(order)}
        return Complex((frozenset(new[v] for v in f) for f in self._facets),
                       {new[v]: s for v, s in self._labels.items()}, maximal=True)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.labelled_facets() == other.labelled_facets()

    def __hash__(self):
        return hash(self.labelled_facets())

    def __repr__(self):
        return f"Complex(n={self.n}, dim={self.dim}, facets={len(self._facets)})"


def from_facets(facet_list: Iterable[Iterable[str]]) -> Complex:
    """Build a complex from label sets; ids follow first appearance."""
    facet_list = [list(f) for f in facet_list]
    if not facet_list:
        raise InvalidInput("facet list is empty")
    ids: dict[str, int] = {}
    facets = []
    for f in facet_list:
        if not f:
            raise InvalidInput("empty facet")
        for lab in f:
            ids.setdefault(str(lab), len(ids))
        facets.append(frozenset(ids[str(lab)] for lab in f))
    return Complex(facets, {v: lab for lab, v in ids.items()})


def simplex(labels: Iterable[str]) -> Complex:
    return from_facets([list(labels)])


def simplex_boundary(labels: Iterable[str]) -> Complex:
    labels = list(labels)
    return from_facets([[x for x in labels if x != y] for y in labels])


def f_vector(K: Complex) -> tuple[int, ...]:
    """Face counts ``(f_-1, f_0, ..., f_dim)``."""
    return tuple(len(K.faces(k)) for k in range(-1, K.dim + 1))


def euler_characteristic(K: Complex) -> int:
    f = f_vector(K)
    return sum((-1) ** i * c for i, c in enumerate(f[1:]))


def skeleton_graph(K: Complex) -> Graph:
    """1-skeleton; graph vertex ``i`` is the ``i``-th vertex of ``K`` by id."""
    pos = {v: i for i, v in enumerate(K.vertices)}
    edges = set()
    for f in K.facets:
        for u, v in itertools.combinations(sorted(f), 2):
            edges.add((pos[u], pos[v]))
    return Graph(K.n, edges, labels=[K.label(v) for v in K.vertices])


def clique_complex(G: Graph) -> Complex:
    """Complex whose faces are the cliques of ``G``."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(G.n))
    nxg.add_edges_from(G.edges())
    cliques = (frozenset(c) for c in nx.find_cliques(nxg))
    return Complex(cliques, dict(enumerate(G.labels)), maximal=True)


def is_flag(K: Complex) -> bool:
    """True iff ``K`` equals the clique complex of its 1-skeleton."""
    return clique_complex(skeleton_graph(K)) == K


def link(K: Complex, face) -> Complex:
    """Link of ``face`` (ids or labels); vertex ids are inherited from ``K``.

    The link of a facet is the complex ``{{}}`` of dimension -1.
    """
    F = K.face(face) if not isinstance(face, frozenset) else face
    star = K.facets_containing(F)
    if not star:
        raise NotAFace(f"{sorted(K.label(v) for v in F if v in K._labels)} is not a face")
    return Complex((f - F for f in star), K._labels, maximal=True)


def _new_id(K: Complex, new_label: str) -> int:
    if new_label in K.ids:
        raise InvalidInput(f"label {new_label!r} already in use")
    return max(K.vertices, default=-1) + 1


def stellar_subdivide_edge(K: Complex, edge, new_label: str) -> Complex:
    """Stellar subdivision at the edge ``{x, y}`` with new vertex ``new_label``."""
    e = K.face(edge) if not isinstance(edge, frozenset) else edge
    if len(e) != 2:
        raise NotAFace("an edge needs exactly two vertices")
    star = set(K.facets_containing(e))
    if not star:
        raise NotAFace(f"{sorted(K.label(v) for v in e)} is not an edge")
    x, y = sorted(e)
    v = _new_id(K, new_label)
    facets = [f for f in K.facets if f not in star]
    for f in star:
        facets.append((f - {x}) | {v})
        facets.append((f - {y}) | {v})
    labels = K.labels
    labels[v] = new_label
    return Complex(facets, labels, maximal=True)


def stellar_subdivide_facet(K: Complex, facet, new_label: str) -> Complex:
    """Cone the boundary of ``facet`` from a new interior vertex."""
    F = K.face(facet) if not isinstance(facet, frozenset) else facet
    if F not in K.facets:
        raise NotAFacet(f"{sorted(K.label(v) for v in F if v in K._labels)} is not a facet")
    v = _new_id(K, new_label)
    facets = [f for f in K.facets if f != F]
    facets.extend((F - {x}) | {v} for x in F)
    labels = K.labels
    labels[v] = new_label
    return Complex(facets, labels, maximal=True)


def join(K1: Complex, K2: Complex) -> Complex:
    """Join ``K1 * K2``. Colliding labels get suffixes ``#L`` / ``#R``."""
    clash = set(K1.ids) & set(K2.ids)
    lab1 = {v: s + "#L" if s in clash else s for v, s in K1._labels.items()}
    lab2 = {v: s + "#R" if s in clash else s for v, s in K2._labels.items()}
    off = {v: i for i, v in enumerate(K1.vertices)}
    off2 = {v: K1.n + i for i, v in enumerate(K2.vertices)}
    labels = {off[v]: s for v, s in lab1.items()}
    labels.update({off2[v]: s for v, s in lab2.items()})
    facets = []
    for f in K1.facets:
        g1 = frozenset(off[v] for v in f)
        for g in K2.facets:
            facets.append(g1 | frozenset(off2[v] for v in g))
    return Complex(facets, labels, maximal=True)


def point(label: str = "p") -> Complex:
    return from_facets([[label]])


def zero_sphere(p: str = "p", q: str = "q") -> Complex:
    return from_facets([[p], [q]])


def suspension(K: Complex, apexes: tuple[str, str] | None = None) -> Complex:
    """Join with two non-adjacent apexes (fresh labels ``p_i``, ``q_i``)."""
    if apexes is None:
        i = 1
        while f"p_{i}" in K.ids or f"q_{i}" in K.ids:
            i += 1
        apexes = (f"p_{i}", f"q_{i}")
    return join(K, zero_sphere(*apexes))


# -- .facets files -------------------------------------------------------

def write_facets(K: Complex, path, header: str | None = None) -> None:
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    lines.extend(" ".join(f) for f in K.sorted_facet_labels())
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_facets(text: str, source: str = "<string>") -> Complex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        labels = line.split()
        if len(set(labels)) != len(labels):
            raise InvalidInput(f"{source}:{lineno}: repeated vertex in facet")
        facets.append(labels)
    if not facets:
        raise InvalidInput(f"{source}: no facets found")
    return from_facets(facets)


def read_facets(path) -> Complex:
    path = Path(path)
    return parse_facets(path.read_text(encoding="utf-8"), str(path))


def join_f_vector(f1: tuple[int, ...], f2: tuple[int, ...]) -> tuple[int, ...]:
    """f-vector of a join from the factors' f-vectors (both starting at f_-1)."""
    out = [0] * (len(f1) + len(f2) - 1)
    for i, a in enumerate(f1):
        for j, b in enumerate(f2):
            out[i + j] += a * b
    return tuple(out)


def crosspolytope_f_vector(d: int) -> tuple[int, ...]:
    return tuple(2 ** i * comb(d, i) for i in range(d + 1))
