"""Coset graphs, their validation, and the brute-force profile oracle."""

from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence

from .config import DEFAULT_LIMITS, Limits
from .cosets import CosetSpace, left_cosets
from .errors import IntersectsSubgroup, NotDoubleCosetUnion, NotEquitable, NotInverseClosed
from .group_core import GroupTable, Subgroup


class ConnectionSet:
    """An inverse-closed union of (H,H)-double cosets disjoint from H.

    Such a set makes coset adjacency independent of representative choice;
    use :func:`validate_connection_set` to build one.
    """

    def __init__(self, subgroup: Subgroup, members: frozenset[int], mask: int):
        self.subgroup = subgroup
        self.members = members
        self.mask = mask

    @property
    def degree(self) -> int:
        return len(self.members) // self.subgroup.order

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"ConnectionSet(|U|={len(self.members)}, |H|={self.subgroup.order})"


def validate_connection_set(H: Subgroup, U: Iterable[int]) -> ConnectionSet:
    """Check the three connection-set invariants and wrap ``U``."""
    G = H.parent
    uset = frozenset(int(u) for u in U)
    mask = 0
    for u in uset:
        if not 0 <= u < G.order:
            raise ValueError(f"element {u} out of range")
        mask |= 1 << u
    if mask & H.mask:
        raise IntersectsSubgroup("connection set meets the base subgroup")
    inv = G.inv
    for u in uset:
        if inv[u] not in uset:
            raise NotInverseClosed(f"{u} is in the set but its inverse is not")
    mult = G.mult
    for u in uset:
        row = mult[u]
        for h in H.members:
            if row[h] not in uset or mult[h][u] not in uset:
                raise NotDoubleCosetUnion(
                    f"set is not H-stable at element {u}"
                )
    return ConnectionSet(H, uset, mask)


class CosetGraph:
    """The graph on left cosets of H with ``g1H ~ g2H`` iff ``g1^-1 g2`` is
    in the connection set.  Simple, undirected, |U|/|H|-regular."""

    def __init__(self, space: CosetSpace, connection: ConnectionSet,
                 adjacency: Optional[tuple[tuple[int, ...], ...]] = None):
        self.space = space
        self.connection = connection
        self._adj = adjacency
        self._adj_masks: Optional[list[int]] = None

    @property
    def vertex_count(self) -> int:
        return self.space.size

    @property
    def degree(self) -> int:
        return self.connection.degree

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._adj is not None:
            return self._adj[v]
        return self._compute_neighbors(v)

    def _compute_neighbors(self, v: int) -> tuple[int, ...]:
        space = self.space
        row = space.group.mult[space.reps[v]]
        coset_of = space.coset_of
        return tuple(sorted({coset_of[row[u]] for u in self.connection.members}))

    def neighbor_masks(self) -> list[int]:
        if self._adj_masks is None:
            masks = []
            for v in range(self.vertex_count):
                m = 0
                for w in self.neighbors(v):
                    m |= 1 << w
                masks.append(m)
            self._adj_masks = masks
        return self._adj_masks

    def edges(self):
        for v in range(self.vertex_count):
            for w in self.neighbors(v):
                if v < w:
                    yield (v, w)

    def to_edge_list_text(self) -> str:
        """Edge-list export: a JSON header line mapping coset index to its
        minimum representative, then one ``u v`` line per edge."""
        header = {
            "vertices": self.vertex_count,
            "degree": self.degree,
            "reps": {str(i): rep for i, rep in enumerate(self.space.reps)},
        }
        lines = [json.dumps(header)]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"CosetGraph({self.vertex_count} vertices, degree {self.degree})"


def build(G: GroupTable, H: Subgroup, connection: ConnectionSet,
          limits: Optional[Limits] = None) -> CosetGraph:
    """Build the coset graph for a validated connection set."""
    limits = limits if limits is not None else DEFAULT_LIMITS
    if connection.subgroup is not H and connection.subgroup.mask != H.mask:
        raise ValueError("connection set was validated over a different subgroup")
    space = left_cosets(G, H)
    assert 0 not in connection.members  # loops are impossible by U cap H = {}
    if space.size > limits.adjacency_vertex_cap:
        return CosetGraph(space, connection, None)
    k = connection.degree
    coset_of = space.coset_of
    mult = G.mult
    adjacency = []
    for v, rep in enumerate(space.reps):
        row = mult[rep]
        nb = sorted({coset_of[row[u]] for u in connection.members})
        assert len(nb) == k and v not in nb
        adjacency.append(tuple(nb))
    return CosetGraph(space, connection, tuple(adjacency))


def profile_subset(graph: CosetGraph, C: Iterable[int]) -> Optional[tuple[int, int]]:
    """The (r, s) profile of vertex subset ``C``, or None if not regular.

    When ``C`` is the whole vertex set the outside condition is vacuous; the
    returned pair reports ``s = 0`` and callers should treat it as degenerate.
    """
    cset = frozenset(int(v) for v in C)
    n = graph.vertex_count
    if not cset:
        raise ValueError("subset must be nonempty")
    for v in cset:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range")
    cmask = 0
    for v in cset:
        cmask |= 1 << v
    masks = graph.neighbor_masks()
    r = -1
    for v in cset:
        cnt = (masks[v] & cmask).bit_count()
        if r < 0:
            r = cnt
        elif cnt != r:
            return None
    if len(cset) == n:
        return (r, 0)
    s = -1
    for v in range(n):
        if v in cset:
            continue
        cnt = (masks[v] & cmask).bit_count()
        if s < 0:
            s = cnt
        elif cnt != s:
            return None
    return (r, s)


def is_perfect_code(graph: CosetGraph, C: Iterable[int]) -> bool:
    """True iff ``C`` is independent and dominates every outside vertex
    exactly once."""
    cset = frozenset(int(v) for v in C)
    if not cset:
        return False
    cmask = 0
    for v in cset:
        cmask |= 1 << v
    masks = graph.neighbor_masks()
    for v in cset:
        if masks[v] & cmask:
            return False
    for v in range(graph.vertex_count):
        if v in cset:
            continue
        if (masks[v] & cmask).bit_count() != 1:
            return False
    return True


class QuotientMatrix:
    """Cell-to-cell edge counts of an equitable vertex partition."""

    def __init__(self, cells: tuple[tuple[int, ...], ...],
                 entries: tuple[tuple[int, ...], ...]):
        self.cells = cells
        self.entries = entries

    def __repr__(self) -> str:
        return f"QuotientMatrix({[list(r) for r in self.entries]})"


def quotient_matrix(graph: CosetGraph, cells: Sequence[Iterable[int]]) -> QuotientMatrix:
    """Quotient matrix of a partition; :class:`NotEquitable` with a witness
    vertex when some vertex disagrees with its cell."""
    n = graph.vertex_count
    cell_tuples = tuple(tuple(sorted(int(v) for v in cell)) for cell in cells)
    seen: set[int] = set()
    for cell in cell_tuples:
        for v in cell:
            if not 0 <= v < n or v in seen:
                raise ValueError("cells do not partition the vertex set")
            seen.add(v)
    if len(seen) != n:
        raise ValueError("cells do not partition the vertex set")
    cell_masks = []
    for cell in cell_tuples:
        m = 0
        for v in cell:
            m |= 1 << v
        cell_masks.append(m)
    masks = graph.neighbor_masks()
    entries = []
    for i, cell in enumerate(cell_tuples):
        first = cell[0]
        row = [(masks[first] & cm).bit_count() for cm in cell_masks]
        for v in cell[1:]:
            if [(masks[v] & cm).bit_count() for cm in cell_masks] != row:
                raise NotEquitable(
                    f"vertex {v} disagrees with cell {i}", witness=v
                )
        entries.append(tuple(row))
    return QuotientMatrix(cell_tuples, tuple(entries))
