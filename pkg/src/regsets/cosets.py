"""Left cosets, transversals and (H,H)-double cosets."""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import NotDoubleCosetUnion, NotLeftCosetUnion
from .group_core import GroupTable, Subgroup


class CosetSpace:
    """The left cosets of a subgroup, with minimum-element representatives.

    ``reps[0]`` is always the identity (the subgroup itself is coset 0) and
    ``coset_of`` is total over the parent group.
    """

    def __init__(self, group: GroupTable, subgroup: Subgroup,
                 reps: tuple[int, ...], coset_of: tuple[int, ...]):
        self.group = group
        self.subgroup = subgroup
        self.reps = reps
        self.coset_of = coset_of

    @property
    def size(self) -> int:
        return len(self.reps)

    def members(self, i: int) -> tuple[int, ...]:
        """Elements of coset ``i``."""
        mult = self.group.mult
        row = mult[self.reps[i]]
        return tuple(sorted(row[h] for h in self.subgroup.members))

    def __repr__(self) -> str:
        return f"CosetSpace({self.size} cosets of |H|={self.subgroup.order})"


class DoubleCosetDecomp:
    """A set split into (H,H)-double cosets.

    ``inverse_pairing[i] = (i, j)`` locates the class of ``reps[i]^-1``;
    ``j`` is None when that class lies outside the decomposed set.
    """

    def __init__(self, subgroup: Subgroup, reps: tuple[int, ...],
                 member_sets: tuple[frozenset[int], ...],
                 inverse_pairing: tuple[tuple[int, Optional[int]], ...],
                 self_inverse_flags: tuple[bool, ...]):
        self.subgroup = subgroup
        self.reps = reps
        self.member_sets = member_sets
        self.inverse_pairing = inverse_pairing
        self.self_inverse_flags = self_inverse_flags

    def __len__(self) -> int:
        return len(self.reps)

    @property
    def closed_under_inverse(self) -> bool:
        return all(j is not None for _, j in self.inverse_pairing)

    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for ms in self.member_sets:
            out |= ms
        return frozenset(out)


def left_cosets(G: GroupTable, H: Subgroup) -> CosetSpace:
    if H.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    cached = G._cache.get(("left_cosets", H.mask))
    if cached is not None:
        return cached
    coset_of = [-1] * G.order
    reps = []
    mult = G.mult
    hm = H.members
    for g in range(G.order):  # ascending scan makes reps minimal
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        row = mult[g]
        for h in hm:
            coset_of[row[h]] = idx
    space = CosetSpace(G, H, tuple(reps), tuple(coset_of))
    G._cache[("left_cosets", H.mask)] = space
    return space


def left_transversal(G: GroupTable, A: Subgroup) -> list[int]:
    """Minimum-element representatives, one per left coset of ``A``,
    identity first."""
    return list(left_cosets(G, A).reps)


def double_coset(H: Subgroup, x: int) -> frozenset[int]:
    """The double coset ``HxH`` as an element set."""
    G = H.parent
    mult = G.mult
    row = mult[x]
    right = [row[h] for h in H.members]
    out = set()
    for h in H.members:
        row_h = mult[h]
        for y in right:
            out.add(row_h[y])
    return frozenset(out)


def decompose_into_double_cosets(S: Iterable[int], H: Subgroup) -> DoubleCosetDecomp:
    """Partition ``S`` into (H,H)-double cosets.

    Raises :class:`NotDoubleCosetUnion` when some class straddles the
    boundary of ``S``.  Representatives are minimal and ascending.
    """
    G = H.parent
    sset = frozenset(int(x) for x in S)
    for x in sset:
        if not 0 <= x < G.order:
            raise ValueError(f"element {x} out of range")
    reps: list[int] = []
    member_sets: list[frozenset[int]] = []
    class_of: dict[int, int] = {}
    for x in sorted(sset):
        if x in class_of:
            continue
        d = double_coset(H, x)
        if not d <= sset:
            raise NotDoubleCosetUnion(
                f"double coset of {x} leaves the given set"
            )
        idx = len(reps)
        reps.append(x)
        member_sets.append(d)
        for m in d:
            class_of[m] = idx
    inv = G.inv
    pairing: list[tuple[int, Optional[int]]] = []
    flags: list[bool] = []
    for i, r in enumerate(reps):
        j = class_of.get(inv[r])
        pairing.append((i, j))
        flags.append(j == i)
    return DoubleCosetDecomp(
        H, tuple(reps), tuple(member_sets), tuple(pairing), tuple(flags)
    )


def left_coset_count(U: Iterable[int], H: Subgroup) -> int:
    """Number of left cosets of ``H`` making up ``U``.

    Validates that ``U`` is a union of left cosets (``U*H == U``).
    """
    G = H.parent
    uset = frozenset(int(u) for u in U)
    mult = G.mult
    for u in uset:
        row = mult[u]
        for h in H.members:
            if row[h] not in uset:
                raise NotLeftCosetUnion(
                    f"{u}*{h} leaves the set; not a union of left cosets"
                )
    return len(uset) // H.order


def conj_index(H: Subgroup, t: int) -> int:
    """The index ``|H| / |H meet H^t|``; equals ``|HtH| / |H|``."""
    G = H.parent
    mult = G.mult
    ti = G.inv[t]
    row_t = mult[t]
    meet = 0
    hmask = H.mask
    for h in H.members:
        # t h t^-1 in H  <=>  h in H^t
        if (hmask >> mult[row_t[h]][ti]) & 1:
            meet += 1
    return H.order // meet
