"""Finite-group arithmetic on dense multiplication tables.

Elements are integers ``0..n-1`` with ``0`` always the identity.  Conjugation
is right conjugation throughout: ``h^g = g^-1 h g``.  Every representative
choice (coset representatives, quotient sections, enumeration order) picks the
minimum element id, so all outputs are deterministic.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    ClosureExceedsCap,
    ConstructionFailed,
    InvalidPermutation,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    OrderExceedsCap,
    PNotDividing,
)

Perm = tuple[int, ...]

_ASSOC_SEED = 0x5EED


def _compose(p: Perm, q: Perm) -> Perm:
    """Permutation product p*q: apply p first, then q."""
    return tuple(q[i] for i in p)


def _mask_of(members: Iterable[int]) -> int:
    m = 0
    for e in members:
        m |= 1 << e
    return m


def _members_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


class GroupTable:
    """A finite group given by its full multiplication table.

    The constructor validates all group axioms: rows/columns must be
    permutations, index 0 must act as identity, inverses must exist, and
    associativity is checked exhaustively up to
    ``limits.assoc_exhaustive_max`` (sampled above that).
    """

    identity = 0

    def __init__(
        self,
        mult: Sequence[Sequence[int]],
        label: str = "G",
        spec: Optional[dict] = None,
        limits: Optional[Limits] = None,
    ):
        limits = limits if limits is not None else DEFAULT_LIMITS
        rows = tuple(tuple(int(x) for x in row) for row in mult)
        n = len(rows)
        if n == 0:
            raise ValueError("multiplication table is empty")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"entry {x} out of range 0..{n - 1}")
        self.order = n
        self.mult = rows
        self.label = label
        self.spec = spec
        self._cache: dict = {}
        self._check_latin()
        self._check_identity()
        self.inv = self._build_inverses()
        self._check_associative(limits)

    # -- validation -----------------------------------------------------

    def _check_latin(self) -> None:
        n = self.order
        full = frozenset(range(n))
        for i, row in enumerate(self.mult):
            if frozenset(row) != full:
                raise NotLatinSquare(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if frozenset(row[j] for row in self.mult) != full:
                raise NotLatinSquare(f"column {j} is not a permutation of 0..{n - 1}")

    def _check_identity(self) -> None:
        for a in range(self.order):
            if self.mult[0][a] != a or self.mult[a][0] != a:
                raise NoIdentity("index 0 does not act as the identity")

    def _build_inverses(self) -> tuple[int, ...]:
        inv = []
        for a in range(self.order):
            b = self.mult[a].index(0)
            if self.mult[b][a] != 0:
                raise NoInverse(f"element {a} has no two-sided inverse")
            inv.append(b)
        return tuple(inv)

    def _check_associative(self, limits: Limits) -> None:
        n = self.order
        mult = self.mult
        if n <= limits.assoc_exhaustive_max:
            for a in range(n):
                rowa = mult[a]
                for b in range(n):
                    rowab = mult[rowa[b]]
                    rowb = mult[b]
                    if rowab != tuple(rowa[x] for x in rowb):
                        c = next(c for c in range(n) if rowab[c] != rowa[rowb[c]])
                        raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")
            return
        rng = random.Random(_ASSOC_SEED)
        for _ in range(limits.assoc_sample_triples):
            a = rng.randrange(n)
            b = rng.randrange(n)
            c = rng.randrange(n)
            if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")

    # -- basic arithmetic -----------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def conjugate(self, a: int, g: int) -> int:
        """Right conjugate a^g = g^-1 a g."""
        return self.mult[self.mult[self.inv[g]][a]][g]

    def element_order(self, a: int) -> int:
        x = a
        k = 1
        while x != 0:
            x = self.mult[x][a]
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def full_subgroup(self) -> "Subgroup":
        sub = self._cache.get("full_subgroup")
        if sub is None:
            sub = Subgroup(self, range(self.order))
            self._cache["full_subgroup"] = sub
        return sub

    def __repr__(self) -> str:
        return f"GroupTable({self.label!r}, order={self.order})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_cache"] = {}
        return state


class Subgroup:
    """A validated subgroup of a :class:`GroupTable`, stored as a sorted
    member tuple plus a bitmask for fast set algebra."""

    def __init__(self, parent: GroupTable, members: Iterable[int]):
        self.parent = parent
        mems = sorted(set(int(m) for m in members))
        n = parent.order
        for m in mems:
            if not 0 <= m < n:
                raise ValueError(f"element {m} out of range 0..{n - 1}")
        if not mems or mems[0] != 0:
            raise ValueError("subgroup must contain the identity 0")
        memset = frozenset(mems)
        mult = parent.mult
        inv = parent.inv
        for a in mems:
            if inv[a] not in memset:
                raise ValueError(f"subgroup not closed under inverse at {a}")
            row = mult[a]
            for b in mems:
                if row[b] not in memset:
                    raise ValueError(f"subgroup not closed under product at ({a},{b})")
        if n % len(mems) != 0:
            raise ValueError("subgroup order does not divide the group order")
        self.members = tuple(mems)
        self.mask = _mask_of(mems)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, e: int) -> bool:
        return bool((self.mask >> e) & 1)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        if self.order <= 12:
            return f"Subgroup({list(self.members)} of {self.parent.label})"
        return f"Subgroup(order={self.order} of {self.parent.label})"


class QuotientGroup:
    """Quotient of a subgroup by a normal subgroup, with projection/section.

    ``projection`` maps every element of ``domain`` to its coset index in
    ``table``; ``section`` picks the minimum-id representative per coset.
    """

    def __init__(
        self,
        base: GroupTable,
        domain: Subgroup,
        kernel: Subgroup,
        table: GroupTable,
        projection: dict[int, int],
        section: tuple[int, ...],
    ):
        self.base = base
        self.domain = domain
        self.kernel = kernel
        self.table = table
        self.projection = projection
        self.section = section

    def project(self, e: int) -> int:
        return self.projection[e]

    def fiber(self, coset: int) -> tuple[int, ...]:
        """All elements of ``domain`` projecting to ``coset``."""
        return tuple(m for m in self.domain.members if self.projection[m] == coset)

    def __repr__(self) -> str:
        return f"QuotientGroup(order={self.table.order} of {self.base.label})"


def trivial_subgroup(G: GroupTable) -> Subgroup:
    sub = G._cache.get("trivial_subgroup")
    if sub is None:
        sub = Subgroup(G, (0,))
        G._cache["trivial_subgroup"] = sub
    return sub


# -- constructors --------------------------------------------------------


def from_generators(
    degree: int,
    generators: Sequence[Sequence[int]],
    label: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> GroupTable:
    """Close a list of permutations on ``0..degree-1`` into a group table.

    Elements are numbered in BFS discovery order from the identity, using
    the generators in input order, so the result is deterministic.  The
    resulting table carries the discovered permutations in ``.perms``.
    """
    limits = limits if limits is not None else DEFAULT_LIMITS
    if degree < 1:
        raise ValueError("degree must be positive")
    gens: list[Perm] = []
    for g in generators:
        p = tuple(int(x) for x in g)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise InvalidPermutation(f"{list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(p)

    identity = tuple(range(degree))
    index = {identity: 0}
    perms = [identity]
    queue = [identity]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = _compose(x, g)
            if y not in index:
                if len(perms) >= limits.closure_cap:
                    raise ClosureExceedsCap(
                        f"closure exceeded cap {limits.closure_cap}"
                    )
                index[y] = len(perms)
                perms.append(y)
                queue.append(y)

    n = len(perms)
    mult = [[0] * n for _ in range(n)]
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mult[i][j] = index[_compose(p, q)]
    table = GroupTable(mult, label=label or f"perm{degree}<{n}>", limits=limits)
    table.perms = tuple(perms)
    return table


def from_table(
    matrix: Sequence[Sequence[int]],
    label: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> GroupTable:
    """Validate an explicit multiplication table, relabelling so the
    identity sits at index 0."""
    rows = [list(int(x) for x in row) for row in matrix]
    n = len(rows)
    if n == 0:
        raise ValueError("multiplication table is empty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise ValueError(f"entry {x} out of range 0..{n - 1}")
    full = frozenset(range(n))
    for i, row in enumerate(rows):
        if frozenset(row) != full:
            raise NotLatinSquare(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if frozenset(row[j] for row in rows) != full:
            raise NotLatinSquare(f"column {j} is not a permutation of 0..{n - 1}")
    e = next(
        (c for c in range(n) if all(rows[c][a] == a and rows[a][c] == a for a in range(n))),
        None,
    )
    if e is None:
        raise NoIdentity("table has no two-sided identity")
    if e != 0:
        # swap labels 0 <-> e
        sigma = list(range(n))
        sigma[0], sigma[e] = e, 0
        rows = [[sigma[rows[sigma[a]][sigma[b]]] for b in range(n)] for a in range(n)]
    return GroupTable(rows, label=label or f"table<{n}>", limits=limits)


# -- subgroup operations --------------------------------------------------


def generate_subgroup(G: GroupTable, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``seed``."""
    gens = {0}
    for s in seed:
        s = int(s)
        if not 0 <= s < G.order:
            raise ValueError(f"element {s} out of range")
        gens.add(s)
        gens.add(G.inv[s])
    els = set(gens)
    frontier = list(els)
    mult = G.mult
    while frontier:
        new = []
        for a in frontier:
            row = mult[a]
            for g in gens:
                c = row[g]
                if c not in els:
                    els.add(c)
                    new.append(c)
        frontier = new
    return Subgroup(G, els)


def conjugate_subgroup(H: Subgroup, g: int) -> Subgroup:
    """H^g = g^-1 H g."""
    G = H.parent
    return Subgroup(G, (G.conjugate(h, g) for h in H.members))


def _conjugate_mask(G: GroupTable, H: Subgroup, g: int) -> int:
    mult = G.mult
    gi = mult[G.inv[g]]
    m = 0
    for h in H.members:
        m |= 1 << mult[gi[h]][g]
    return m


def normalizer(G: GroupTable, H: Subgroup) -> Subgroup:
    """Largest subgroup of ``G`` in which ``H`` is normal."""
    if H.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    cached = G._cache.get(("normalizer", H.mask))
    if cached is not None:
        return cached
    members = [g for g in range(G.order) if _conjugate_mask(G, H, g) == H.mask]
    result = Subgroup(G, members)
    G._cache[("normalizer", H.mask)] = result
    return result


def intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.parent is not K.parent:
        raise ValueError("subgroups of different groups")
    return Subgroup(H.parent, _members_of(H.mask & K.mask))


def set_product(G: GroupTable, A: Iterable[int], B: Iterable[int]) -> frozenset[int]:
    """The element set ``{a*b : a in A, b in B}``."""
    B = tuple(B)
    out = set()
    mult = G.mult
    for a in A:
        row = mult[a]
        for b in B:
            out.add(row[b])
    return frozenset(out)


def is_normal(H: Subgroup, K: Subgroup) -> bool:
    """True iff ``H^k = H`` for every ``k`` in ``K``; requires ``H <= K``."""
    if H.parent is not K.parent:
        raise ValueError("subgroups of different groups")
    if not H.is_subset_of(K):
        raise ValueError("first subgroup is not contained in the second")
    G = H.parent
    return all(_conjugate_mask(G, H, k) == H.mask for k in K.members)


def quotient(N: Subgroup, K: Subgroup) -> QuotientGroup:
    """Quotient group ``N/K`` on left cosets of ``K``, with projection and
    minimum-representative section."""
    G = N.parent
    cached = G._cache.get(("quotient", N.mask, K.mask))
    if cached is not None:
        return cached
    if not K.is_subset_of(N):
        raise ValueError("kernel is not contained in the domain")
    if not is_normal(K, N):
        raise NotNormal("kernel is not normal in the domain")
    mult = G.mult
    projection: dict[int, int] = {}
    section: list[int] = []
    for m in N.members:  # ascending, so each coset rep is its minimum
        if m in projection:
            continue
        idx = len(section)
        section.append(m)
        row = mult[m]
        for k in K.members:
            projection[row[k]] = idx
    q = len(section)
    qmult = [
        [projection[mult[section[i]][section[j]]] for j in range(q)] for i in range(q)
    ]
    table = GroupTable(qmult, label=f"{G.label}/k{K.order}")
    result = QuotientGroup(G, N, K, table, projection, tuple(section))
    G._cache[("quotient", N.mask, K.mask)] = result
    return result


def sylow_subgroup(A: Subgroup, p: int) -> Subgroup:
    """A Sylow p-subgroup of ``A``, grown through its normalizer chain.

    Deterministic: at each step the minimum-id element of p-power order in
    the current normalizer quotient is adjoined.
    """
    if p < 2 or A.order % p != 0:
        raise PNotDividing(f"{p} does not divide {A.order}")
    G = A.parent
    target = 1
    rest = A.order
    while rest % p == 0:
        target *= p
        rest //= p
    P = trivial_subgroup(G)
    while P.order < target:
        norm = Subgroup(
            G, (a for a in A.members if _conjugate_mask(G, P, a) == P.mask)
        )
        Q = quotient(norm, P)
        qt = Q.table
        cand = next(
            (c for c in range(1, qt.order) if qt.element_order(c) % p == 0), None
        )
        if cand is None:  # Cauchy guarantees one while P is not Sylow
            raise ConstructionFailed("no p-element in normalizer quotient")
        k = qt.element_order(cand) // p
        y = cand
        for _ in range(k - 1):
            y = qt.mult[y][cand]
        P = generate_subgroup(G, P.members + (Q.section[y],))
    return P


def all_subgroups(G: GroupTable, limits: Optional[Limits] = None) -> list[Subgroup]:
    """Every subgroup of ``G``, sorted by (order, member list).

    Closes all cyclic subgroups under pairwise joins until a fixed point.
    """
    limits = limits if limits is not None else DEFAULT_LIMITS
    if G.order > limits.enumeration_cap:
        raise OrderExceedsCap(
            f"group order {G.order} exceeds enumeration cap {limits.enumeration_cap}"
        )
    cached = G._cache.get("all_subgroups")
    if cached is not None:
        return list(cached)
    masks: dict[int, tuple[int, ...]] = {}
    for x in range(G.order):
        sub = generate_subgroup(G, (x,))
        masks.setdefault(sub.mask, sub.members)
    queue = list(masks)
    while queue:
        m1 = queue.pop()
        for m2 in list(masks):
            joined = m1 | m2
            if joined == m1 or joined == m2 or joined in masks:
                continue
            sub = generate_subgroup(G, _members_of(joined))
            if sub.mask not in masks:
                masks[sub.mask] = sub.members
                queue.append(sub.mask)
    ordered = sorted(masks.values(), key=lambda mem: (len(mem), mem))
    result = [Subgroup(G, mem) for mem in ordered]
    G._cache["all_subgroups"] = result
    return list(result)


def involution_exists_in_coset(G: GroupTable, x: int, A: Subgroup) -> bool:
    """True iff some element of the coset ``xA`` squares to the identity.

    Intended for ``x`` outside ``A``; for ``x`` in ``A`` the coset contains
    the identity and the answer is trivially True.
    """
    mult = G.mult
    row = mult[x]
    for a in A.members:
        y = row[a]
        if mult[y][y] == 0:
            return True
    return False
