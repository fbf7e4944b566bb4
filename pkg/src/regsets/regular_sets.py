"""Deciders, constructions and certificates for (r,s)-regular subgroup sets.

A subgroup ``A`` with ``H <= A <= G`` is an (r,s)-regular set of the pair
(G, H) when some coset graph on G/H exists in which the A-cosets form an
(r,s)-regular vertex set.  Equivalently (and this is how the search works):
there is an inverse-closed union ``U`` of (H,H)-double cosets avoiding H
whose H-coset count inside the block ``A`` is ``r`` and inside every other
left A-coset is ``s``.

Everything here returns either a re-checkable :class:`RegSetCertificate`
(validated against the graph oracle before being handed out) or a definite
"absent" after a complete search.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Optional

from .config import DEFAULT_LIMITS, Limits
from .coset_graph import ConnectionSet, build, profile_subset, validate_connection_set
from .cosets import (
    conj_index,
    decompose_into_double_cosets,
    double_coset,
    left_coset_count,
    left_cosets,
)
from .errors import (
    ConstructionFailed,
    FrattiniCheckFailed,
    NotLeftCosetUnion,
    PreconditionViolated,
    SearchBudgetExceeded,
)
from .group_core import (
    GroupTable,
    Subgroup,
    intersect,
    is_normal,
    normalizer,
    quotient,
    set_product,
    sylow_subgroup,
    trivial_subgroup,
)


@dataclass(frozen=True)
class PairSpec:
    """The data of a decision instance: a chain ``H <= A <= G``."""

    G: GroupTable
    H: Subgroup
    A: Subgroup

    def __post_init__(self):
        if self.H.parent is not self.G or self.A.parent is not self.G:
            raise ValueError("subgroups must belong to the given group")
        if not self.H.is_subset_of(self.A):
            raise ValueError("H must be contained in A")

    @property
    def code_index(self) -> int:
        """|A : H|, the number of H-cosets inside A."""
        return self.A.order // self.H.order

    def __repr__(self) -> str:
        return (
            f"PairSpec({self.G.label}, |H|={self.H.order}, |A|={self.A.order})"
        )


class CheckResult(NamedTuple):
    name: str
    passed: bool


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    checks: tuple[CheckResult, ...]


@dataclass(frozen=True)
class RegSetCertificate:
    """An explicit, independently re-checkable (r,s) witness.

    ``connection`` is the connection set U, ``witness`` the set X with
    ``XH = HX^-1`` (here X = U, which always works since U is inverse-closed
    and H-stable), and ``double_coset_reps`` the minimal representatives of
    the double cosets whose union is U.
    """

    pair: PairSpec
    r: int
    s: int
    double_coset_reps: tuple[int, ...]
    connection: ConnectionSet
    witness: frozenset[int]
    checks: tuple[CheckResult, ...]

    @property
    def degree(self) -> int:
        return self.connection.degree

    def to_json_dict(self) -> dict:
        group = {"label": self.pair.G.label, "order": self.pair.G.order}
        if self.pair.G.spec is not None:
            group["spec"] = self.pair.G.spec
        return {
            "group": group,
            "H": list(self.pair.H.members),
            "A": list(self.pair.A.members),
            "r": self.r,
            "s": self.s,
            "double_coset_reps": list(self.double_coset_reps),
            "U": sorted(self.connection.members),
            "X": sorted(self.witness),
            "checks": [{"name": c.name, "pass": c.passed} for c in self.checks],
        }


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the three normal-chain conditions, with witnesses for
    failures (an offending coset representative where applicable)."""

    condition_ids: tuple[str, ...]
    outcomes: tuple[bool, ...]
    witnesses: tuple[Optional[int], ...]

    @property
    def verdict(self) -> bool:
        return all(self.outcomes)


@dataclass(frozen=True)
class NormalizerReduction:
    """Result of reducing a pair decision to the normalizer quotient.

    ``applicable`` records whether G equals N_G(H)*A; ``verdict`` is the
    conjunction with the quotient-level criterion.  For s = 1 the reduction
    is exact, and ``converse_consistent`` reports whether a false verdict
    indeed coincides with an absent exhaustive search.
    """

    applicable: bool
    verdict: bool
    certificate: Optional[RegSetCertificate]
    converse_consistent: Optional[bool]


# -- shared per-pair analysis ---------------------------------------------


class _Unit(NamedTuple):
    """An atomic inverse-closed union of double cosets (a self-inverse class
    or a class paired with its inverse class)."""

    class_ids: tuple[int, ...]
    reps: tuple[int, ...]
    vector: tuple[int, ...]  # H-coset count per A-coset block
    members: frozenset[int]


class _PairContext:
    def __init__(self, pair: PairSpec):
        G, H, A = pair.G, pair.H, pair.A
        self.hspace = left_cosets(G, H)
        self.aspace = left_cosets(G, A)
        self.nblocks = self.aspace.size
        self.block_inv = tuple(
            self.aspace.coset_of[G.inv[rep]] for rep in self.aspace.reps
        )
        outside = [g for g in range(G.order) if not (H.mask >> g) & 1]
        self.decomp = decompose_into_double_cosets(outside, H)
        hcos = self.hspace.coset_of
        acos = self.aspace.coset_of
        vectors = []
        for members in self.decomp.member_sets:
            vec = [0] * self.nblocks
            seen: set[int] = set()
            for m in members:
                hid = hcos[m]
                if hid not in seen:
                    seen.add(hid)
                    vec[acos[m]] += 1
            vectors.append(tuple(vec))
        self.class_vectors = tuple(vectors)
        units = []
        for (i, j) in self.decomp.inverse_pairing:
            assert j is not None  # complement of H is inverse closed
            if j == i:
                units.append(self._make_unit((i,)))
            elif i < j:
                units.append(self._make_unit((i, j)))
        units.sort(key=lambda u: (-sum(u.vector), u.reps))
        self.units = tuple(units)
        sufs = []
        acc = (0,) * self.nblocks
        for u in reversed(units):
            acc = tuple(a + b for a, b in zip(acc, u.vector))
            sufs.append(acc)
        sufs.reverse()
        self.suffix_sums = tuple(sufs)

    def _make_unit(self, class_ids: tuple[int, ...]) -> _Unit:
        vec = [0] * self.nblocks
        members: set[int] = set()
        reps = []
        for c in class_ids:
            for b, x in enumerate(self.class_vectors[c]):
                vec[b] += x
            members |= self.decomp.member_sets[c]
            reps.append(self.decomp.reps[c])
        return _Unit(class_ids, tuple(sorted(reps)), tuple(vec), frozenset(members))


def _pair_context(pair: PairSpec) -> _PairContext:
    key = ("pairctx", pair.H.mask, pair.A.mask)
    ctx = pair.G._cache.get(key)
    if ctx is None:
        ctx = _PairContext(pair)
        pair.G._cache[key] = ctx
    return ctx


def _validate_range(pair: PairSpec, r: int, s: int) -> None:
    idx = pair.code_index
    if not 0 <= r <= idx - 1:
        raise ValueError(f"r={r} out of range 0..{idx - 1}")
    if not 0 <= s <= idx:
        raise ValueError(f"s={s} out of range 0..{idx}")


# -- verification ----------------------------------------------------------


def verify_witness(pair: PairSpec, X, r: int, s: int) -> WitnessReport:
    """Re-check a witness set X directly against the coset-count conditions:
    XH = HX^-1, XH disjoint from H, XH meets A in exactly r left H-cosets
    and every other left A-coset in exactly s of them."""
    G, H, A = pair.G, pair.H, pair.A
    xset = frozenset(int(x) for x in X)
    mult = G.mult
    inv = G.inv
    xh = set()
    hxinv = set()
    for x in xset:
        row = mult[x]
        xi = inv[x]
        for h in H.members:
            xh.add(row[h])
            hxinv.add(mult[h][xi])
    checks = []
    checks.append(CheckResult("inverse_symmetry", xh == hxinv))
    checks.append(CheckResult("disjoint_from_subgroup", not any((H.mask >> y) & 1 for y in xh)))
    try:
        inside_ok = left_coset_count(xh & set(A.members), H) == r
    except NotLeftCosetUnion:
        inside_ok = False
    checks.append(CheckResult("inside_count", inside_ok))
    aspace = left_cosets(G, A)
    outside_ok = True
    for t in aspace.reps[1:]:
        row = mult[t]
        ta = {row[a] for a in A.members}
        try:
            if left_coset_count(xh & ta, H) != s:
                outside_ok = False
                break
        except NotLeftCosetUnion:
            outside_ok = False
            break
    checks.append(CheckResult("outside_counts", outside_ok))
    checks = tuple(checks)
    return WitnessReport(all(c.passed for c in checks), checks)


def _certify(pair: PairSpec, class_reps, members, r: int, s: int,
             limits: Limits) -> RegSetCertificate:
    """Validate a candidate U against both the witness conditions and the
    graph oracle; only validated certificates leave this module."""
    G, H, A = pair.G, pair.H, pair.A
    conn = validate_connection_set(H, members)
    report = verify_witness(pair, conn.members, r, s)
    graph = build(G, H, conn, limits=limits)
    cvert = frozenset(graph.space.coset_of[a] for a in A.members)
    prof = profile_subset(graph, cvert)
    if len(cvert) == graph.vertex_count:
        oracle_ok = prof is not None and prof[0] == r
    else:
        oracle_ok = prof == (r, s)
    checks = report.checks + (CheckResult("graph_profile", oracle_ok),)
    if not (report.ok and oracle_ok):
        failed = [c.name for c in checks if not c.passed]
        raise ConstructionFailed(f"candidate failed validation: {failed}")
    return RegSetCertificate(
        pair, r, s, tuple(sorted(class_reps)), conn, frozenset(conn.members), checks
    )


# -- exhaustive decision ----------------------------------------------------


def decide_regular_set(pair: PairSpec, r: int, s: int,
                       limits: Optional[Limits] = None) -> Optional[RegSetCertificate]:
    """Complete search for a connection set realizing the profile (r, s).

    The complement of H splits into atomic inverse-closed units (a
    self-inverse double coset, or a class taken together with its inverse
    class).  Each unit contributes a fixed vector of H-coset counts per left
    A-coset; backtracking with per-block suffix pruning and failed-state
    memoization finds a sub-collection summing to (r, s, s, ...) or proves
    none exists.  ``None`` therefore certifies non-existence; running out of
    node budget raises :class:`SearchBudgetExceeded` instead.
    """
    limits = limits if limits is not None else DEFAULT_LIMITS
    _validate_range(pair, r, s)
    ctx = _pair_context(pair)
    nb = ctx.nblocks
    target = (r,) + (s,) * (nb - 1)
    units = ctx.units
    m = len(units)
    sufs = ctx.suffix_sums
    budget = limits.search_node_budget
    nodes = 0
    failed: set[tuple[int, tuple[int, ...]]] = set()
    chosen: list[_Unit] = []
    zero = (0,) * nb

    def dfs(i: int, remaining: tuple[int, ...]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"node budget {budget} exhausted")
        if remaining == zero:
            return True
        if i == m:
            return False
        state = (i, remaining)
        if state in failed:
            return False
        suf = sufs[i]
        for b in range(nb):
            if remaining[b] > suf[b]:
                failed.add(state)
                return False
        vec = units[i].vector
        if all(remaining[b] >= vec[b] for b in range(nb)):
            if dfs(i + 1, tuple(remaining[b] - vec[b] for b in range(nb))):
                chosen.append(units[i])
                return True
        if dfs(i + 1, remaining):
            return True
        failed.add(state)
        return False

    if not dfs(0, target):
        return None
    class_reps = [ctx.decomp.reps[c] for u in chosen for c in u.class_ids]
    members: set[int] = set()
    for u in chosen:
        members |= u.members
    return _certify(pair, class_reps, members, r, s, limits)


# -- normal-chain criteria and construction ---------------------------------


class _ChainContext:
    """Per-block data valid when H is normal in A and A is normal in G:
    every double coset lies in a single A-coset block and all classes of a
    block have the same H-coset count."""

    def __init__(self, pair: PairSpec, ctx: _PairContext):
        G = pair.G
        nb = ctx.nblocks
        acos = ctx.aspace.coset_of
        self.block_inv = ctx.block_inv
        classes_by_block: list[list[int]] = [[] for _ in range(nb)]
        for c, members in enumerate(ctx.decomp.member_sets):
            blocks = {acos[m] for m in members}
            assert len(blocks) == 1  # guaranteed by the normal chain
            classes_by_block[blocks.pop()].append(c)
        self.classes_by_block = [sorted(ids) for ids in classes_by_block]
        self.block_ci: list[Optional[int]] = [None] * nb
        for b, ids in enumerate(self.classes_by_block):
            if not ids:
                continue
            counts = {sum(ctx.class_vectors[c]) for c in ids}
            assert len(counts) == 1  # classes of one block share their size
            self.block_ci[b] = counts.pop()
        self.selfs_by_block = [
            [c for c in ids if ctx.decomp.self_inverse_flags[c]]
            for ids in self.classes_by_block
        ]
        pairs_by_block: list[list[tuple[int, int]]] = [[] for _ in range(nb)]
        partner = {i: j for i, j in ctx.decomp.inverse_pairing}
        for b, ids in enumerate(self.classes_by_block):
            for c in ids:
                j = partner[c]
                if j != c and acos[ctx.decomp.reps[j]] == b and c < j:
                    pairs_by_block[b].append((c, j))
        self.pairs_by_block = pairs_by_block
        self.partner = partner


def _chain_context(pair: PairSpec) -> _ChainContext:
    key = ("chainctx", pair.H.mask, pair.A.mask)
    cctx = pair.G._cache.get(key)
    if cctx is None:
        cctx = _ChainContext(pair, _pair_context(pair))
        pair.G._cache[key] = cctx
    return cctx


def _require_normal_chain(pair: PairSpec) -> None:
    if not is_normal(pair.H, pair.A):
        raise PreconditionViolated("H is not normal in A")
    if not is_normal(pair.A, pair.G.full_subgroup()):
        raise PreconditionViolated("A is not normal in G")


def check_normal_chain(pair: PairSpec, r: int, s: int,
                       strict: bool = False) -> ConditionReport:
    """Evaluate the three conditions that characterize (r, s)-regularity for
    a normal chain H <| A <| G:

    - parity: gcd(2, |A:H| - 1) divides r;
    - divisibility: |H| / |H meet H^t| divides s for every t outside A;
    - self_paired: whenever x outside A has x^2 in A and s/|HxH:H| is odd,
      some class inside xA is its own inverse class.

    By default divisibility and self_paired are tested once per A-coset
    orbit (the quantities are constant on ``tA`` together with ``t^-1 A``);
    ``strict=True`` re-tests every element individually.
    """
    G, H, A = pair.G, pair.H, pair.A
    _require_normal_chain(pair)
    _validate_range(pair, r, s)
    idx = pair.code_index
    parity_ok = r % gcd(2, idx - 1) == 0

    ctx = _pair_context(pair)
    cctx = _chain_context(pair)
    div_ok, div_witness = True, None
    self_ok, self_witness = True, None
    if strict:
        for t in range(G.order):
            if (A.mask >> t) & 1:
                continue
            ci = conj_index(H, t)
            if s % ci != 0:
                div_ok, div_witness = False, t
                break
        for x in range(G.order):
            if (A.mask >> x) & 1:
                continue
            if not (A.mask >> G.mult[x][x]) & 1:
                continue
            ci = conj_index(H, x)
            if s % ci != 0 or (s // ci) % 2 == 0:
                continue
            found = False
            for a in A.members:
                d = double_coset(H, G.mult[x][a])
                if d == frozenset(G.inv[m] for m in d):
                    found = True
                    break
            if not found:
                self_ok, self_witness = False, x
                break
    else:
        for b in range(1, ctx.nblocks):
            t = ctx.aspace.reps[b]
            ci = cctx.block_ci[b]
            if s % ci != 0:
                if div_ok:
                    div_ok, div_witness = False, t
            elif cctx.block_inv[b] == b and (s // ci) % 2 == 1:
                if not cctx.selfs_by_block[b] and self_ok:
                    self_ok, self_witness = False, t
    return ConditionReport(
        ("parity", "divisibility", "self_paired"),
        (parity_ok, div_ok, self_ok),
        (None, div_witness, self_witness),
    )


def _select_in_block(cctx: _ChainContext, b: int, quota: int) -> list[int]:
    """Pick ``quota`` classes from a self-paired block, inverse pairs first,
    self-inverse classes for the remainder; minimum-representative order."""
    pairs = cctx.pairs_by_block[b]
    selfs = cctx.selfs_by_block[b]
    npairs = min(len(pairs), quota // 2)
    rem = quota - 2 * npairs
    if rem > len(selfs):
        raise ConstructionFailed(
            f"block {b}: need {rem} self-inverse classes, have {len(selfs)}"
        )
    chosen: list[int] = []
    for i, j in pairs[:npairs]:
        chosen.extend((i, j))
    chosen.extend(selfs[:rem])
    return chosen


def construct_normal_chain(pair: PairSpec, r: int, s: int,
                           limits: Optional[Limits] = None) -> RegSetCertificate:
    """Explicitly build a connection set realizing (r, s) for a normal chain.

    Inside A the construction picks r H-cosets (inverse pairs padded with
    self-inverse cosets); outside, each A-coset orbit receives s/|HtH:H|
    whole double cosets, pairing a coset with its inverse class or using the
    even/odd split inside self-paired orbits.
    """
    limits = limits if limits is not None else DEFAULT_LIMITS
    report = check_normal_chain(pair, r, s)
    if not report.verdict:
        raise PreconditionViolated(
            f"normal-chain conditions fail: {report!r}"
        )
    ctx = _pair_context(pair)
    cctx = _chain_context(pair)
    chosen = _select_in_block(cctx, 0, r)
    for b in range(1, ctx.nblocks):
        binv = cctx.block_inv[b]
        if binv < b:
            continue
        ci = cctx.block_ci[b]
        lt = s // ci
        if lt == 0:
            continue
        if binv != b:
            ids = cctx.classes_by_block[b][:lt]
            if len(ids) < lt:
                raise ConstructionFailed(f"block {b}: fewer than {lt} classes")
            chosen.extend(ids)
            chosen.extend(cctx.partner[c] for c in ids)
        else:
            chosen.extend(_select_in_block(cctx, b, lt))
    members: set[int] = set()
    for c in chosen:
        members |= ctx.decomp.member_sets[c]
    class_reps = [ctx.decomp.reps[c] for c in chosen]
    return _certify(pair, class_reps, members, r, s, limits)


# -- Cayley-case criteria (H trivial) ---------------------------------------


def cayley_normal_criterion(G: GroupTable, A: Subgroup, r: int, s: int) -> bool:
    """Decide (r, s)-regularity of a normal subgroup in some Cayley graph:
    always constructible for even s; for odd s exactly when every coset xA
    with x^2 in A contains an involution."""
    full = G.full_subgroup()
    if not is_normal(A, full):
        raise PreconditionViolated("A is not normal in G")
    if not 0 <= r <= A.order - 1 or not 0 <= s <= A.order:
        raise ValueError(f"(r,s)=({r},{s}) out of range for |A|={A.order}")
    if r % gcd(2, A.order - 1) != 0:
        raise PreconditionViolated(f"gcd(2,|A|-1) does not divide r={r}")
    if s % 2 == 0:
        return True
    mult = G.mult
    for x in range(G.order):
        if (A.mask >> x) & 1:
            continue
        if not (A.mask >> mult[x][x]) & 1:
            continue
        if not any(mult[mult[x][a]][mult[x][a]] == 0 for a in A.members):
            return False
    return True


def normal_perfect_code_criterion(G: GroupTable, A: Subgroup) -> bool:
    """Square-root criterion for a normal subgroup to be a perfect code of
    some Cayley graph: every x with x^2 in A admits a in A with (xa)^2 = 1."""
    full = G.full_subgroup()
    if not is_normal(A, full):
        raise PreconditionViolated("A is not normal in G")
    mult = G.mult
    for x in range(G.order):
        if (A.mask >> x) & 1:
            continue  # a = x^-1 always works inside A
        if not (A.mask >> mult[x][x]) & 1:
            continue
        if not any(mult[mult[x][a]][mult[x][a]] == 0 for a in A.members):
            return False
    return True


def cayley_odd_s_check(G: GroupTable, A: Subgroup, r: int, s: int,
                       limits: Optional[Limits] = None) -> tuple[bool, bool]:
    """For odd s, (r, s)-regularity of a normal subgroup coincides with the
    perfect-code criterion.  Returns (verdict, consistency), where the flag
    re-derives the verdict from the exhaustive search."""
    if s % 2 != 1:
        raise PreconditionViolated("s must be odd")
    full = G.full_subgroup()
    if not is_normal(A, full):
        raise PreconditionViolated("A is not normal in G")
    if not 0 <= r <= A.order - 1 or not 0 <= s <= A.order:
        raise ValueError(f"(r,s)=({r},{s}) out of range for |A|={A.order}")
    if r % gcd(2, A.order - 1) != 0:
        raise PreconditionViolated(f"gcd(2,|A|-1) does not divide r={r}")
    verdict = normal_perfect_code_criterion(G, A)
    pair = PairSpec(G, trivial_subgroup(G), A)
    present = decide_regular_set(pair, r, s, limits=limits) is not None
    return verdict, verdict == present


# -- normalizer-quotient reduction ------------------------------------------


def normalizer_reduction(pair: PairSpec, r: int, s: int,
                         limits: Optional[Limits] = None) -> NormalizerReduction:
    """Reduce the pair decision for a normal A to the quotient N_G(H)/H.

    Tests G = N_G(H) * A, then decides whether the image of N_A(H) is an
    (r,s)-regular set of the quotient; when both hold a certificate for the
    original pair is produced by lifting a quotient-level connection set
    through the section.  For s = 1 the reduction is an equivalence and the
    report records consistency with the exhaustive search.
    """
    limits = limits if limits is not None else DEFAULT_LIMITS
    G, H, A = pair.G, pair.H, pair.A
    full = G.full_subgroup()
    if not is_normal(A, full):
        raise PreconditionViolated("A is not normal in G")
    N = normalizer(G, H)
    quo = quotient(N, H)
    bmembers = sorted({quo.projection[m] for m in intersect(A, N).members})
    B = Subgroup(quo.table, bmembers)
    border = B.order
    if not 0 <= r <= border - 1 or not 0 <= s <= border:
        raise PreconditionViolated(
            f"(r,s)=({r},{s}) out of range for |N_A(H)/H|={border}"
        )
    if r % gcd(2, border - 1) != 0:
        raise PreconditionViolated("gcd(2,|N_A(H)/H|-1) does not divide r")
    applicable = len(set_product(G, N.members, A.members)) == G.order
    quotient_ok = cayley_normal_criterion(quo.table, B, r, s)
    verdict = applicable and quotient_ok
    certificate = None
    if verdict:
        qpair = PairSpec(quo.table, trivial_subgroup(quo.table), B)
        qcert = decide_regular_set(qpair, r, s, limits=limits)
        if qcert is None:  # criterion guarantees existence
            raise ConstructionFailed("quotient-level search found no witness")
        fibers: dict[int, list[int]] = {}
        for m in N.members:
            fibers.setdefault(quo.projection[m], []).append(m)
        members: set[int] = set()
        class_reps = []
        for q in qcert.connection.members:
            fib = fibers[q]
            members.update(fib)
            class_reps.append(min(fib))
        certificate = _certify(pair, class_reps, members, r, s, limits)
    converse_consistent = None
    if s == 1:
        if verdict:
            converse_consistent = True
        else:
            converse_consistent = decide_regular_set(pair, r, 1, limits=limits) is None
    return NormalizerReduction(applicable, verdict, certificate, converse_consistent)


def perfect_code_pair(pair: PairSpec,
                      limits: Optional[Limits] = None
                      ) -> tuple[bool, Optional[RegSetCertificate]]:
    """Decide whether A is a perfect code of the pair (G, H), i.e. a
    (0,1)-regular set.  Normal A goes through the normalizer-quotient
    criterion (with a lifted certificate); otherwise the exhaustive search
    decides."""
    limits = limits if limits is not None else DEFAULT_LIMITS
    if is_normal(pair.A, pair.G.full_subgroup()):
        red = normalizer_reduction(pair, 0, 1, limits=limits)
        return red.verdict, red.certificate
    cert = decide_regular_set(pair, 0, 1, limits=limits)
    return cert is not None, cert


# -- perfect-code corollaries ------------------------------------------------


def perfect_code_normalizer_criterion(pair: PairSpec) -> bool:
    """Perfect-code test for normal A via normalizer membership: G = A*N_G(H)
    and every x with x^2 in A admits b in A with xb in N_G(H), (xb)^2 in H."""
    G, H, A = pair.G, pair.H, pair.A
    if not is_normal(A, G.full_subgroup()):
        raise PreconditionViolated("A is not normal in G")
    N = normalizer(G, H)
    if len(set_product(G, A.members, N.members)) != G.order:
        return False
    mult = G.mult
    for x in range(G.order):
        if not (A.mask >> mult[x][x]) & 1:
            continue
        row = mult[x]
        ok = False
        for b in A.members:
            xb = row[b]
            if (N.mask >> xb) & 1 and (H.mask >> mult[xb][xb]) & 1:
                ok = True
                break
        if not ok:
            return False
    return True


def perfect_code_quotient_criterion(pair: PairSpec) -> bool:
    """For a normal chain, A is a perfect code of (G, H) iff H is normal in
    all of G and A/H is a perfect code of G/H."""
    G, H, A = pair.G, pair.H, pair.A
    full = G.full_subgroup()
    if not is_normal(H, A) or not is_normal(A, full):
        raise PreconditionViolated("requires H normal in A and A normal in G")
    if not is_normal(H, full):
        return False
    quo = quotient(full, H)
    abar = Subgroup(quo.table, sorted({quo.projection[a] for a in A.members}))
    return normal_perfect_code_criterion(quo.table, abar)


def perfect_code_odd_order_criterion(pair: PairSpec) -> bool:
    """When |A| or |G:A| is odd, the perfect-code property reduces to the
    single product condition G = N_G(H) * A."""
    G, H, A = pair.G, pair.H, pair.A
    if not is_normal(A, G.full_subgroup()):
        raise PreconditionViolated("A is not normal in G")
    if A.order % 2 == 0 and (G.order // A.order) % 2 == 0:
        raise PreconditionViolated("requires |A| or |G:A| odd")
    N = normalizer(G, H)
    return len(set_product(G, N.members, A.members)) == G.order


def perfect_code_sylow_criterion(G: GroupTable, A: Subgroup, p: int) -> bool:
    """Perfect-code test for (G, H, A) with H a Sylow p-subgroup of a normal
    A.  The product G = N_G(H)*A must hold automatically (Frattini argument);
    it is checked, not assumed."""
    if not is_normal(A, G.full_subgroup()):
        raise PreconditionViolated("A is not normal in G")
    H = sylow_subgroup(A, p)
    N = normalizer(G, H)
    if len(set_product(G, N.members, A.members)) != G.order:
        raise FrattiniCheckFailed("G != N_G(H) * A for a Sylow subgroup of A")
    mult = G.mult
    for x in range(G.order):
        if (A.mask >> x) & 1:
            continue
        if not (A.mask >> mult[x][x]) & 1:
            continue
        row = mult[x]
        ok = False
        for a in A.members:
            xa = row[a]
            if (N.mask >> xa) & 1 and (H.mask >> mult[xa][xa]) & 1:
                ok = True
                break
        if not ok:
            return False
    return True


# -- necessary conditions -----------------------------------------------------


def necessary_conjugate_intersection(pair: PairSpec) -> bool:
    """Necessary for a perfect code: every g admits a in A with
    A^(ga) meet H equal to H^(ga) meet H."""
    G, H, A = pair.G, pair.H, pair.A
    mult = G.mult
    inv = G.inv
    amask = A.mask
    hmask = H.mask
    for g in range(G.order):
        row = mult[g]
        found = False
        for a in A.members:
            c = row[a]
            ci = inv[c]
            crow = mult[c]
            ok = True
            for u in H.members:
                t = mult[crow[u]][ci]  # u in H^c iff c u c^-1 in H
                if bool((amask >> t) & 1) != bool((hmask >> t) & 1):
                    ok = False
                    break
            if ok:
                found = True
                break
        if not found:
            return False
    return True


def necessary_divisibility(pair: PairSpec) -> bool:
    """Necessary for a perfect code when H is normal in A: |H * A^x| divides
    |A * A^x| for every x."""
    G, H, A = pair.G, pair.H, pair.A
    if not is_normal(H, A):
        raise PreconditionViolated("H is not normal in A")
    for x in range(G.order):
        ax = [G.conjugate(a, x) for a in A.members]
        hax = set_product(G, H.members, ax)
        aax = set_product(G, A.members, ax)
        if len(aax) % len(hax) != 0:
            return False
    return True


# -- arc-transitive (single double coset) case --------------------------------


def arc_transitive_perfect_code(pair: PairSpec, x: int) -> bool:
    """Perfect-code conditions when the connection set is the single
    self-inverse double coset HxH: G = A u AxA, H meet H^x = H meet A^x, and
    every a in A has some h in H with ha in A meet A^x."""
    G, H, A = pair.G, pair.H, pair.A
    if (H.mask >> x) & 1:
        raise PreconditionViolated("x must lie outside H")
    d = double_coset(H, x)
    if d != frozenset(G.inv[m] for m in d):
        raise PreconditionViolated("HxH is not inverse closed")
    axa = set_product(G, A.members, set_product(G, (x,), A.members))
    cover = A.mask
    for m in axa:
        cover |= 1 << m
    if cover.bit_count() != G.order:
        return False
    hx_mask = 0
    ax_mask = 0
    for h in H.members:
        hx_mask |= 1 << G.conjugate(h, x)
    for a in A.members:
        ax_mask |= 1 << G.conjugate(a, x)
    if H.mask & hx_mask != H.mask & ax_mask:
        return False
    mult = G.mult
    for a in A.members:
        if not any((ax_mask >> mult[h][a]) & 1 for h in H.members):
            return False
    return True
