"""Group-spec parsing, certificate files, and the cross-validation survey."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Optional

from .config import DEFAULT_LIMITS, Limits
from .coset_graph import build, profile_subset, validate_connection_set
from .cosets import double_coset
from .errors import OrderExceedsCap, ParseError, RegsetError
from .group_core import (
    GroupTable,
    Subgroup,
    _members_of,
    all_subgroups,
    from_generators,
    from_table,
    generate_subgroup,
    is_normal,
    trivial_subgroup,
)
from .presets import preset
from .regular_sets import (
    PairSpec,
    RegSetCertificate,
    cayley_normal_criterion,
    check_normal_chain,
    decide_regular_set,
    necessary_conjugate_intersection,
    necessary_divisibility,
    perfect_code_normalizer_criterion,
    perfect_code_odd_order_criterion,
    perfect_code_pair,
    perfect_code_quotient_criterion,
    verify_witness,
)

# -- group specs -------------------------------------------------------------


def _cycles_to_perm(degree: int, cycles) -> tuple[int, ...]:
    if not isinstance(cycles, list):
        raise ParseError("a permutation must be a list of cycles")
    perm = list(range(degree))
    seen: set[int] = set()
    for cycle in cycles:
        if not isinstance(cycle, list) or not cycle:
            raise ParseError("each cycle must be a nonempty list of points")
        pts = [int(p) for p in cycle]
        for p in pts:
            if not 0 <= p < degree:
                raise ParseError(f"point {p} out of range 0..{degree - 1}")
            if p in seen:
                raise ParseError(f"point {p} repeated across cycles")
            seen.add(p)
        for i, p in enumerate(pts):
            perm[p] = pts[(i + 1) % len(pts)]
    return tuple(perm)


def group_from_spec_dict(spec: dict, limits: Optional[Limits] = None) -> GroupTable:
    if not isinstance(spec, dict):
        raise ParseError("group spec must be a JSON object")
    kind = spec.get("kind")
    label = spec.get("label")
    if kind == "preset":
        g = preset(spec.get("name"), spec.get("n"), spec.get("factors"), limits)
        if label:
            g.label = str(label)
        return g
    if kind == "permutation":
        degree = spec.get("degree")
        gens_raw = spec.get("generators")
        if not isinstance(degree, int) or not isinstance(gens_raw, list):
            raise ParseError("permutation spec needs integer 'degree' and list 'generators'")
        gens = [_cycles_to_perm(degree, g) for g in gens_raw]
        g = from_generators(degree, gens, label=label, limits=limits)
        g.spec = {"kind": "permutation", "degree": degree, "generators": gens_raw}
        return g
    if kind == "table":
        matrix = spec.get("matrix")
        if not isinstance(matrix, list):
            raise ParseError("table spec needs a 'matrix' list")
        g = from_table(matrix, label=label, limits=limits)
        g.spec = {"kind": "table", "matrix": [list(r) for r in g.mult]}
        return g
    raise ParseError(f"unknown group spec kind {kind!r}")


def parse_group_spec(text: str, limits: Optional[Limits] = None) -> GroupTable:
    """Parse a JSON group spec (kinds: preset, permutation, table)."""
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return group_from_spec_dict(spec, limits=limits)


def _shorthand_to_spec(text: str) -> dict:
    """Translate 'cyclic:4', 'sl23', 'product:cyclic:2,cyclic:8' into specs."""
    parts = text.split(":", 1)
    name = parts[0]
    if name == "product":
        if len(parts) < 2:
            raise ParseError("product shorthand needs factors")
        factors = [_shorthand_to_spec(f) for f in parts[1].split(",") if f]
        if len(factors) < 2:
            raise ParseError("product shorthand needs at least two factors")
        return {"kind": "preset", "name": "product", "factors": factors}
    spec: dict = {"kind": "preset", "name": name}
    if len(parts) == 2 and parts[1]:
        try:
            spec["n"] = int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad preset parameter {parts[1]!r}") from exc
    return spec


def group_from_arg(text: str, limits: Optional[Limits] = None) -> GroupTable:
    """Resolve a CLI group argument: 'preset:...' shorthand, inline JSON, or
    a path to a JSON spec file."""
    if text.startswith("preset:"):
        return group_from_spec_dict(_shorthand_to_spec(text[len("preset:"):]),
                                    limits=limits)
    if text.lstrip().startswith("{"):
        return parse_group_spec(text, limits=limits)
    path = Path(text)
    if not path.exists():
        raise ParseError(f"group argument {text!r} is neither a preset, JSON, nor a file")
    return parse_group_spec(path.read_text(encoding="utf-8"), limits=limits)


def subgroup_from_arg(G: GroupTable, text: str) -> Subgroup:
    """Parse a subgroup argument: 'trivial', 'all', explicit ids '0,2,5', or
    generators 'gen:3,5' (closed automatically)."""
    text = text.strip()
    if text == "trivial":
        return trivial_subgroup(G)
    if text == "all":
        return G.full_subgroup()
    try:
        if text.startswith("gen:"):
            ids = [int(x) for x in text[len("gen:"):].split(",") if x.strip()]
            return generate_subgroup(G, ids)
        ids = [int(x) for x in text.split(",") if x.strip()]
        return Subgroup(G, ids)
    except ValueError as exc:
        raise ParseError(f"bad subgroup argument {text!r}: {exc}") from exc


# -- certificate files --------------------------------------------------------


def certificate_to_json_text(cert: RegSetCertificate) -> str:
    return json.dumps(cert.to_json_dict(), indent=2) + "\n"


def write_certificate(cert: RegSetCertificate, path) -> None:
    Path(path).write_text(certificate_to_json_text(cert), encoding="utf-8")


_CERT_FIELDS = ("group", "H", "A", "r", "s", "double_coset_reps", "U", "X", "checks")


def verify_certificate_file(path, limits: Optional[Limits] = None) -> bool:
    """Re-run the witness checks and the graph oracle on a stored
    certificate.  Parse failures raise; a well-formed but wrong certificate
    returns False."""
    limits = limits if limits is not None else DEFAULT_LIMITS
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read certificate: {exc}") from exc
    if not isinstance(data, dict) or any(f not in data for f in _CERT_FIELDS):
        raise ParseError("certificate is missing required fields")
    group = data["group"]
    if not isinstance(group, dict) or "spec" not in group:
        raise ParseError("certificate group has no reconstructible spec")
    G = group_from_spec_dict(group["spec"], limits=limits)
    if G.order != group.get("order"):
        return False
    try:
        H = Subgroup(G, data["H"])
        A = Subgroup(G, data["A"])
        pair = PairSpec(G, H, A)
    except ValueError:
        return False
    r, s = data["r"], data["s"]
    if not isinstance(r, int) or not isinstance(s, int):
        raise ParseError("r and s must be integers")
    uset = frozenset(int(u) for u in data["U"])
    xset = frozenset(int(x) for x in data["X"])
    try:
        conn = validate_connection_set(H, uset)
    except (RegsetError, ValueError):
        return False
    rebuilt: set[int] = set()
    for rep in data["double_coset_reps"]:
        rebuilt |= double_coset(H, int(rep))
    if rebuilt != set(uset):
        return False
    if not verify_witness(pair, xset, r, s).ok:
        return False
    mult = G.mult
    xh = {mult[x][h] for x in xset for h in H.members}
    if xh != set(uset):
        return False
    graph = build(G, H, conn, limits=limits)
    cvert = frozenset(graph.space.coset_of[a] for a in A.members)
    prof = profile_subset(graph, cvert)
    if len(cvert) == graph.vertex_count:
        return prof is not None and prof[0] == r
    return prof == (r, s)


# -- survey -------------------------------------------------------------------


@dataclass
class SurveyReport:
    group: str
    order: int
    rows: list[dict]

    @property
    def anomalies(self) -> list[str]:
        out = []
        for row in self.rows:
            for a in row["anomalies"]:
                out.append(f"H={row['H']} A={row['A']}: {a}")
        return out

    def to_json_dict(self) -> dict:
        return {"group": self.group, "order": self.order, "rows": self.rows}

    def to_text(self) -> str:
        lines = [f"survey of {self.group} (order {self.order})"]
        header = f"{'H':>20} {'A':>20} {'H<|A':>5} {'A<|G':>5} {'#rs':>5}  anomalies"
        lines.append(header)
        for row in self.rows:
            lines.append(
                f"{str(row['H'])[:20]:>20} {str(row['A'])[:20]:>20} "
                f"{'y' if row['H_normal_in_A'] else 'n':>5} "
                f"{'y' if row['A_normal_in_G'] else 'n':>5} "
                f"{len(row['achievable']):>5}  {'; '.join(row['anomalies'])}"
            )
        lines.append(f"total anomalies: {len(self.anomalies)}")
        return "\n".join(lines) + "\n"


def _survey_row(G: GroupTable, H: Subgroup, A: Subgroup, strict: bool,
                limits: Limits) -> dict:
    pair = PairSpec(G, H, A)
    idx = pair.code_index
    h_norm = is_normal(H, A)
    a_norm = is_normal(A, G.full_subgroup())
    degenerate = A.order == G.order
    achievable: list[list[int]] = []
    anomalies: list[str] = []
    agreements: dict[str, str] = {}
    chain = h_norm and a_norm
    cayley = a_norm and H.order == 1
    chain_ok = True
    cayley_ok = True
    for r in range(idx):
        for s in range(idx + 1):
            present = decide_regular_set(pair, r, s, limits=limits) is not None
            if present:
                achievable.append([r, s])
            if chain:
                verdict = check_normal_chain(pair, r, s, strict=strict).verdict
                if verdict != present:
                    chain_ok = False
                    anomalies.append(
                        f"normal-chain criteria disagree with search at ({r},{s})"
                    )
            if cayley and r % gcd(2, A.order - 1) == 0:
                if cayley_normal_criterion(G, A, r, s) != present:
                    cayley_ok = False
                    anomalies.append(
                        f"cayley criterion disagrees with search at ({r},{s})"
                    )
    agreements["normal_chain"] = ("ok" if chain_ok else "fail") if chain else "n/a"
    agreements["cayley_normal"] = ("ok" if cayley_ok else "fail") if cayley else "n/a"

    pc, _ = perfect_code_pair(pair, limits=limits)
    present01 = [0, 1] in achievable
    if pc != present01:
        anomalies.append("perfect-code decision disagrees with search at (0,1)")
    agreements["perfect_code"] = "ok" if pc == present01 else "fail"

    if a_norm:
        if perfect_code_normalizer_criterion(pair) != pc:
            anomalies.append("normalizer criterion disagrees with perfect-code")
            agreements["normalizer_criterion"] = "fail"
        else:
            agreements["normalizer_criterion"] = "ok"
        if chain:
            if perfect_code_quotient_criterion(pair) != pc:
                anomalies.append("quotient criterion disagrees with perfect-code")
                agreements["quotient_criterion"] = "fail"
            else:
                agreements["quotient_criterion"] = "ok"
        else:
            agreements["quotient_criterion"] = "n/a"
        if A.order % 2 == 1 or (G.order // A.order) % 2 == 1:
            if perfect_code_odd_order_criterion(pair) != pc:
                anomalies.append("odd-order criterion disagrees with perfect-code")
                agreements["odd_order"] = "fail"
            else:
                agreements["odd_order"] = "ok"
        else:
            agreements["odd_order"] = "n/a"
    else:
        agreements["normalizer_criterion"] = "n/a"
        agreements["quotient_criterion"] = "n/a"
        agreements["odd_order"] = "n/a"

    if pc:
        necessary_ok = True
        if not necessary_conjugate_intersection(pair):
            necessary_ok = False
            anomalies.append("necessary conjugate-intersection condition violated")
        if h_norm and not necessary_divisibility(pair):
            necessary_ok = False
            anomalies.append("necessary divisibility condition violated")
        agreements["necessary"] = "ok" if necessary_ok else "fail"
    else:
        agreements["necessary"] = "n/a"

    return {
        "H": list(H.members),
        "A": list(A.members),
        "H_normal_in_A": h_norm,
        "A_normal_in_G": a_norm,
        "degenerate_s": degenerate,
        "achievable": achievable,
        "agreements": agreements,
        "anomalies": anomalies,
    }


_WORKER_STATE: dict = {}


def _worker_init(G: GroupTable, strict: bool, limits: Limits) -> None:
    _WORKER_STATE["G"] = G
    _WORKER_STATE["strict"] = strict
    _WORKER_STATE["limits"] = limits


def _worker_row(masks: tuple[int, int]) -> dict:
    G = _WORKER_STATE["G"]
    hmask, amask = masks
    H = Subgroup(G, _members_of(hmask))
    A = Subgroup(G, _members_of(amask))
    return _survey_row(G, H, A, _WORKER_STATE["strict"], _WORKER_STATE["limits"])


def survey(G: GroupTable, limits: Optional[Limits] = None, strict: bool = False,
           workers: int = 1) -> SurveyReport:
    """Cross-validate every criterion against the exhaustive search over all
    subgroup pairs H <= A of ``G``.  Rows are sorted by (H, A) members, so
    assembly order does not matter."""
    limits = limits if limits is not None else DEFAULT_LIMITS
    if G.order > limits.enumeration_cap:
        raise OrderExceedsCap(
            f"group order {G.order} exceeds enumeration cap {limits.enumeration_cap}"
        )
    subs = all_subgroups(G, limits=limits)
    pairs = [(H, A) for A in subs for H in subs if H.is_subset_of(A)]
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_worker_init, initargs=(G, strict, limits)
        ) as pool:
            rows = list(pool.map(_worker_row, [(H.mask, A.mask) for H, A in pairs]))
    else:
        rows = [_survey_row(G, H, A, strict, limits) for H, A in pairs]
    rows.sort(key=lambda row: (row["H"], row["A"]))
    return SurveyReport(G.label, G.order, rows)
