"""Diagram rewriting: kink, poke and slide moves on Gauss codes.

Three move families act on an open Gauss diagram:

* kink (R1): a chord whose endpoints are adjacent appears or vanishes;
* poke (R2): two opposite-sign chords whose over endpoints form one
  adjacent block and whose under endpoints form another appear or
  vanish together;
* slide (R3): three chords meeting pairwise in three adjacent blocks
  swap endpoints inside each block.

Every move is described by a MoveEvent, a small JSON-friendly record.
Events are interpreted against the canonicalized diagram; since
canonical relabelling never changes endpoint positions, a position
recorded in an event stays meaningful after the rewrite.

Slide moves are only legal for the 16 block-order/sign patterns listed
in data/r3_patterns.txt, the configurations a triangle of strands can
actually realize.  Poke legality lives in data/r2_patterns.txt.  Both
tables are loaded once and validated on load.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from longvk.gauss import (
    OVER,
    UNDER,
    GaussCodeError,
    OpenGaussDiagram,
    canonicalize,
    serialize,
)


class IllegalMove(GaussCodeError):
    """Event cannot be applied to this diagram."""


_ORDERS = ("OU", "UO")
_PAIRINGS = ("parallel", "crossed")
_KINDS = ("r1_insert", "r1_remove", "r2_insert", "r2_remove", "r3")


# =============================================================================
# Move events
# =============================================================================


@dataclass(frozen=True)
class MoveEvent:
    """One rewrite step.  Unused fields stay None.

    kind        one of r1_insert, r1_remove, r2_insert, r2_remove, r3
    gap, gap2   insertion gaps, counted in endpoints to the left (0..2n);
                for a poke gap <= gap2 and the first block lands at gap
    sign        sign of the inserted chord (for a poke: of the chord
                listed first in the first block; its partner gets -sign)
    order       kink endpoint order, "OU" or "UO"
    roles1      role of both endpoints in the poke's first block, O or U
    pairing     "parallel" or "crossed" block orders for a poke
    label       chord to remove (canonical label)
    label2      second chord of a poke removal, label < label2
    site        slide site: starting positions of the three blocks
    """

    kind: str
    gap: int | None = None
    gap2: int | None = None
    sign: int | None = None
    order: str | None = None
    roles1: str | None = None
    pairing: str | None = None
    label: int | None = None
    label2: int | None = None
    site: tuple[int, int, int] | None = None

    @classmethod
    def r1_insert(cls, gap: int, sign: int, order: str) -> MoveEvent:
        return cls(kind="r1_insert", gap=gap, sign=sign, order=order)

    @classmethod
    def r1_remove(cls, label: int) -> MoveEvent:
        return cls(kind="r1_remove", label=label)

    @classmethod
    def r2_insert(
        cls, gap: int, gap2: int, roles1: str, pairing: str, sign: int
    ) -> MoveEvent:
        return cls(
            kind="r2_insert",
            gap=gap,
            gap2=gap2,
            roles1=roles1,
            pairing=pairing,
            sign=sign,
        )

    @classmethod
    def r2_remove(cls, label: int, label2: int) -> MoveEvent:
        a, b = sorted((label, label2))
        return cls(kind="r2_remove", label=a, label2=b)

    @classmethod
    def r3(cls, site: tuple[int, int, int]) -> MoveEvent:
        return cls(kind="r3", site=tuple(site))

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        for field in ("gap", "gap2", "sign", "order", "roles1", "pairing", "label", "label2"):
            value = getattr(self, field)
            if value is not None:
                out[field] = value
        if self.site is not None:
            out["site"] = list(self.site)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> MoveEvent:
        kind = data.get("kind")
        if kind not in _KINDS:
            raise ValueError(f"unknown move kind: {kind!r}")
        kwargs = {k: data[k] for k in data if k not in ("kind", "site")}
        site = data.get("site")
        return cls(kind=kind, site=tuple(site) if site is not None else None, **kwargs)


# =============================================================================
# Legality tables
# =============================================================================

R3Key = tuple[str, str, str, int, int, int]

_SIGN_OF = {"+": 1, "-": -1}
_r3_table: frozenset[R3Key] | None = None
_r2_table: frozenset[tuple[str, int, int]] | None = None


def _read_asset(name: str) -> list[list[str]]:
    text = resources.files("longvk").joinpath(f"data/{name}").read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    return rows


def _flip_orders(key: R3Key) -> R3Key:
    ot, om, ob, s1, s2, s3 = key
    return (
        "TB" if ot == "TM" else "TM",
        "MB" if om == "TM" else "TM",
        "MB" if ob == "TB" else "TB",
        s1,
        s2,
        s3,
    )


def load_r3_patterns() -> frozenset[R3Key]:
    """The 16 legal slide patterns, checked for shape and self-inverse closure."""
    global _r3_table
    if _r3_table is not None:
        return _r3_table
    keys = []
    for row in _read_asset("r3_patterns.txt"):
        if len(row) != 6:
            raise ValueError(f"r3_patterns: bad row {row}")
        ot, om, ob = row[:3]
        if ot not in ("TM", "TB") or om not in ("TM", "MB") or ob not in ("TB", "MB"):
            raise ValueError(f"r3_patterns: bad order columns in {row}")
        signs = tuple(_SIGN_OF[s] for s in row[3:])
        keys.append((ot, om, ob) + signs)
    table = frozenset(keys)
    if len(keys) != 16 or len(table) != 16:
        raise ValueError("r3_patterns: expected 16 distinct rows")
    for key in table:
        if _flip_orders(key) not in table:
            raise ValueError(f"r3_patterns: {key} has no inverse-side row")
    _r3_table = table
    return table


def load_r2_patterns() -> frozenset[tuple[str, int, int]]:
    """Legal poke (pairing, sign1, sign2) combinations."""
    global _r2_table
    if _r2_table is not None:
        return _r2_table
    combos = []
    for row in _read_asset("r2_patterns.txt"):
        if len(row) != 3 or row[0] not in _PAIRINGS:
            raise ValueError(f"r2_patterns: bad row {row}")
        combos.append((row[0], _SIGN_OF[row[1]], _SIGN_OF[row[2]]))
    table = frozenset(combos)
    if len(combos) != 4 or len(table) != 4:
        raise ValueError("r2_patterns: expected 4 distinct rows")
    for pairing, s1, s2 in table:
        if s1 + s2 != 0:
            raise ValueError("r2_patterns: poke signs must be opposite")
    _r2_table = table
    return table


# =============================================================================
# Kink moves
# =============================================================================


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise IllegalMove(f"sign must be +1 or -1, got {sign!r}")


def _apply_r1_insert(d: OpenGaussDiagram, m: MoveEvent) -> OpenGaussDiagram:
    if m.gap is None or not 0 <= m.gap <= 2 * d.n:
        raise IllegalMove(f"kink gap {m.gap!r} out of range 0..{2 * d.n}")
    _check_sign(m.sign)
    if m.order not in _ORDERS:
        raise IllegalMove(f"kink order must be OU or UO, got {m.order!r}")
    label = d.n + 1
    roles = (OVER, UNDER) if m.order == "OU" else (UNDER, OVER)
    block = ((label, roles[0]), (label, roles[1]))
    endpoints = d.endpoints[: m.gap] + block + d.endpoints[m.gap :]
    return canonicalize(
        OpenGaussDiagram(endpoints=endpoints, signs=d.signs + ((label, m.sign),))
    )


def _apply_r1_remove(d: OpenGaussDiagram, m: MoveEvent) -> OpenGaussDiagram:
    if m.label not in d.labels():
        raise IllegalMove(f"no chord labelled {m.label!r}")
    p, q = d.positions(m.label)
    if abs(p - q) != 1:
        raise IllegalMove(f"chord {m.label} endpoints are not adjacent")
    endpoints = tuple(e for e in d.endpoints if e[0] != m.label)
    signs = tuple(s for s in d.signs if s[0] != m.label)
    return canonicalize(OpenGaussDiagram(endpoints=endpoints, signs=signs))


def removable_kinks(d: OpenGaussDiagram) -> tuple[int, ...]:
    """Labels of chords whose two endpoints are adjacent."""
    out = []
    for label in sorted(d.labels()):
        p, q = d.positions(label)
        if abs(p - q) == 1:
            out.append(label)
    return tuple(out)


# =============================================================================
# Poke moves
# =============================================================================


def _apply_r2_insert(d: OpenGaussDiagram, m: MoveEvent) -> OpenGaussDiagram:
    if m.gap is None or m.gap2 is None or not 0 <= m.gap <= m.gap2 <= 2 * d.n:
        raise IllegalMove(
            f"poke gaps ({m.gap!r}, {m.gap2!r}) must satisfy 0 <= gap <= gap2 <= {2 * d.n}"
        )
    if m.roles1 not in (OVER, UNDER):
        raise IllegalMove(f"poke first-block role must be O or U, got {m.roles1!r}")
    _check_sign(m.sign)
    if (m.pairing, m.sign, -m.sign) not in load_r2_patterns():
        raise IllegalMove(f"poke pairing {m.pairing!r} with sign {m.sign} is not legal")
    a, b = d.n + 1, d.n + 2
    role1 = m.roles1
    role2 = UNDER if role1 == OVER else OVER
    block1 = ((a, role1), (b, role1))
    if m.pairing == "parallel":
        block2 = ((a, role2), (b, role2))
    else:
        block2 = ((b, role2), (a, role2))
    endpoints = (
        d.endpoints[: m.gap]
        + block1
        + d.endpoints[m.gap : m.gap2]
        + block2
        + d.endpoints[m.gap2 :]
    )
    signs = d.signs + ((a, m.sign), (b, -m.sign))
    return canonicalize(OpenGaussDiagram(endpoints=endpoints, signs=signs))


def _r2_block_starts(d: OpenGaussDiagram, a: int, b: int) -> tuple[int, int] | None:
    """Start positions of the over and under blocks of chords a, b, or None."""
    a_over, a_under = d.positions(a)
    b_over, b_under = d.positions(b)
    if abs(a_over - b_over) != 1 or abs(a_under - b_under) != 1:
        return None
    return min(a_over, b_over), min(a_under, b_under)


def _apply_r2_remove(d: OpenGaussDiagram, m: MoveEvent) -> OpenGaussDiagram:
    a, b = m.label, m.label2
    labels = d.labels()
    if a not in labels or b not in labels or a == b:
        raise IllegalMove(f"poke removal needs two distinct chords, got {a!r}, {b!r}")
    if d.sign(a) + d.sign(b) != 0:
        raise IllegalMove(f"chords {a} and {b} do not have opposite signs")
    if _r2_block_starts(d, a, b) is None:
        raise IllegalMove(f"chords {a} and {b} do not form two adjacent blocks")
    endpoints = tuple(e for e in d.endpoints if e[0] not in (a, b))
    signs = tuple(s for s in d.signs if s[0] not in (a, b))
    return canonicalize(OpenGaussDiagram(endpoints=endpoints, signs=signs))


def removable_pokes(d: OpenGaussDiagram) -> tuple[tuple[int, int], ...]:
    """Label pairs forming removable poke patterns, each pair sorted."""
    out = []
    labels = sorted(d.labels())
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            if d.sign(a) + d.sign(b) == 0 and _r2_block_starts(d, a, b) is not None:
                out.append((a, b))
    return tuple(out)


# =============================================================================
# Slide moves
# =============================================================================


def classify_slide_site(
    d: OpenGaussDiagram, site: tuple[int, int, int]
) -> R3Key | None:
    """Read the block-order/sign pattern at a candidate slide site.

    Returns None when the six endpoints do not form three chords in the
    required over/under block shapes; a returned key still needs to be
    looked up in the legality table.
    """
    if len(site) != 3:
        return None
    p1, p2, p3 = site
    if not (1 <= p1 and p1 + 1 < p2 and p2 + 1 < p3 and p3 + 1 <= 2 * d.n):
        return None
    blocks = [(p, p + 1) for p in (p1, p2, p3)]
    block_eps = [(d.endpoint(lo), d.endpoint(hi)) for lo, hi in blocks]
    counts: dict[int, int] = {}
    for first, second in block_eps:
        counts[first[0]] = counts.get(first[0], 0) + 1
        counts[second[0]] = counts.get(second[0], 0) + 1
    if len(counts) != 3 or set(counts.values()) != {2}:
        return None
    kind_of_block: dict[str, int] = {}
    for index, (first, second) in enumerate(block_eps):
        roles = (first[1], second[1])
        if roles == (OVER, OVER):
            kind = "T"
        elif roles == (UNDER, UNDER):
            kind = "B"
        else:
            kind = "M"
        if kind in kind_of_block:
            return None
        kind_of_block[kind] = index
    if set(kind_of_block) != {"T", "M", "B"}:
        return None
    membership: dict[int, set[str]] = {label: set() for label in counts}
    for kind, index in kind_of_block.items():
        first, second = block_eps[index]
        membership[first[0]].add(kind)
        membership[second[0]].add(kind)
    chord_of: dict[frozenset[str], int] = {}
    for label, kinds in membership.items():
        if len(kinds) != 2:
            return None
        chord_of[frozenset(kinds)] = label
    c_tm = chord_of.get(frozenset(("T", "M")))
    c_tb = chord_of.get(frozenset(("T", "B")))
    c_mb = chord_of.get(frozenset(("M", "B")))
    if c_tm is None or c_tb is None or c_mb is None:
        return None
    first_t = block_eps[kind_of_block["T"]][0][0]
    first_m = block_eps[kind_of_block["M"]][0][0]
    first_b = block_eps[kind_of_block["B"]][0][0]
    return (
        "TM" if first_t == c_tm else "TB",
        "TM" if first_m == c_tm else "MB",
        "TB" if first_b == c_tb else "MB",
        d.sign(c_tm),
        d.sign(c_tb),
        d.sign(c_mb),
    )


def _apply_r3(d: OpenGaussDiagram, m: MoveEvent) -> OpenGaussDiagram:
    if m.site is None:
        raise IllegalMove("slide event needs a site")
    key = classify_slide_site(d, m.site)
    if key is None:
        raise IllegalMove(f"positions {m.site} do not form a slide site")
    if key not in load_r3_patterns():
        raise IllegalMove(f"slide pattern {key} is not realizable")
    endpoints = list(d.endpoints)
    for p in m.site:
        endpoints[p - 1], endpoints[p] = endpoints[p], endpoints[p - 1]
    return canonicalize(OpenGaussDiagram(endpoints=tuple(endpoints), signs=d.signs))


def slide_sites(d: OpenGaussDiagram) -> tuple[tuple[int, int, int], ...]:
    """All legal slide sites, ascending."""
    table = load_r3_patterns()
    starts = range(1, 2 * d.n)
    out = []
    for p1 in starts:
        for p2 in range(p1 + 2, 2 * d.n):
            for p3 in range(p2 + 2, 2 * d.n):
                key = classify_slide_site(d, (p1, p2, p3))
                if key is not None and key in table:
                    out.append((p1, p2, p3))
    return tuple(out)


# =============================================================================
# Application, enumeration, inversion
# =============================================================================

_APPLY = {
    "r1_insert": _apply_r1_insert,
    "r1_remove": _apply_r1_remove,
    "r2_insert": _apply_r2_insert,
    "r2_remove": _apply_r2_remove,
    "r3": _apply_r3,
}


def apply_move(d: OpenGaussDiagram, m: MoveEvent) -> OpenGaussDiagram:
    """Apply one event to the canonicalized diagram; result is canonical."""
    if m.kind not in _APPLY:
        raise IllegalMove(f"unknown move kind: {m.kind!r}")
    return _APPLY[m.kind](canonicalize(d), m)


def enumerate_moves(
    d: OpenGaussDiagram, cap: int | None = None
) -> tuple[tuple[MoveEvent, OpenGaussDiagram], ...]:
    """Every legal single move from d, with its result.

    Inserts whose result would exceed cap crossings are suppressed.
    Results are deduplicated (first event producing a diagram wins) and
    the listing is sorted by result code, so the order is reproducible.
    """
    c = canonicalize(d)
    n = c.n
    events: list[MoveEvent] = []
    for label in removable_kinks(c):
        events.append(MoveEvent.r1_remove(label))
    for a, b in removable_pokes(c):
        events.append(MoveEvent.r2_remove(a, b))
    for site in slide_sites(c):
        events.append(MoveEvent.r3(site))
    if cap is None or n + 1 <= cap:
        for gap in range(2 * n + 1):
            for order in _ORDERS:
                for sign in (1, -1):
                    events.append(MoveEvent.r1_insert(gap, sign, order))
    if cap is None or n + 2 <= cap:
        for gap in range(2 * n + 1):
            for gap2 in range(gap, 2 * n + 1):
                for roles1 in (OVER, UNDER):
                    for pairing in _PAIRINGS:
                        for sign in (1, -1):
                            events.append(
                                MoveEvent.r2_insert(gap, gap2, roles1, pairing, sign)
                            )
    seen: dict[str, tuple[MoveEvent, OpenGaussDiagram]] = {}
    for event in events:
        result = _APPLY[event.kind](c, event)
        code = serialize(result)
        if code not in seen:
            seen[code] = (event, result)
    return tuple(seen[code] for code in sorted(seen))


def inverse_event(d_before: OpenGaussDiagram, m: MoveEvent) -> MoveEvent:
    """Event that undoes m, interpreted on apply_move(d_before, m)."""
    c = canonicalize(d_before)
    if m.kind == "r3":
        return m
    if m.kind == "r1_insert":
        result = _APPLY["r1_insert"](c, m)
        return MoveEvent.r1_remove(result.endpoint(m.gap + 1)[0])
    if m.kind == "r1_remove":
        p, q = c.positions(m.label)
        lo = min(p, q)
        order = "OU" if c.endpoint(lo)[1] == OVER else "UO"
        return MoveEvent.r1_insert(lo - 1, c.sign(m.label), order)
    if m.kind == "r2_insert":
        result = _APPLY["r2_insert"](c, m)
        a = result.endpoint(m.gap + 1)[0]
        b = result.endpoint(m.gap + 2)[0]
        return MoveEvent.r2_remove(a, b)
    if m.kind == "r2_remove":
        starts = _r2_block_starts(c, m.label, m.label2)
        if starts is None:
            raise IllegalMove(
                f"chords {m.label} and {m.label2} do not form two adjacent blocks"
            )
        over_start, under_start = starts
        i, j = sorted((over_start, under_start))
        first1 = c.endpoint(i)[0]
        first2 = c.endpoint(j)[0]
        return MoveEvent.r2_insert(
            gap=i - 1,
            gap2=j - 3,
            roles1=c.endpoint(i)[1],
            pairing="parallel" if first1 == first2 else "crossed",
            sign=c.sign(first1),
        )
    raise IllegalMove(f"unknown move kind: {m.kind!r}")
