"""Budget-bounded equivalence search over the move graph.

Two diagrams present the same long virtual knot exactly when some chain
of kink, poke and slide moves joins them.  The chain can be long and
can pass through bigger diagrams, so every search here carries an
explicit Budget and the answer is a three-way Verdict:

* equivalent, with a replayable move path;
* distinct, with an invariant witness (no search needed);
* inconclusive, when the budget ran out first.

Inconclusive is an honest answer, never a claim.  Deterministic
ordering (canonical codes, sorted frontiers, sorted move listings)
makes reruns reproducible, and Verdict.to_json_dict(stable=True) drops
the wall-clock field so equal runs serialize byte-identically.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from longvk.gauss import OpenGaussDiagram, canonicalize, parse_gauss_code, serialize
from longvk.invariants import (
    FiniteBiquandle,
    coloring_matrix,
    commutator_witness,
    default_catalog,
    odd_writhe,
)
from longvk.monoid import concat, cut_points, split_at
from longvk.moves import MoveEvent, apply_move, enumerate_moves, inverse_event
from longvk.surface import supporting_genus

EQUIVALENT = "equivalent"
DISTINCT = "distinct"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Budget:
    """Caps for one search: diagram size, visited states, path length."""

    max_crossings: int
    max_states: int
    max_depth: int

    def to_json_dict(self) -> dict:
        return {
            "max_crossings": self.max_crossings,
            "max_states": self.max_states,
            "max_depth": self.max_depth,
        }


def default_budget(n: int) -> Budget:
    """Allow two extra crossings of slack over the larger input."""
    return Budget(max_crossings=n + 2, max_states=10**6, max_depth=16)


@dataclass(frozen=True)
class Verdict:
    verdict: str
    budget: Budget
    states_visited: int
    wall_ms: float
    path: tuple[MoveEvent, ...] | None = None
    witness: dict | None = None

    def to_json_dict(self, stable: bool = False) -> dict:
        out: dict = {
            "verdict": self.verdict,
            "budget": self.budget.to_json_dict(),
            "states_visited": self.states_visited,
        }
        if self.path is not None:
            out["path"] = [m.to_json_dict() for m in self.path]
        if self.witness is not None:
            out["witness"] = self.witness
        if not stable:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out


def _invariant_witness(
    d1: OpenGaussDiagram, d2: OpenGaussDiagram, catalog: list[FiniteBiquandle]
) -> dict | None:
    j1, j2 = odd_writhe(d1), odd_writhe(d2)
    if j1 != j2:
        return {"invariant": "odd_writhe", "left": j1, "right": j2}
    for x in catalog:
        m1 = coloring_matrix(d1, x)
        m2 = coloring_matrix(d2, x)
        if m1 != m2:
            return {
                "invariant": "coloring_matrix",
                "structure": x.name,
                "left": [list(row) for row in m1],
                "right": [list(row) for row in m2],
            }
    return None


class _Side:
    """One frontier of the bidirectional search."""

    def __init__(self, root: str) -> None:
        self.parent: dict[str, tuple[str, MoveEvent] | None] = {root: None}
        self.frontier: list[str] = [root]
        self.depth = 0

    def chain_to_root(self, code: str) -> list[tuple[str, MoveEvent]]:
        """(parent code, event) steps from code back to the root."""
        steps = []
        while True:
            link = self.parent[code]
            if link is None:
                return steps
            steps.append(link)
            code = link[0]


def _build_path(
    side_a: _Side, side_b: _Side, meet: str
) -> tuple[MoveEvent, ...]:
    forward = [event for _, event in reversed(side_a.chain_to_root(meet))]
    backward = [
        inverse_event(parse_gauss_code(parent), event)
        for parent, event in side_b.chain_to_root(meet)
    ]
    return tuple(forward + backward)


def equivalent_within(
    d1: OpenGaussDiagram,
    d2: OpenGaussDiagram,
    budget: Budget | None = None,
    catalog: list[FiniteBiquandle] | None = None,
) -> Verdict:
    """Decide d1 ~ d2 within the budget.

    Invariants are compared first; a mismatch settles the question
    without any search.  Otherwise a bidirectional breadth-first search
    runs over canonical codes, always expanding the smaller frontier,
    and a meeting point yields a verified move path from d1 to d2.
    """
    start = time.perf_counter()
    c1, c2 = canonicalize(d1), canonicalize(d2)
    if budget is None:
        budget = default_budget(max(c1.n, c2.n))
    if catalog is None:
        catalog = default_catalog()

    def done(verdict: str, states: int, **kw) -> Verdict:
        wall = (time.perf_counter() - start) * 1000.0
        return Verdict(verdict=verdict, budget=budget, states_visited=states,
                       wall_ms=wall, **kw)

    fp1, fp2 = serialize(c1), serialize(c2)
    if fp1 == fp2:
        return done(EQUIVALENT, 1, path=())
    witness = _invariant_witness(c1, c2, catalog)
    if witness is not None:
        return done(DISTINCT, 0, witness=witness)

    side_a, side_b = _Side(fp1), _Side(fp2)
    states = 2
    while side_a.frontier and side_b.frontier:
        if side_a.depth + side_b.depth >= budget.max_depth:
            break
        side, other = (
            (side_a, side_b)
            if len(side_a.frontier) <= len(side_b.frontier)
            else (side_b, side_a)
        )
        next_frontier: list[str] = []
        for code in sorted(side.frontier):
            d = parse_gauss_code(code)
            for event, child in enumerate_moves(d, cap=budget.max_crossings):
                child_code = serialize(child)
                if child_code in other.parent:
                    if child_code not in side.parent:
                        side.parent[child_code] = (code, event)
                    path = _build_path(side_a, side_b, child_code)
                    replay = c1
                    for step in path:
                        replay = apply_move(replay, step)
                    if serialize(replay) != fp2:
                        raise AssertionError("reconstructed path does not replay")
                    return done(EQUIVALENT, states, path=path)
                if child_code not in side.parent:
                    side.parent[child_code] = (code, event)
                    next_frontier.append(child_code)
                    states += 1
                    if states > budget.max_states:
                        return done(INCONCLUSIVE, states)
        side.frontier = next_frontier
        side.depth += 1
    return done(INCONCLUSIVE, states)


def min_genus_in_orbit(
    d: OpenGaussDiagram, budget: Budget | None = None
) -> tuple[int, OpenGaussDiagram, int]:
    """Smallest band-surface genus seen in the budgeted move orbit.

    Returns (genus, witness diagram, states visited).  An upper bound
    for the knot's genus, not the exact value: the orbit is truncated
    by the budget.
    """
    c = canonicalize(d)
    if budget is None:
        budget = default_budget(c.n)
    root = serialize(c)
    best = (supporting_genus(c), c.n, root)
    visited = {root}
    frontier = [root]
    depth = 0
    while frontier and depth < budget.max_depth:
        next_frontier = []
        for code in sorted(frontier):
            for _, child in enumerate_moves(parse_gauss_code(code), cap=budget.max_crossings):
                child_code = serialize(child)
                if child_code in visited:
                    continue
                visited.add(child_code)
                best = min(best, (supporting_genus(child), child.n, child_code))
                next_frontier.append(child_code)
                if len(visited) >= budget.max_states:
                    return best[0], parse_gauss_code(best[2]), len(visited)
        frontier = next_frontier
        depth += 1
    return best[0], parse_gauss_code(best[2]), len(visited)


def commute_check(
    a: OpenGaussDiagram,
    b: OpenGaussDiagram,
    budget: Budget | None = None,
    catalog: list[FiniteBiquandle] | None = None,
) -> Verdict:
    """Compare a then b against b then a under concatenation.

    Coloring matrices multiply along concatenation, so a pair of
    non-commuting matrices settles the question immediately; otherwise
    the two products go to the equivalence search.
    """
    start = time.perf_counter()
    if catalog is None:
        catalog = default_catalog()
    ab, ba = concat(a, b), concat(b, a)
    for x in catalog:
        hit = commutator_witness(a, b, x)
        if hit is not None:
            i, j, left, right = hit
            if budget is None:
                budget = default_budget(max(ab.n, ba.n))
            return Verdict(
                verdict=DISTINCT,
                budget=budget,
                states_visited=0,
                wall_ms=(time.perf_counter() - start) * 1000.0,
                witness={
                    "invariant": "coloring_matrix",
                    "structure": x.name,
                    "entry": [i, j],
                    "left": left,
                    "right": right,
                },
            )
    return equivalent_within(ab, ba, budget=budget, catalog=catalog)


def prime_scan(d: OpenGaussDiagram, budget: Budget | None = None) -> dict:
    """Look for decomposable diagrams in the budgeted orbit.

    Reports every visited diagram with an interior cut point, together
    with the two factors at each cut.  Finding none never proves
    primality; the report says only what the bounded search saw, and
    ``exhausted`` records whether the orbit was fully closed under the
    size cap before any other limit bit.
    """
    c = canonicalize(d)
    if budget is None:
        budget = default_budget(c.n)
    root = serialize(c)
    visited = {root}
    frontier = [root]
    depth = 0
    decomposable = []
    exhausted = True

    def record(code: str) -> None:
        diagram = parse_gauss_code(code)
        interior = [g for g in cut_points(diagram) if 0 < g < 2 * diagram.n]
        if interior:
            cuts = []
            for gap in interior:
                left, right = split_at(diagram, gap)
                cuts.append({"gap": gap, "left": serialize(left), "right": serialize(right)})
            decomposable.append({"code": code, "cuts": cuts})

    record(root)
    while frontier:
        if depth >= budget.max_depth:
            exhausted = False
            break
        next_frontier = []
        for code in sorted(frontier):
            for _, child in enumerate_moves(parse_gauss_code(code), cap=budget.max_crossings):
                child_code = serialize(child)
                if child_code in visited:
                    continue
                if len(visited) >= budget.max_states:
                    exhausted = False
                    next_frontier = []
                    frontier = []
                    break
                visited.add(child_code)
                record(child_code)
                next_frontier.append(child_code)
            else:
                continue
            break
        frontier = next_frontier
        depth += 1
    return {
        "code": root,
        "decomposable": decomposable,
        "states_visited": len(visited),
        "exhausted": exhausted,
        "budget": budget.to_json_dict(),
    }
