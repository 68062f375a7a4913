"""Independent reference implementations used only by the tests.

Everything here recomputes a quantity the library also computes, by a
different route: boundary circles via an explicit segment graph instead
of dart orbits, coloring matrices by exhaustive assignment instead of
guided backtracking, the slide-pattern table from explicit line
geometry instead of the shipped asset, odd writhe by a direct double
loop.  Agreement between the two routes is what the tests assert, so
nothing in this module may import the corresponding library internals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from longvk.gauss import OpenGaussDiagram, canonicalize
from longvk.invariants import FiniteBiquandle


def oracle_odd_writhe(d: OpenGaussDiagram) -> int:
    """Sum of signs over chords interleaved with an odd number of others."""
    c = canonicalize(d)
    spans = {label: tuple(sorted(c.positions(label))) for label in c.labels()}
    total = 0
    for a in c.labels():
        lo_a, hi_a = spans[a]
        odd_count = 0
        for b in c.labels():
            if a == b:
                continue
            lo_b, hi_b = spans[b]
            crosses = (lo_a < lo_b < hi_a < hi_b) or (lo_b < lo_a < hi_b < hi_a)
            if crosses:
                odd_count += 1
        if odd_count % 2 == 1:
            total += c.sign(a)
    return total


# ----------------------------------------------------------------------------
# Boundary circles via the segment graph
# ----------------------------------------------------------------------------
#
# Each band contributes two side segments; each vertex contributes one
# corner arc between rotation-adjacent attachments.  A band side joins
# the corner just counterclockwise of its tail attachment to the corner
# just clockwise of its head attachment (and the other side the other
# way around), so the segment graph is 2-regular and its cycles are the
# ribbon boundary circles.


def oracle_boundary_total(rg) -> int:
    adjacency: dict[tuple, list[tuple]] = {}

    def join(u: tuple, v: tuple) -> None:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)

    slot_of = {}
    for vertex, rot in enumerate(rg.rotations):
        for index, dart in enumerate(rot):
            slot_of[dart] = (vertex, index)
        for index in range(len(rot)):
            adjacency.setdefault(("corner", vertex, index), [])

    def corner_after(dart: int) -> tuple:
        vertex, index = slot_of[dart]
        return ("corner", vertex, index)

    def corner_before(dart: int) -> tuple:
        vertex, index = slot_of[dart]
        return ("corner", vertex, (index - 1) % len(rg.rotations[vertex]))

    for band in range(rg.bands):
        tail, head = 2 * band, 2 * band + 1
        side1 = ("side", band, 1)
        side2 = ("side", band, 2)
        join(side1, corner_after(tail))
        join(side1, corner_before(head))
        join(side2, corner_before(tail))
        join(side2, corner_after(head))

    for node, neighbours in adjacency.items():
        assert len(neighbours) == 2, (node, neighbours)
    seen: set[tuple] = set()
    cycles = 0
    for node in adjacency:
        if node in seen:
            continue
        cycles += 1
        prev, cur = None, node
        while cur not in seen:
            seen.add(cur)
            a, b = adjacency[cur]
            prev, cur = cur, (b if a == prev else a)
    return cycles + 1  # the annulus V keeps its untouched outer circle


# ----------------------------------------------------------------------------
# Exhaustive coloring matrices
# ----------------------------------------------------------------------------


def oracle_coloring_matrix(
    d: OpenGaussDiagram, x: FiniteBiquandle
) -> tuple[tuple[int, ...], ...]:
    """Try every semi-arc assignment; feasible only for tiny diagrams."""
    c = canonicalize(d)
    m = x.m
    segs = 2 * c.n + 1
    counts = [[0] * m for _ in range(m)]
    chords = []
    for label in c.labels():
        over_pos, under_pos = c.positions(label)
        chords.append((over_pos, under_pos, c.sign(label)))
    for colors in itertools.product(range(m), repeat=segs):
        ok = True
        for over_pos, under_pos, sign in chords:
            o_in, o_out = colors[over_pos - 1], colors[over_pos]
            u_in, u_out = colors[under_pos - 1], colors[under_pos]
            if sign == 1:
                good = x.s_map(u_in, o_in) == (u_out, o_out)
            else:
                good = x.s_map(u_out, o_out) == (u_in, o_in)
            if not good:
                ok = False
                break
        if ok:
            counts[colors[0]][colors[-1]] += 1
    return tuple(tuple(row) for row in counts)


# ----------------------------------------------------------------------------
# Slide-pattern table from line geometry
# ----------------------------------------------------------------------------
#
# Three straight strands bounding a triangle: T crosses over both
# others, M over B only.  Reversing any strand and mirroring the whole
# picture generate every realizable configuration.  Crossing signs come
# from det(over direction, under direction); the first crossing a
# strand meets along its own direction gives the order entries.


def _line_sign(det: Fraction) -> int:
    assert det != 0
    return 1 if det > 0 else -1


def oracle_slide_patterns() -> frozenset[tuple[str, str, str, int, int, int]]:
    patterns = set()
    half = Fraction(1, 2)
    for chirality in (1, 2):
        if chirality == 1:
            # B along y=0, M along y=x, T along y=1-x
            pos = {"TM": half, "TB": Fraction(1), "MB": Fraction(0)}
            direction = {"T": (1, -1), "M": (1, 1), "B": (1, 0)}
        else:
            # mirror image: M along y=1-x, T along y=x
            pos = {"TM": half, "TB": Fraction(0), "MB": Fraction(1)}
            direction = {"T": (1, 1), "M": (1, -1), "B": (1, 0)}
        meets = {"T": ("TM", "TB"), "M": ("TM", "MB"), "B": ("TB", "MB")}
        over_under = {"TM": ("T", "M"), "TB": ("T", "B"), "MB": ("M", "B")}
        for eps in itertools.product((1, -1), repeat=3):
            eps_of = dict(zip("TMB", eps))
            order = {}
            for strand, (c1, c2) in meets.items():
                first = c1 if (pos[c1] - pos[c2]) * eps_of[strand] < 0 else c2
                order[strand] = first
            signs = {}
            for crossing, (over, under) in over_under.items():
                vo = tuple(eps_of[over] * t for t in direction[over])
                vu = tuple(eps_of[under] * t for t in direction[under])
                signs[crossing] = _line_sign(Fraction(vo[0] * vu[1] - vo[1] * vu[0]))
            patterns.add(
                (order["T"], order["M"], order["B"],
                 signs["TM"], signs["TB"], signs["MB"])
            )
    return frozenset(patterns)


# ----------------------------------------------------------------------------
# Cut points by direct span inspection
# ----------------------------------------------------------------------------


def oracle_cut_points(d: OpenGaussDiagram) -> tuple[int, ...]:
    c = canonicalize(d)
    out = []
    for gap in range(2 * c.n + 1):
        spanned = False
        for label in c.labels():
            lo, hi = sorted(c.positions(label))
            if lo <= gap < hi:
                spanned = True
                break
        if not spanned:
            out.append(gap)
    return tuple(out)
