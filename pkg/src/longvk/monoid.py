"""Concatenation monoid of long virtual knot diagrams.

Placing one long diagram entirely to the left of another concatenates
their Gauss codes; on diagrams this is associative with the empty
diagram as identity (the classical connected sum, made well-behaved by
the long setting).  A *cut point* is a gap on the line spanned by no
chord; cutting there splits the diagram back into two factors.  Note
that decomposability here is a property of one diagram, not of its
equivalence class: statements about the underlying knot require a
search over the move orbit and stay budget-bounded.
"""

from __future__ import annotations

from longvk.gauss import GaussCodeError, OpenGaussDiagram, canonicalize


class NotACutPoint(GaussCodeError):
    """Requested gap is spanned by a chord (or out of range)."""


def concat(d1: OpenGaussDiagram, d2: OpenGaussDiagram) -> OpenGaussDiagram:
    """Concatenate: ``d1`` first, then ``d2`` with labels shifted by d1.n."""
    a = canonicalize(d1)
    b = canonicalize(d2)
    shift = a.n
    endpoints = a.endpoints + tuple((label + shift, role) for label, role in b.endpoints)
    signs = a.signs + tuple((label + shift, sign) for label, sign in b.signs)
    return OpenGaussDiagram(endpoints=endpoints, signs=signs)


def cut_points(d: OpenGaussDiagram) -> tuple[int, ...]:
    """Gaps spanned by no chord, ascending.  Gap g sits after position g.

    Gaps 0 and 2n always qualify.
    """
    total = len(d.endpoints)
    first: dict[int, int] = {}
    spans = []
    for pos, (label, _) in enumerate(d.endpoints, start=1):
        if label in first:
            spans.append((first[label], pos))
        else:
            first[label] = pos
    cuts = []
    for gap in range(total + 1):
        if all(not (lo <= gap < hi) for lo, hi in spans):
            cuts.append(gap)
    return tuple(cuts)


def split_at(d: OpenGaussDiagram, gap: int) -> tuple[OpenGaussDiagram, OpenGaussDiagram]:
    """Split at a cut point; inverse of :func:`concat` up to relabelling."""
    if gap not in cut_points(d):
        raise NotACutPoint(f"gap {gap} is spanned by a chord or out of range")
    sign_of = dict(d.signs)

    def piece(endpoints: tuple[tuple[int, str], ...]) -> OpenGaussDiagram:
        labels = sorted({label for label, _ in endpoints})
        return canonicalize(
            OpenGaussDiagram(
                endpoints=endpoints,
                signs=tuple((label, sign_of[label]) for label in labels),
            )
        )

    return piece(d.endpoints[:gap]), piece(d.endpoints[gap:])


def is_diagram_decomposable(d: OpenGaussDiagram) -> bool:
    """True iff some cut point has at least one chord on each side."""
    total = len(d.endpoints)
    return any(0 < gap < total for gap in cut_points(d))
