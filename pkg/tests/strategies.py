"""Seeded diagram generators shared across the test modules."""

from __future__ import annotations

import random

from longvk.gauss import OpenGaussDiagram, canonicalize
from longvk.moves import MoveEvent, apply_move, enumerate_moves


def random_diagram(rng: random.Random, n: int) -> OpenGaussDiagram:
    """Uniform random diagram with exactly n chords."""
    positions = list(range(2 * n))
    rng.shuffle(positions)
    endpoints: list[tuple[int, str] | None] = [None] * (2 * n)
    signs = []
    for label in range(1, n + 1):
        a, b = positions[2 * (label - 1)], positions[2 * label - 1]
        over, under = (a, b) if rng.random() < 0.5 else (b, a)
        endpoints[over] = (label, "O")
        endpoints[under] = (label, "U")
        signs.append((label, rng.choice((1, -1))))
    return canonicalize(
        OpenGaussDiagram(endpoints=tuple(endpoints), signs=tuple(signs))
    )


def walked_diagram(
    rng: random.Random,
    start: OpenGaussDiagram,
    steps: int,
    cap: int,
) -> tuple[OpenGaussDiagram, list[MoveEvent]]:
    """Random move walk from start; returns the end diagram and the path.

    Walk endpoints are known-equivalent to the start by construction,
    and walking tends to leave removable patterns behind, which makes
    these diagrams good move-enumeration inputs.
    """
    current = canonicalize(start)
    path = []
    for _ in range(steps):
        options = enumerate_moves(current, cap=cap)
        if not options:
            break
        event, result = options[rng.randrange(len(options))]
        path.append(event)
        current = result
    return current, path


def mixed_diagram(rng: random.Random, max_n: int) -> OpenGaussDiagram:
    """Half uniform random, half random-walked from a small seed."""
    if rng.random() < 0.5:
        return random_diagram(rng, rng.randint(1, max_n))
    seed = random_diagram(rng, rng.randint(0, max(0, max_n - 2)))
    out, _ = walked_diagram(rng, seed, steps=rng.randint(1, 3), cap=max_n)
    return out


_PLANAR_SEEDS = (
    "O1+ U2+ O3+ U1+ O2+ U3+",
    "O1+ U2+ O3- U4- O2+ U1+ O4- U3-",
    "O1+ U1+",
    "O1- U1-",
)


def planar_diagram(rng: random.Random, ops: int) -> OpenGaussDiagram:
    """Build a diagram by plane-preserving operations only.

    Kinks anywhere, self-pokes at a single gap with crossed block
    orders, and concatenation with known planar codes all keep the band
    surface at genus 0, so the result is planar by construction.  Tests
    still verify that with the independent boundary oracle.
    """
    from longvk.gauss import parse_gauss_code
    from longvk.monoid import concat

    current = canonicalize(OpenGaussDiagram(endpoints=(), signs=()))
    for _ in range(ops):
        choice = rng.random()
        n = current.n
        if choice < 0.5:
            event = MoveEvent.r1_insert(
                rng.randint(0, 2 * n), rng.choice((1, -1)), rng.choice(("OU", "UO"))
            )
            current = apply_move(current, event)
        elif choice < 0.8:
            gap = rng.randint(0, 2 * n)
            event = MoveEvent.r2_insert(gap, gap, rng.choice(("O", "U")), "crossed",
                                        rng.choice((1, -1)))
            current = apply_move(current, event)
        else:
            current = concat(current, parse_gauss_code(rng.choice(_PLANAR_SEEDS)))
    return current
