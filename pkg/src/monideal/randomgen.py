"""Seeded random monomial ideals for property sweeps."""

from __future__ import annotations

import random
from typing import List

from .core import MonomialIdeal, Ring

VARIABLE_NAMES = ("x", "y", "z", "w", "v", "u")


def ring_of_dim(d: int, characteristic: int = 0) -> Ring:
    return Ring(VARIABLE_NAMES[:d], characteristic)


def random_monomial(rng: random.Random, d: int, max_exp: int, nonunit: bool = True):
    while True:
        m = tuple(rng.randint(0, max_exp) for _ in range(d))
        if any(m) or not nonunit:
            return m


def random_ideal(rng: random.Random, ring: Ring, max_gens: int, max_exp: int,
                 min_gens: int = 1) -> MonomialIdeal:
    """Proper nonzero ideal with between min_gens and max_gens random generators."""
    k = rng.randint(min_gens, max_gens)
    return MonomialIdeal.from_generators(
        ring, [random_monomial(rng, ring.dim, max_exp) for _ in range(k)])


def random_ideal_or_zero(rng: random.Random, ring: Ring, max_gens: int, max_exp: int):
    if rng.random() < 0.25:
        return MonomialIdeal.zero(ring)
    return random_ideal(rng, ring, max_gens, max_exp)


def borel_closure(ring: Ring, gens) -> MonomialIdeal:
    """Smallest strongly stable ideal containing ``gens``."""
    seen = set()
    todo: List[tuple] = [tuple(g) for g in gens]
    while todo:
        g = todo.pop()
        if g in seen:
            continue
        seen.add(g)
        for j in range(ring.dim):
            if g[j]:
                for i in range(j):
                    h = list(g)
                    h[j] -= 1
                    h[i] += 1
                    todo.append(tuple(h))
    return MonomialIdeal.from_generators(ring, seen)


def random_strongly_stable(rng: random.Random, ring: Ring, max_gens: int,
                           max_degree: int) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        deg = rng.randint(1, max_degree)
        m = [0] * ring.dim
        for _ in range(deg):
            m[rng.randrange(ring.dim)] += 1
        gens.append(tuple(m))
    return borel_closure(ring, gens)
