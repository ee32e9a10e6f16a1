"""Dense univariate polynomials over F_p as coefficient lists, low degree first.

The zero polynomial is [].  All functions return normalized lists (no
trailing zeros).  Factorization: squarefree decomposition, distinct-degree
splitting, then Cantor-Zassenhaus equal-degree splitting.
"""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

UPoly = List[int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def norm(a: UPoly, p: int) -> UPoly:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a: UPoly) -> int:
    return len(a) - 1  # -1 for zero


def add(a: UPoly, b: UPoly, p: int) -> UPoly:
    n = max(len(a), len(b))
    return norm([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def sub(a: UPoly, b: UPoly, p: int) -> UPoly:
    n = max(len(a), len(b))
    return norm([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p)


def mul(a: UPoly, b: UPoly, p: int) -> UPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return norm(out, p)


def scale(a: UPoly, c: int, p: int) -> UPoly:
    return norm([x * c for x in a], p)


def monic(a: UPoly, p: int) -> UPoly:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def divmod_(a: UPoly, b: UPoly, p: int) -> Tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = norm(a, p)
    return norm(q, p), a


def rem(a: UPoly, b: UPoly, p: int) -> UPoly:
    return divmod_(a, b, p)[1]


def exact_div(a: UPoly, b: UPoly, p: int) -> UPoly:
    q, r = divmod_(a, b, p)
    if r:
        raise ArithmeticError("division is not exact")
    return q


def gcd(a: UPoly, b: UPoly, p: int) -> UPoly:
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def derivative(a: UPoly, p: int) -> UPoly:
    return norm([i * c for i, c in enumerate(a)][1:], p)


def powmod(a: UPoly, e: int, f: UPoly, p: int) -> UPoly:
    result = [1]
    base = rem(a, f, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), f, p)
        base = rem(mul(base, base, p), f, p)
        e >>= 1
    return result


def _pth_root(a: UPoly, p: int) -> UPoly:
    # coefficients are in F_p, where the Frobenius map is the identity
    return norm(a[::p], p)


def squarefree_decomposition(f: UPoly, p: int) -> List[Tuple[UPoly, int]]:
    """Pairs (g, i): f (monic) = prod g^i, each g squarefree and pairwise coprime."""
    f = monic(f, p)
    out: List[Tuple[UPoly, int]] = []
    if deg(f) < 1:
        return out
    c = gcd(f, derivative(f, p), p)
    w = exact_div(f, c, p)
    i = 1
    while deg(w) > 0:
        y = gcd(w, c, p)
        z = exact_div(w, y, p)
        if deg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = exact_div(c, y, p)
    if deg(c) > 0:
        for g, m in squarefree_decomposition(_pth_root(c, p), p):
            out.append((g, m * p))
    return out


def distinct_degree(f: UPoly, p: int) -> List[Tuple[UPoly, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    out = []
    x = [0, 1]
    h = x
    rest = f
    i = 1
    while deg(rest) >= 2 * i:
        h = powmod(h, p, rest, p)
        g = gcd(rest, sub(h, x, p), p)
        if deg(g) > 0:
            out.append((g, i))
            rest = exact_div(rest, g, p)
            h = rem(h, rest, p)
        i += 1
    if deg(rest) > 0:
        out.append((rest, deg(rest)))
    return out


def equal_degree(f: UPoly, d: int, p: int, rng: random.Random) -> List[UPoly]:
    """Irreducible factors of squarefree monic f whose factors all have degree d."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = norm([rng.randrange(p) for _ in range(n)], p)
        if deg(a) < 1:
            continue
        if p == 2:
            b, t = a, a
            for _ in range(d - 1):
                t = rem(mul(t, t, p), f, p)
                b = add(b, t, p)
        else:
            b = sub(powmod(a, (p ** d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 0 < deg(g) < n:
            return (equal_degree(g, d, p, rng)
                    + equal_degree(exact_div(f, g, p), d, p, rng))


def factor(f: UPoly, p: int, seed: Optional[int] = 0) -> Tuple[int, List[Tuple[UPoly, int]]]:
    """(leading coefficient, sorted [(monic irreducible, multiplicity)])."""
    f = norm(f, p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    lead = f[-1]
    out = []
    for g, mult in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p):
            for irr in equal_degree(h, d, p, rng):
                out.append((irr, mult))
    out.sort(key=lambda fm: (deg(fm[0]), fm[0][::-1], fm[1]))
    return lead, out


def is_irreducible_bruteforce(f: UPoly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    from itertools import product

    f = norm(f, p)
    n = deg(f)
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            if not rem(f, list(low) + [1], p):
                return False
    return True
