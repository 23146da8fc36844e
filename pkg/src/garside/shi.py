"""Small roots, Shi sign vectors, and the gates of the Shi partitions.

A wall is m-elementary when at most m walls separate it from the identity
vertex.  Two independent routes compute these sets:

* the fast route walks the root graph outward from the simple roots,
  updating the separation count from exact inner products (the count
  changes by +1, 0 or -1 under a simple reflection according to whether
  B(alpha_s, root) is <= -1, strictly between -1 and 1, or >= 1);
* the oracle route counts separating walls directly from the definition on
  a finite Cayley ball, using nothing but half-space signs.

The fast route is only trusted where the two agree; the test suite holds
them against each other on every supported system.  Gates of the m-Shi
partition are read off the sign-pattern automaton: the gate of a part is
the inverse of the shortest word realizing the part's pattern.  The tests
check the gates against per-part minima computed naively on balls.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from weakref import WeakKeyDictionary

from .coxeter import (
    CoxeterSystem,
    Element,
    InternalInconsistencyError,
    Root,
)

#: Reflection-table marker: the image root is no longer m-elementary.
EXITS = "exits"
#: Reflection-table marker: the image root is negative (root was alpha_s).
NEGATIVE = "negative"

_MAX_ROOTS = 200_000  # non-termination guard; the sets are provably finite


@dataclass(frozen=True)
class SmallRootSet:
    """The m-elementary walls of a system, with their reflection table."""

    system: CoxeterSystem
    m: int
    ordered: tuple[Root, ...]
    roots: frozenset[Root]
    reflection_table: dict  # (generator index, Root) -> Root | EXITS | NEGATIVE
    counts: dict  # Root -> number of walls separating it from the identity

    def __len__(self):
        return len(self.ordered)

    def __contains__(self, root: Root) -> bool:
        return root in self.roots


@dataclass(frozen=True)
class SignVector:
    """Which m-elementary walls separate a vertex from the identity."""

    bits: tuple[bool, ...]

    def __len__(self):
        return len(self.bits)


_nsep_caches: "WeakKeyDictionary[CoxeterSystem, dict]" = WeakKeyDictionary()
_small_root_caches: "WeakKeyDictionary[CoxeterSystem, dict]" = WeakKeyDictionary()
_low_caches: "WeakKeyDictionary[CoxeterSystem, dict]" = WeakKeyDictionary()


def separation_count(system: CoxeterSystem, root: Root) -> int:
    """Number of walls separating the identity vertex from this wall.

    Computed by descending the root graph to a simple root; each step with
    B(alpha_s, root) >= 1 sheds exactly one separating wall, steps with
    0 < B < 1 shed none.
    """
    cache = _nsep_caches.setdefault(system, {})
    root = root.abs()
    chain: list[tuple[Root, int]] = []
    current = root
    while current not in cache:
        if current in system._simple_set:
            cache[current] = 0
            break
        for s in range(system.rank):
            b = system.bilinear(system.simple_roots[s], current)
            if b.sign() > 0:
                bump = 1 if (b - 1).sign() >= 0 else 0
                chain.append((current, bump))
                current = system.reflect(s, current)
                break
        else:
            raise InternalInconsistencyError(
                f"positive root with no descent direction: {current}"
            )
    value = cache[current]
    for r, bump in reversed(chain):
        value += bump
        cache[r] = value
    return cache[root]


def elementary_walls(system: CoxeterSystem, m: int) -> SmallRootSet:
    """The finite set of m-elementary walls (fast inner-product route)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    per_system = _small_root_caches.setdefault(system, {})
    if m in per_system:
        return per_system[m]

    values: dict[Root, int] = {alpha: 0 for alpha in system.simple_roots}
    kept: set[Root] = set(system.simple_roots)
    queue: deque[Root] = deque(system.simple_roots)
    while queue:
        beta = queue.popleft()
        n_beta = values[beta]
        for s in range(system.rank):
            alpha = system.simple_roots[s]
            if beta == alpha:
                continue
            b = system.bilinear(alpha, beta)
            if (b - 1).sign() >= 0:
                delta = -1
            elif (b + 1).sign() <= 0:
                delta = 1
            else:
                delta = 0
            gamma = system.reflect(s, beta)
            n_gamma = n_beta + delta
            known = values.get(gamma)
            if known is not None:
                if known != n_gamma:
                    raise InternalInconsistencyError(
                        f"separation count mismatch at {gamma}: {known} vs {n_gamma}"
                    )
                continue
            values[gamma] = n_gamma
            if n_gamma <= m:
                kept.add(gamma)
                queue.append(gamma)
                if len(kept) > _MAX_ROOTS:
                    raise InternalInconsistencyError(
                        "small-root enumeration exceeded the termination guard"
                    )

    table: dict = {}
    for beta in kept:
        for s in range(system.rank):
            if beta == system.simple_roots[s]:
                table[(s, beta)] = NEGATIVE
                continue
            gamma = system.reflect(s, beta)
            table[(s, beta)] = gamma if gamma in kept else EXITS

    ordered = tuple(sorted(kept, key=system.root_sort_key))
    out = SmallRootSet(
        system=system,
        m=m,
        ordered=ordered,
        roots=frozenset(kept),
        reflection_table=table,
        counts={r: values[r] for r in kept},
    )
    per_system[m] = out
    return out


# ---------------------------------------------------------------------------
# Oracle route: wall counting on a ball, straight from the definition


def wall_separation_oracle(system: CoxeterSystem, radius: int) -> dict[Root, int]:
    """For each wall met by the ball, count the walls separating it from id.

    A wall W' separates id from W when every vertex adjacent to W lies on
    the far side of W'.  Both the wall universe and the adjacent-vertex sets
    are truncated to the ball, so counts are only reliable when the ball is
    comfortably larger than the walls under scrutiny; the tests pin radii
    where this holds.
    """
    ball = system.ball(radius)
    adjacency: dict[Root, list[Element]] = {}
    for g in ball:
        for s in range(system.rank):
            wall = system.act_word(g.word, system.simple_roots[s]).abs()
            adjacency.setdefault(wall, []).append(g)
    inversions = {g: system.inversion_walls(g) for g in ball}
    counts: dict[Root, int] = {}
    for beta, vertices in adjacency.items():
        n = 0
        for gamma in adjacency:
            if gamma == beta:
                continue
            if all(gamma in inversions[x] for x in vertices):
                n += 1
        counts[beta] = n
    return counts


def elementary_walls_oracle(system: CoxeterSystem, m: int, radius: int) -> tuple[Root, ...]:
    """m-elementary walls per the ball-restricted wall-count definition."""
    counts = wall_separation_oracle(system, radius)
    return tuple(
        sorted((r for r, c in counts.items() if c <= m), key=system.root_sort_key)
    )


# ---------------------------------------------------------------------------
# Closeness, sign vectors, gates


def m_close(wall: Root, g: Element, m: int) -> bool:
    """True iff at most m walls separate g from the given wall."""
    system = g.system
    moved = system.act_inverse_word(g.word, wall).abs()
    return separation_count(system, moved) <= m


def shi_sign_vector(g: Element, m: int) -> SignVector:
    """Membership pattern of g against the m-elementary walls.

    Two elements lie in the same m-Shi part iff their vectors are equal.
    """
    srs = elementary_walls(g.system, m)
    inv = g.system.inversion_walls(g)
    return SignVector(tuple(root in inv for root in srs.ordered))


def pattern_witnesses(system: CoxeterSystem, m: int) -> dict[frozenset, tuple]:
    """Shortest reduced word realizing each reachable m-Shi sign pattern.

    Patterns are tracked on inverses: reading a reduced word for g keeps
    the set of m-elementary walls sent negative by g, which is the
    separation pattern of g^{-1}.  The reachable patterns form the states
    of the canonical reduced-word automaton, so this BFS terminates.
    """
    srs = elementary_walls(system, m)
    table = srs.reflection_table
    start: frozenset = frozenset()
    witnesses: dict[frozenset, tuple] = {start: ()}
    queue: deque[frozenset] = deque([start])
    while queue:
        state = queue.popleft()
        word = witnesses[state]
        for s in range(system.rank):
            alpha = system.simple_roots[s]
            if alpha in state:
                continue  # s is a descent: not a reduced continuation
            nxt = {alpha}
            for gamma in state:
                image = table[(s, gamma)]
                if image is not EXITS and image is not NEGATIVE:
                    nxt.add(image)
            key = frozenset(nxt)
            if key not in witnesses:
                witnesses[key] = word + (s,)
                queue.append(key)
        if len(witnesses) > _MAX_ROOTS:
            raise InternalInconsistencyError(
                "sign-pattern enumeration exceeded the termination guard"
            )
    return witnesses


def shi_gates(system: CoxeterSystem, m: int) -> tuple[Element, ...]:
    """Gates of the m-Shi partition, ShortLex sorted: the m-low elements.

    One gate per reachable sign pattern; the gate is the unique weak-order
    minimum of its part, obtained as the inverse of the shortest word
    whose element sends exactly that pattern of m-elementary walls
    negative.
    """
    per_system = _low_caches.setdefault(system, {})
    if m in per_system:
        return per_system[m]
    witnesses = pattern_witnesses(system, m)
    gates = sorted(
        system.inverse(system.element(word)) for word in witnesses.values()
    )
    out = tuple(gates)
    per_system[m] = out
    return out


def is_shi_gate(g: Element, m: int) -> bool:
    """True iff g is the minimum of its m-Shi part.

    Decided on the length-l(g) ball: any strictly smaller or equal-length
    element of the same part would have to live there.
    """
    system = g.system
    roots = elementary_walls(system, m).roots
    pattern = system.inversion_walls(g) & roots
    for h in system.ball(g.length):
        if h != g and system.inversion_walls(h) & roots == pattern:
            return False
    return True
