"""Garside shadows, their projections, partitions and serialization.

A Garside shadow is a set of elements containing the generators, closed
under suffixes, and closed under existing joins.  Join closure is checked
without ever claiming to decide join existence globally: within a search
ball, a finite set is join-closed iff below every ball element the shadow
members have a unique weak-order maximum, and a failure of that scan
produces an explicit offending pair whose join is missing.  Search beyond
the ball is never attempted; validators record the radius they used and
treat "no upper bound found" as "join presumed nonexistent".

The projection of g onto a shadow B is the join of the shadow elements
below g.  For a valid shadow that join is itself a shadow element below g,
so it is found directly as the longest candidate, with the dominance over
all other candidates asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from weakref import WeakKeyDictionary

from .coxeter import CoxeterSystem, Element, InternalInconsistencyError
from .shi import shi_gates
from .automata import cone_type_gates
from .weak_order import _lower_set, join_bounded


class CutoffExceeded(Exception):
    """A closure step would need to search beyond the allowed ball."""


class ShadowFileError(ValueError):
    """Malformed or mismatched serialized shadow."""


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violation: str | None = None
    witness: tuple = ()
    search_radius: int = 0
    join_search_presumed: bool = True  # searches were ball-bounded, not proofs

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class GarsideShadow:
    """A validated finite Garside shadow with its length constant."""

    system: CoxeterSystem
    ordered: tuple[Element, ...]
    members: frozenset[Element]
    constant_m: int
    provenance: str

    def __len__(self):
        return len(self.ordered)

    def __iter__(self):
        return iter(self.ordered)

    def __contains__(self, g: Element) -> bool:
        return g in self.members


def _max_finite_label(system: CoxeterSystem) -> int:
    labels = [
        system.matrix.entries[i][j]
        for i in range(system.rank)
        for j in range(i + 1, system.rank)
        if system.matrix.entries[i][j] != 0
    ]
    return max(labels, default=0)


def default_search_radius(system: CoxeterSystem, elements) -> int:
    """Ball radius for join-closure checks: twice the longest member, but at
    least the largest finite label (rank-2 joins reach the corresponding
    longest dihedral element)."""
    longest = max((g.length for g in elements), default=1)
    return max(2 * longest, _max_finite_label(system), 2)


def _suffixes(g: Element) -> set[Element]:
    system = g.system
    return {system.inverse(x) for x in _lower_set(system.inverse(g))}


def validate_shadow(
    system: CoxeterSystem, elements, search_radius: int | None = None
) -> ValidationResult:
    """Check the Garside shadow axioms for a finite element set.

    Returns Valid, or a Violation carrying the offending suffix or pair.
    Join existence is searched within a ball; candidates beyond it are
    presumed nonexistent and the result says so.
    """
    members = frozenset(elements)
    for s in system.gens:
        if s not in members:
            return ValidationResult(
                False, f"generator {s} missing", (s,), 0
            )
    if search_radius is None:
        search_radius = default_search_radius(system, members)

    for b in sorted(members):
        for w in _suffixes(b):
            if w not in members:
                return ValidationResult(
                    False,
                    f"suffix {w} of {b} missing",
                    (b, w),
                    search_radius,
                )

    inv = {b: system.inversion_walls(b) for b in members}
    for x in system.ball(search_radius):
        inv_x = system.inversion_walls(x)
        below = [b for b in members if inv[b] <= inv_x]
        if not below:
            continue
        top = max(below, key=lambda b: (b.length, b.word))
        for b in below:
            if not inv[b] <= inv[top]:
                j = join_bounded([top, b], x)
                return ValidationResult(
                    False,
                    f"join {j} of {top} and {b} missing",
                    (top, b, j),
                    search_radius,
                )
    return ValidationResult(True, None, (), search_radius)


def make_shadow(
    system: CoxeterSystem,
    elements,
    provenance: str,
    search_radius: int | None = None,
) -> GarsideShadow:
    """Validate and wrap an element set; raises on a failed validation."""
    result = validate_shadow(system, elements, search_radius)
    if not result:
        raise ValueError(f"not a Garside shadow: {result.violation}")
    members = frozenset(elements)
    return GarsideShadow(
        system=system,
        ordered=tuple(sorted(members)),
        members=members,
        constant_m=max(g.length for g in members),
        provenance=provenance,
    )


_gate_shadow_caches: "WeakKeyDictionary[CoxeterSystem, dict]" = WeakKeyDictionary()


def shadow_from_gates(system: CoxeterSystem, kind: str, m: int | None = None) -> GarsideShadow:
    """The shadows of gates: low elements, m-low elements, or cone-type gates.

    Validation failure here is a fatal internal error, not a user error.
    Results are cached per system, so repeated calls share one validated
    object (and its projection cache).
    """
    cache = _gate_shadow_caches.setdefault(system, {})
    cache_key = (kind, m)
    if cache_key in cache:
        return cache[cache_key]
    if kind == "low":
        gates, provenance = shi_gates(system, 0), "low"
    elif kind == "m-low":
        if m is None:
            raise ValueError("m-low needs the closeness parameter m")
        gates, provenance = shi_gates(system, m), f"m-low({m})"
    elif kind == "gamma":
        gates, provenance = cone_type_gates(system), "gamma"
    else:
        raise ValueError(f"unknown gate kind {kind!r}")
    result = validate_shadow(system, gates)
    if not result:
        raise InternalInconsistencyError(
            f"{provenance} gates failed shadow validation: {result.violation}"
        )
    shadow = GarsideShadow(
        system=system,
        ordered=tuple(sorted(gates)),
        members=frozenset(gates),
        constant_m=max(g.length for g in gates),
        provenance=provenance,
    )
    cache[cache_key] = shadow
    return shadow


def garside_closure(system: CoxeterSystem, seed, cutoff: int) -> GarsideShadow:
    """Smallest shadow containing the seed, by fixed-point closure.

    Adds generators, suffixes, and joins discovered within the search ball;
    raises CutoffExceeded when the ball the policy asks for does not fit
    inside the cutoff."""
    current: set[Element] = {system.identity, *system.gens}
    current.update(seed)
    while True:
        radius = default_search_radius(system, current)
        if radius > cutoff:
            raise CutoffExceeded(
                f"join search needs radius {radius}, cutoff is {cutoff}"
            )
        added = False
        for b in list(current):
            for w in _suffixes(b):
                if w not in current:
                    current.add(w)
                    added = True
        inv = {b: system.inversion_walls(b) for b in current}
        for x in system.ball(radius):
            inv_x = system.inversion_walls(x)
            below = [b for b in current if inv[b] <= inv_x]
            if not below:
                continue
            top = max(below, key=lambda b: (b.length, b.word))
            for b in below:
                if not inv[b] <= inv[top]:
                    j = join_bounded([top, b], x)
                    if j not in current:
                        current.add(j)
                        added = True
        if not added:
            break
    return make_shadow(system, current, "closure-of-seed")


# ---------------------------------------------------------------------------
# Projection and partition

_projection_caches: "WeakKeyDictionary[GarsideShadow, dict]" = WeakKeyDictionary()


def b_projection(shadow: GarsideShadow, g: Element) -> Element:
    """The join of the shadow elements below g.

    The result is the longest shadow member below g; that it bounds every
    other candidate is asserted, since for a valid shadow the join of the
    candidates is itself a candidate."""
    cache = _projection_caches.setdefault(shadow, {})
    hit = cache.get(g)
    if hit is not None:
        return hit
    system = shadow.system
    inv_g = system.inversion_walls(g)
    candidates = [b for b in shadow.ordered if system.inversion_walls(b) <= inv_g]
    top = max(candidates, key=lambda b: (b.length, b.word))
    inv_top = system.inversion_walls(top)
    for b in candidates:
        if not system.inversion_walls(b) <= inv_top:
            raise InternalInconsistencyError(
                f"projection candidates of {g} have no maximum: {top} vs {b}"
            )
    cache[g] = top
    return top


def partition_part(shadow: GarsideShadow, b: Element, radius: int) -> tuple[Element, ...]:
    """Ball slice of the fiber of the projection over b; b gates the part."""
    if b not in shadow:
        raise ValueError(f"{b} is not a member of the shadow")
    return tuple(
        g for g in shadow.system.ball(radius) if b_projection(shadow, g) == b
    )


@dataclass(frozen=True)
class RefinementReport:
    ok: bool
    radius: int
    classes_checked: int
    counterexample: tuple = ()


def refinement_check(
    small: GarsideShadow, large: GarsideShadow, radius: int
) -> RefinementReport:
    """Verify that the partition of the larger shadow refines the smaller's.

    For all x, y in the ball: equal projections onto the large shadow force
    equal projections onto the small one.  A counterexample is an
    implementation bug, not a property of the input."""
    if not small.members <= large.members:
        raise ValueError("refinement_check requires the first shadow inside the second")
    by_large: dict[Element, Element] = {}
    for x in small.system.ball(radius):
        key = b_projection(large, x)
        mine = b_projection(small, x)
        if key in by_large:
            if by_large[key] != mine:
                return RefinementReport(False, radius, len(by_large), (x, key))
        else:
            by_large[key] = mine
    return RefinementReport(True, radius, len(by_large))


# ---------------------------------------------------------------------------
# Serialization

_SHADOW_HEADER = "# garside shadow v1"


def shadow_to_text(shadow: GarsideShadow) -> str:
    lines = [
        _SHADOW_HEADER,
        f"group-hash: {shadow.system.matrix.content_hash()}",
        f"provenance: {shadow.provenance}",
        f"constant-m: {shadow.constant_m}",
        f"elements: {len(shadow)}",
    ]
    lines.extend(shadow.system.render_word(g.word) for g in shadow.ordered)
    return "\n".join(lines) + "\n"


def shadow_from_text(system: CoxeterSystem, text: str) -> GarsideShadow:
    """Reload a serialized shadow; revalidates both hash and axioms."""
    lines = [ln.rstrip("\n") for ln in text.splitlines()]
    if not lines or lines[0].strip() != _SHADOW_HEADER:
        raise ShadowFileError("missing shadow header")
    fields: dict[str, str] = {}
    body: list[str] = []
    for ln in lines[1:]:
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ":" in ln and not body and ln.split(":", 1)[0] in (
            "group-hash",
            "provenance",
            "constant-m",
            "elements",
        ):
            key, value = ln.split(":", 1)
            fields[key] = value.strip()
        else:
            body.append(ln)
    for required in ("group-hash", "provenance", "constant-m", "elements"):
        if required not in fields:
            raise ShadowFileError(f"missing field {required!r}")
    if fields["group-hash"] != system.matrix.content_hash():
        raise ShadowFileError("shadow was computed for a different group")
    if len(body) != int(fields["elements"]):
        raise ShadowFileError(
            f"expected {fields['elements']} elements, found {len(body)}"
        )
    members = []
    for word_text in body:
        g = system.element(word_text)
        if system.render_word(g.word) != word_text:
            raise ShadowFileError(f"word {word_text!r} is not a normal form")
        members.append(g)
    try:
        shadow = make_shadow(system, members, fields["provenance"])
    except ValueError as exc:
        raise ShadowFileError(str(exc)) from None
    if shadow.constant_m != int(fields["constant-m"]):
        raise ShadowFileError(
            f"constant-m mismatch: file says {fields['constant-m']}, "
            f"recomputed {shadow.constant_m}"
        )
    return shadow
