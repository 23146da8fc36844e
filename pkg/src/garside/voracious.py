"""Voracious projections, the voracious language, and its automaton.

Given a Garside shadow B, the voracious projection sends g to
g * projection_B(g^{-1}); iterating it walks any element down to the
identity in steps of bounded length.  Recording minimal-length words for
each step yields the language slice for g, and the union over all g is
the voracious language of B.  For finite B the language is recognized by
a word-labelled automaton whose states are the shadow members: an edge
runs from b to w whenever projecting w*b onto B gives back w, labelled by
all reduced words of w^{-1}.

A second, independent projection is implemented straight from the
original wall description (walls separating g from the identity that are
closest to g); the two must coincide for the shadow of low elements, and
the tests compare them exhaustively on balls.
"""

from __future__ import annotations

from dataclasses import dataclass
from weakref import WeakKeyDictionary

from .automata import Automaton
from .coxeter import Element, InternalInconsistencyError, Word
from .shadows import GarsideShadow, b_projection
from .shi import separation_count
from .weak_order import _lower_set, weak_leq


@dataclass(frozen=True)
class VoraciousChain:
    """The strictly length-decreasing iteration of the projection down to id."""

    element: Element
    steps: tuple[Element, ...]  # element, nu(element), ..., identity


@dataclass(frozen=True)
class LanguageSlice:
    """All voracious words of bounded length, grouped by represented element."""

    max_len: int
    by_element: dict  # Element -> tuple[Word, ...] (ShortLex sorted)
    words: frozenset  # all words in the slice


@dataclass(frozen=True)
class Acceptance:
    accepted: bool
    states: tuple[str, ...]  # labels of accepting final states


REJECTED = Acceptance(False, ())


def voracious_projection(shadow: GarsideShadow, g: Element) -> Element:
    """One voracious step: g times the shadow projection of its inverse."""
    system = shadow.system
    return system.multiply(g, b_projection(shadow, system.inverse(g)))


def voracious_chain(shadow: GarsideShadow, g: Element) -> VoraciousChain:
    system = shadow.system
    steps = [g]
    current = g
    while not current.is_identity():
        nxt = voracious_projection(shadow, current)
        if nxt.length >= current.length:
            raise InternalInconsistencyError(
                f"voracious projection failed to shorten {current}"
            )
        steps.append(nxt)
        current = nxt
    return VoraciousChain(g, tuple(steps))


def op_voracious_projection(g: Element) -> Element:
    """The original voracious projection, from its wall description.

    Takes the walls separating g from the identity that no wall separates
    from g, and returns the largest element below g not cut off from the
    identity by any of them.  Serves as an independent oracle for the
    projection attached to the shadow of low elements.
    """
    system = g.system
    critical = [
        wall
        for wall in system.inversion_walls(g)
        if separation_count(system, system.act_inverse_word(g.word, wall)) == 0
    ]
    candidates = [
        p
        for p in _lower_set(g)
        if not any(w in system.inversion_walls(p) for w in critical)
    ]
    best = max(candidates, key=lambda p: (p.length, p.word))
    for p in candidates:
        if not weak_leq(p, best):
            raise InternalInconsistencyError(
                f"no largest element below {g} avoiding its closest walls: "
                f"{best} vs {p}"
            )
    return best


# ---------------------------------------------------------------------------
# Reduced words and the language

_reduced_word_caches: "WeakKeyDictionary[CoxeterSystem, dict]" = WeakKeyDictionary()


def reduced_words(g: Element) -> frozenset:
    """All reduced words of g (minimal-length words evaluating to it)."""
    cache = _reduced_word_caches.setdefault(g.system, {})
    stack = [g]
    while stack:
        top = stack[-1]
        if top in cache:
            stack.pop()
            continue
        if top.is_identity():
            cache[top] = frozenset({()})
            stack.pop()
            continue
        system = top.system
        parents = [
            (system.multiply(top, system.generator(name)), system._gen_index[name])
            for name in system.descents(top, "right")
        ]
        pending = [p for p, _ in parents if p not in cache]
        if pending:
            stack.extend(pending)
            continue
        words = set()
        for parent, s in parents:
            words.update(w + (s,) for w in cache[parent])
        cache[top] = frozenset(words)
        stack.pop()
    return cache[g]


_language_caches: "WeakKeyDictionary[GarsideShadow, dict]" = WeakKeyDictionary()


def language_of(shadow: GarsideShadow, g: Element) -> frozenset:
    """The voracious words for g: minimal-length words built step by step.

    The words for the identity are just the empty word; otherwise every
    word for the projection of g extends by every reduced word of the
    remaining segment.  All results are reduced words of g.
    """
    cache = _language_caches.setdefault(shadow, {})
    hit = cache.get(g)
    if hit is not None:
        return hit
    if g.is_identity():
        out = frozenset({()})
    else:
        system = shadow.system
        nu = voracious_projection(shadow, g)
        segment = system.multiply(system.inverse(nu), g)
        tails = reduced_words(segment)
        out = frozenset(u + v for u in language_of(shadow, nu) for v in tails)
    cache[g] = out
    return out


def enumerate_language(shadow: GarsideShadow, max_len: int) -> LanguageSlice:
    """The voracious language cut at max_len, grouped by element.

    Voracious words are geodesic, so the slice is the union of the
    per-element languages over the ball of the same radius."""
    by_element = {}
    words = set()
    for g in shadow.system.ball(max_len):
        lg = language_of(shadow, g)
        by_element[g] = tuple(sorted(lg))
        words.update(lg)
    return LanguageSlice(max_len, by_element, frozenset(words))


# ---------------------------------------------------------------------------
# The automaton of the language


def build_voracious_fsa(shadow: GarsideShadow) -> Automaton:
    """The word-labelled automaton of the voracious language.

    States are the shadow members (ShortLex order, identity first), all
    accepting, start at the identity.  For members b and w with
    projection_B(w b) = w there is an edge b -> w labelled by every
    reduced word of w^{-1}.  Pairs with w = id are skipped: for b != id
    the projection of b is b itself, and the identity pair would only add
    an empty-labelled self-loop.
    """
    system = shadow.system
    states = shadow.ordered
    index = {b: i for i, b in enumerate(states)}
    if states[0] != system.identity:
        raise InternalInconsistencyError("identity must be the first shadow member")
    edges = []
    for b in states:
        for w in states:
            if w.is_identity():
                continue
            if b_projection(shadow, system.multiply(w, b)) == w:
                labels = tuple(sorted(reduced_words(system.inverse(w))))
                edges.append((index[b], index[w], labels))
    return Automaton(
        generator_names=system.generator_names,
        state_labels=tuple(system.render_word(b.word) for b in states),
        start=0,
        accepts=frozenset(range(len(states))),
        edges=tuple(sorted(edges)),
    )


def fsa_accepts(aut: Automaton, word: Word) -> Acceptance:
    """Decomposition acceptance; reports the labels of all accepting runs."""
    states = aut.accepting_states(word)
    if not states:
        return REJECTED
    return Acceptance(True, tuple(sorted(aut.state_labels[q] for q in states)))


@dataclass(frozen=True)
class RegularityReport:
    ok: bool
    max_len: int
    words_checked: int
    missing_from_automaton: tuple
    extra_in_automaton: tuple
    accept_state_mismatches: tuple


def cross_validate_regularity(shadow: GarsideShadow, max_len: int) -> RegularityReport:
    """Exact comparison of the automaton language against the enumerated slice.

    Also checks that each voracious word is accepted exactly at the
    projection of the inverse of its element, as the automaton predicts.
    """
    system = shadow.system
    aut = build_voracious_fsa(shadow)
    slice_ = enumerate_language(shadow, max_len)
    from_automaton = aut.enumerate_language(max_len)
    missing = tuple(sorted(slice_.words - set(from_automaton)))
    extra = tuple(sorted(set(from_automaton) - slice_.words))
    mismatches = []
    for word, states in from_automaton.items():
        if word not in slice_.words:
            continue
        g = system.element(word)
        predicted = b_projection(shadow, system.inverse(g))
        got = {aut.state_labels[q] for q in states}
        if got != {system.render_word(predicted.word)}:
            mismatches.append((word, tuple(sorted(got)), str(predicted)))
    ok = not missing and not extra and not mismatches
    return RegularityReport(
        ok,
        max_len,
        len(slice_.words),
        missing,
        extra,
        tuple(mismatches),
    )
