"""Automata for reduced words and cone types
=============================================

The canonical automaton tracks which m-elementary walls an element sends
negative; it accepts exactly the reduced words.  Minimizing it by
partition refinement yields the automaton whose states are the cone
types, and the gates of the cone-type partition form the smallest
Garside shadow.
"""

from garside import (
    canonical_automaton,
    cone_type_fingerprint,
    cone_type_gates,
    cone_type_id,
    make_system,
    minimize,
)

tri = make_system(["s", "t", "u"], {("s", "t"): 3, ("t", "u"): 3, ("s", "u"): 4}, "triangle-334")

aut = canonical_automaton(tri, 0)
aut1 = canonical_automaton(tri, 1)
mini = minimize(aut)
print(f"canonical automaton (m=0): {aut.n_states} states")
print(f"canonical automaton (m=1): {aut1.n_states} states")
print(f"minimized:                 {mini.n_states} states (same for every m)")
assert minimize(aut1).n_states == mini.n_states

for word in ("stsu", "ss", "stst", "sts"):
    print(f"  accepts {word!r}?", aut.accepts_word(tri.parse_word(word)))

gamma = cone_type_gates(tri)
print(f"\ncone-type gates ({len(gamma)} = one per minimized state):")
print("  ", " ".join(str(g) for g in gamma))

# two elements have the same cone type identifier exactly when their
# ball fingerprints agree
a, b = tri.element("st"), tri.element("tstst")
print("\ncone type ids of st and tstst:", cone_type_id(a), cone_type_id(b))
print("fingerprints at radius 3 equal?",
      cone_type_fingerprint(a, 3) == cone_type_fingerprint(b, 3))

print("\nDOT export of the minimized automaton of the infinite dihedral group:")
dinf = make_system(["s", "t"], {("s", "t"): 0}, "D-infinity")
print(minimize(canonical_automaton(dinf, 0)).to_dot())
