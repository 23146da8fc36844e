"""Small roots and Shi partitions
=================================

A wall is m-elementary when at most m walls separate it from the
identity.  The package builds these sets two ways: a fast walk over the
root graph driven by exact inner products, and a slow count on a Cayley
ball straight from the definition.  They must agree, and the gates of
the m-Shi partition are read off the sign-pattern automaton.
"""

from garside import (
    elementary_walls,
    elementary_walls_oracle,
    m_close,
    make_system,
    shi_gates,
    shi_sign_vector,
)

a2 = make_system(["s", "t", "u"], {("s", "t"): 3, ("t", "u"): 3, ("s", "u"): 3}, "affine-A2")

for m in (0, 1, 2):
    fast = elementary_walls(a2, m)
    oracle = elementary_walls_oracle(a2, m, 8)
    print(f"m={m}: fast route finds {len(fast)} walls, ball oracle {len(oracle)},",
          "equal" if set(fast.ordered) == set(oracle) else "DIFFERENT")

print("\nthe 0-elementary walls of the affine triangle system:")
for root in elementary_walls(a2, 0).ordered:
    print("  depth", a2.root_depth(root), " ", a2.render_root(root))

# how close is a wall to an element?
wall = a2.act_word(a2.parse_word("st"), a2.simple_roots[2])
print("\nwall of the reflection (st)u(st)^-1:")
print("  0-close to id?", m_close(wall, a2.identity, 0))
print("  2-close to id?", m_close(wall, a2.identity, 2))

# sign vectors classify elements into Shi parts
print("\nsign vectors over the 0-elementary walls:")
for word in ("-", "s", "st", "sts", "stu"):
    g = a2.element(word if word != "-" else "")
    bits = "".join("x" if b else "." for b in shi_sign_vector(g, 0).bits)
    print(f"  {word:4s} -> {bits}")

gates = shi_gates(a2, 0)
print(f"\nthe Shi partition has {len(gates)} parts; its gates:")
print("  ", " ".join(str(g) for g in gates))
print("(the classical region count for this system)")
