"""Coxeter systems and exact group arithmetic
=============================================

A system is defined by its generators and the symmetric label matrix
(0 encodes an unbounded label).  Elements live in ShortLex normal form,
and every length/descent decision runs through exact root arithmetic.
"""

from garside import make_system

# the infinite dihedral group: two involutions, no relation between them
dinf = make_system(["s", "t"], {("s", "t"): 0}, "D-infinity")
s, t = dinf.gens

print("normal form of ststst...:", dinf.element("ststss"))
print("length of stst:", dinf.element("stst").length)
print("(st) * (ts) =", dinf.multiply(dinf.element("st"), dinf.element("ts")))
print("inverse of st:", dinf.inverse(dinf.element("st")))
print("distance from st to ts:", dinf.word_metric(dinf.element("st"), dinf.element("ts")))

# descents: which generators shorten an element from either side
g = dinf.element("tst")
print("left descents of tst:", sorted(dinf.descents(g, "left")))
print("right descents of tst:", sorted(dinf.descents(g, "right")))

# the symmetric group on three letters, as the rank-2 system with label 3
s3 = make_system(["s", "t"], {("s", "t"): 3}, "I2(3)")
print("\nin the hexagon group: tst ==", s3.element("tst"), "(braid relation)")

# a ball in the Cayley graph, ShortLex ordered and closed under prefixes
ball = s3.ball(3)
print("ball of radius 3:", [str(x) for x in ball])

# walls: every pair of elements is separated by exactly distance-many walls
a, b = s3.element("st"), s3.element("ts")
walls = s3.separating_walls(a, b)
print(f"walls separating st from ts: {len(walls)} (= distance {s3.word_metric(a, b)})")
for wall in sorted(walls, key=s3.root_sort_key):
    print("  ", s3.render_root(wall))

# suffixes in the sense of length-additive factorization
print("\nis s a suffix of ts?", dinf.is_suffix(s, dinf.element("ts")))
print("is t a suffix of ts?", dinf.is_suffix(t, dinf.element("ts")))
