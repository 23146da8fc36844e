"""The right weak order
=======================

g lies below h when some geodesic from the identity to h passes through
g.  Meets always exist; joins exist exactly for bounded sets, and a ball
search can only ever report "nothing found within this radius".
"""

from garside import (
    NoUpperBoundWithin,
    join_bounded,
    join_search,
    lower_interval,
    make_system,
    meet,
    weak_leq,
)

s3 = make_system(["s", "t"], {("s", "t"): 3}, "I2(3)")
dinf = make_system(["s", "t"], {("s", "t"): 0}, "D-infinity")

s, t = s3.gens
sts = s3.element("sts")

print("s <= st:", weak_leq(s, s3.element("st")))
print("t <= st:", weak_leq(t, s3.element("st")))

print("\nlower interval of sts:", [str(x) for x in lower_interval(sts)])

print("\nmeet of {st, sts}:", meet([s3.element("st"), sts]))
print("meet of {s, t}:", meet([s, t]), "(the identity)")

print("\njoin of {s, t} below sts:", join_bounded([s, t], sts))

# in the infinite dihedral group s and t have no common upper bound at all;
# the search is honest about only having looked inside a ball
verdict = join_search(list(dinf.gens), 8)
assert isinstance(verdict, NoUpperBoundWithin)
print("\njoin search for {s, t} in the infinite dihedral group:", verdict)
print("join search for {s, t} in the hexagon group:", join_search([s, t], 3))
