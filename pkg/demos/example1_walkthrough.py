# # Example 1, step by step
#
# Three elements, every count capped at 4. We build the four msets of the
# worked example and push them through the graph embedding phi.

from mtop import Universe, make_mset, phi, reproduce_example1
from mtop.dsl import format_value

u = Universe(("x", "y", "z"), 4)
U = make_mset(u, {"x": 4, "y": 3, "z": 2})
M1 = make_mset(u, {"x": 4, "y": 3})
M2 = make_mset(u, {"x": 2, "y": 3})


# Join and meet are pointwise max and min.

print("M1 join M2 =", format_value(M1 | M2))
print("M1 meet M2 =", format_value(M1 & M2))


# Under phi each mset becomes its graph, a set of (element, count) pairs.
# Union of graphs keeps both (x,2) and (x,4), so phi(M1 join M2) is strictly smaller.

print("phi(M1 join M2)     =", format_value(phi(M1 | M2)))
print("phi(M1) | phi(M2)   =", format_value(phi(M1) | phi(M2)))
print("phi(M1 meet M2)     =", format_value(phi(M1 & M2)))
print("phi(M1) & phi(M2)   =", format_value(phi(M1) & phi(M2)))


# The packaged reproduction checks every value against fixed expectations.

report = reproduce_example1()
print("all values match:", report.all_matched)
for name, rep in report.identities:
    print(f"  {name}: {'holds' if rep.holds else 'fails'}")
