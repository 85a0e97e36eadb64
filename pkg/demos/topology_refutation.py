# # An M-topology whose image is not a topology
#
# Over one element with omega = 2 the chain {} < {1/x} < {2/x} is an
# M-topology on {2/x}. Its image under phi is a family of pair sets whose
# union is not the image of the parent.

from mtop import (MFamily, SearchBounds, Universe, image_family, is_m_topology,
                  is_point_topology, make_mset, search_topology_counterexample)
from mtop.dsl import format_value

u = Universe(("x",), 2)
parent = make_mset(u, {"x": 2})
chain = MFamily(parent, [make_mset(u, c) for c in ({}, {"x": 1}, {"x": 2})])

print("M-topology:", is_m_topology(chain))

img = image_family(chain)
print("carrier:", format_value(img.carrier))
print("members:", [format_value(p) for p in img.sorted_members()])
print("point topology:", is_point_topology(img))


# The search finds the same family on its own.

w = search_topology_counterexample(SearchBounds(1, 2))
print("found:", [format_value(m) for m in w.msets["family"].sorted_members()])
