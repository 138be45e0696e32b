"""Certifying 4-colorability: a coloring, or a critical induced witness.

With the complete 5-vertex-critical list for a class in hand, "not
4-colorable" stops being a bare claim: some list member must occur as an
induced subgraph, and that occurrence is easy to re-check.
"""

from critenum import (
    add_vertex_with_neighborhood,
    bits,
    certify_4_colorability,
    chromatic_number,
    complement,
    complete,
    cycle,
    encode_graph6,
    enumerate_5vc,
    induced_subgraph,
    parse_pattern,
)

h = parse_pattern("k1,3+p1")
family = (parse_pattern("p5"), h)
critical_list = enumerate_5vc(h, max_order=9).graphs
print(f"critical list up to order 9: {len(critical_list)} graphs")

# A colorable input gets a proper coloring.
cert = certify_4_colorability(cycle(5), critical_list, family)
print("C5 ->", cert.coloring)

# K5 is its own witness.
cert = certify_4_colorability(complete(5), critical_list, family)
print("K5 -> witness on vertices", sorted(bits(cert.witness.vertices)),
      "=", encode_graph6(critical_list[cert.witness.list_index]))

# A bigger host: dominate the complement of C9 with three mutually adjacent
# vertices.  Chromatic number jumps to 8, and the certificate is a small
# induced critical graph (K5 hides inside).
host = complement(cycle(9))
for _ in range(3):
    host = add_vertex_with_neighborhood(host, (1 << host.n) - 1)
print("host: n =", host.n, "chi =", chromatic_number(host))
cert = certify_4_colorability(host, critical_list, family)
w = cert.witness
sub = induced_subgraph(host, w.vertices)
print("witness vertices", sorted(bits(w.vertices)), "induce", encode_graph6(sub),
      "with chi =", chromatic_number(sub))
