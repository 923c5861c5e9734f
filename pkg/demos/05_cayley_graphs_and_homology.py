"""Drawing a finite group: Cayley graphs, complexes, and their homology.

Once completion has decided the word problem, the group becomes a concrete
combinatorial object.  Vertices are normal forms, each generator contributes
one edge out of every vertex, and each defining relation glues in one face
per vertex.  From there we can count loops, compute integral homology, and
export the picture for other tools.
"""

from polygraph import cayley, presentations
from polygraph.rewriting import Converged, complete, encode

# --- the cyclic group of order five ------------------------------------------
z5 = presentations.parse("< a | a^5 = 1 >")
out = complete(encode(z5, None))
assert isinstance(out, Converged)

g = cayley.build_graph(z5, out.system)
print("Z5 vertices:", ", ".join(g.vertices))
print("Z5 edges:   ", ", ".join(f"{g.vertices[e.src]}--{e.gen}-->{g.vertices[e.dst]}" for e in g.edges))

inv = cayley.graph_invariants(g)
print(f"connected={inv.connected}  V={inv.vertices}  E={inv.edges}  cycle rank={inv.cycle_rank}")

# --- cycle rank grows linearly with the group ---------------------------------
# For a finite group of order n on k generators the graph has n vertices and
# n*k edges, so its cycle rank is n*(k-1) + 1.
d5 = presentations.parse("< r, s | r^5 = 1, s^2 = 1, r s r s = 1 >")
d5_out = complete(encode(d5, None))
assert isinstance(d5_out, Converged)
d5_graph = cayley.build_graph(d5, d5_out.system)
d5_inv = cayley.graph_invariants(d5_graph)
n, k = d5_inv.vertices, len(d5_graph.gens)
print(f"\nD5: V={n}  E={d5_inv.edges}  cycle rank={d5_inv.cycle_rank}  (n*(k-1)+1 = {n * (k - 1) + 1})")

# --- filling in the relations: a 2-complex and its homology -------------------
# Each relation traced from each vertex bounds a face.  The resulting complex
# is connected (h0 = 1), and killing the relation loops leaves h1 trivial for
# these finite examples, while the Euler characteristic V - E + F is whatever
# the counts say it is.
for name, p, system in (("Z5", z5, out.system), ("D5", d5, d5_out.system)):
    c = cayley.build_complex(p, system)
    h = cayley.homology(c)
    print(
        f"{name}: faces={len(c.faces)}  h0={h.h0_rank}  h1={h.h1_rank}"
        f"  torsion={list(h.h1_torsion)}  euler={h.euler}"
    )

# --- exports -------------------------------------------------------------------
dot = cayley.export(g, "dot").decode()
print("\nGraphviz header:", dot.splitlines()[0])
print("first edge line:", next(line for line in dot.splitlines() if "->" in line).strip())

blob = cayley.export(d5_graph, "json")
again = cayley.graph_from_json(blob)
print("JSON round trip reproduces the D5 graph:", again == d5_graph)
