"""
Building matroids and asking them questions
===========================================

Everything in the library is driven by one object: a Matroid wraps a rank
function over a ground set {0, ..., n-1}, with subsets passed around as
bitmasks. Constructions, minors, duals, and invariants are all functions
of that rank oracle.
"""

from matroidkit import (
    circuits,
    clique,
    closure,
    dual,
    epsilon,
    fano,
    minor_with_map,
    parallel_classes,
    simplify,
    spike,
    uniform,
)

# The cycle matroid of the complete graph K_5. Elements are the ten edges,
# numbered in lexicographic vertex-pair order.
m = clique(5)
print(f"{m.name}: {m.size} elements, rank {m.rank()}")

# rank of a subset: a triangle has rank 2, a spanning tree rank 4
triangle = [0, 1, 4]          # edges (0,1), (0,2), (1,2)
print("rank of a triangle:", m.rank(triangle))
print("closure of the triangle:", sorted(closure(m, triangle)))

# epsilon counts points (rank-1 flats); for a simple matroid it is just |E|
print("epsilon:", epsilon(m))

# circuits, smallest first; K_5 has ten triangles
tris = [c for c in circuits(m, bound=3)]
print("3-element circuits:", len(tris))

# uniform matroids and duals. The dual of U_{2,5} is U_{3,5}.
u = uniform(2, 5)
print("dual of U(2,5) has rank", dual(u).rank())

# minors: contract edge 0 of K_5 and keep track of element labels
mc, keep = minor_with_map(m, [0], ())
print(f"K_5 / e0: {mc.size} elements, rank {mc.rank()}, "
      f"labels {keep}")

# contracting an edge of a clique creates parallel pairs; simplify
# collapses them and reports where every old element went
si, where = simplify(mc)
print(f"simplification: {si.size} points,",
      "classes:", [sorted(c) for c in parallel_classes(mc)])
print("element map into the simplification:", where)

# two famous small matroids
print("fano:", fano().size, "elements, epsilon", epsilon(fano()))
s = spike(3)
print(f"{s.name}: epsilon {epsilon(s)} (a rank-3 spike carries 7 points)")
