"""
Connectivity, linking, and tangles
==================================

lambda(X) = r(X) + r(E-X) - r(E) measures how tangled a subset is with its
complement; kappa(X, Y) is the best separation between two fixed sets, and
the linking construction realizes it as a minor. Tangles package the "small
side" choices of all low-order separations into one orientation.
"""

from matroidkit import (
    clique,
    connectivity,
    direct_sum,
    find_clique_minor,
    flats,
    clique_minor_tangle,
    is_modular_flat,
    is_tangle,
    is_vertically_k_connected,
    kappa,
    linking_minor,
    local_conn,
    tangle_matroid,
    tangle_tk,
    uniform,
)

m = clique(6)

# a triangle meets the rest of K_6 in rank 2
tri = [0, 1, 5]
print("lambda(triangle) in K_6:", connectivity(m, tri))

# kappa between two vertex-disjoint triangles, with a witness side
x, y = [0, 1, 5], [12, 13, 14]
value, wit = kappa(m, x, y)
print(f"kappa(triangle, triangle) = {value}, witnessed by side "
      f"{sorted(wit.side)} ({wit.kind})")

# the linking minor keeps both restrictions intact and realizes kappa
n, cert = linking_minor(m, x, y)
back = dict(cert.mapping)
print(f"linking minor: {n.size} elements, contract {sorted(cert.contract)}")

# local connectivity: the two triangles live on disjoint vertex sets, so
# their spans are skew
print("local connectivity of the two triangles:", local_conn(m, x, y))

# vertical connectivity and its refutations
print("K_6 vertically 4-connected:", is_vertically_k_connected(m, 4) is True)
split = direct_sum(clique(3), clique(3))
verdict = is_vertically_k_connected(split, 2)
print("K_3 + K_3 vertically 2-connected:", verdict is True,
      "- refuted by", sorted(verdict.side))

# modular flats: lines of a clique are modular, matchings are not
print("triangle flat modular:", is_modular_flat(m, [0, 1, 5]))
print("matching flat modular:", is_modular_flat(m, [0, 14]))
print("K_4 has", len(flats(clique(4))), "flats")

# the clique tangle: order-4 tangle of K_6, then its tangle matroid
t = tangle_tk(clique(6), 4)
print(f"\nT_4(K_6): {len(t.maximal)} maximal members, "
      f"axioms ok: {is_tangle(t.matroid, t, 4).ok}")
tm = tangle_matroid(tangle_tk(clique(5), 3))
print("tangle matroid of T_3(K_5): rank", tm.rank(),
      "on", tm.size, "elements")

# tangles travel along minors: a K_5 minor of a bigger host induces the
# K_5 tangle on the host
host = clique(6)
cert = find_clique_minor(host, 4)
induced = clique_minor_tangle(host, cert, 4)
print(f"tangle induced on K_6 by its K_5 minor: order {induced.theta}, "
      f"valid: {is_tangle(host, induced, induced.theta).ok}")
