"""Based root data and their finite Weyl groups.

A based root datum stores roots and coroots as integer vectors in a fixed
basis of the character lattice, with the pairing given by the dot product.
Different lattice realizations of the same Dynkin type are different
presets: the simply-connected and adjoint forms of A1 disagree about which
translations exist, and everything downstream feels that difference.
"""

from affweyl import load_datum

print("== the two A1 realizations ==")
for name in ("a1-sc", "a1-ad"):
    datum = load_datum(name)
    print(f"{name}: roots {datum.roots}  coroots {datum.coroots}")

print()
print("== A2: orbits, dominance, stabilizers ==")
a2 = load_datum("a2-sc")
print("number of roots:", len(a2.roots))
print("Weyl group order:", len(a2.weyl))
print("2rho (sum of positive roots):", a2.two_rho)

mu = (-1, 2)
dom, w = a2.weyl.dominant_representative(mu)
print(f"dominant representative of {mu}: {dom}, moved by a word of length {w.length}")
print("orbit size:", len(a2.weyl.orbit(mu)))
print("stabilizer order of (1,0):", a2.weyl.stabilizer_order((1, 0)))

print()
print("== G2 for good measure ==")
g2 = load_datum("g2")
print("roots:", len(g2.roots), " |W| =", len(g2.weyl))
w0 = g2.weyl.longest_element
print("longest element has length", w0.length, "with canonical word", w0.word)
print("every element knows its lexicographically least reduced word:")
for w in g2.weyl.elements[:6]:
    print("  ", w.word)
