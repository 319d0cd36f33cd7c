"""The Iwahori-Weyl group and its quasi-Coxeter structure.

Elements are pairs (translation class, finite Weyl part).  Length counts the
affine hyperplanes separating the base alcove from its image; reduced words
come from a greedy alcove walk; the Kottwitz map reads off the connected
component, and its kernel is exactly the affine Weyl group, with the alcove
stabilizer Omega supplying the rest.
"""

from affweyl import load_group

print("== split SL2 ==")
g = load_group("a1-sc")
t = g.translation(g.coinv.project((1,)))
omega, letters = t.reduced_word()
print("t^{alpha-check}: length", t.length, " word", letters)
for n in range(4):
    tn = g.translation(g.coinv.project((n,)))
    print(f"  l(t^{n}a-check) = {tn.length}")

print()
print("== PGL2: a nontrivial alcove stabilizer ==")
p = load_group("a1-ad")
tw = p.translation(p.coinv.project((1,)))
print("t^{omega-check}: length", tw.length, " kottwitz:", p.kottwitz(tw))
print("omega part:", tw.omega, "(a length-zero element permuting the walls)")

print()
print("== the twisted group over A3 (relative type C2) ==")
f = load_group("folded-a3")
print("simple affine reflections:",
      [(s.index, s.family.covector, s.level) for s in f.simple_affine])
cls = f.coinv.project((1, 0, 0))
t = f.translation(cls)
print("projected alpha1-check translates with length", t.length)
print("its reduced word:", t.reduced_word()[1])
print("Bruhat: is w[1] below it?",
      f.bruhat_leq(f.element_from_string("w[1]"), t))

print()
print("== torsion translations in the twisted D3 group ==")
d = load_group("folded-d3")
tor = d.coinv.make((0, 0), (1,))
tt = d.translation(tor)
print("torsion class translation: length", tt.length,
      " kottwitz:", d.kottwitz(tt))
print("it stabilizes the base alcove:", tt.omega == tt)
