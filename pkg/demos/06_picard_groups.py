"""
Picard groups from relation matrices
====================================

A presentation Z<generators>/<relations> is decomposed by Smith normal form.
The genus pipelines assemble the presentations for M_3, M_4 and M_5.
"""

from eqpic import GroupPresentation, genus_pipeline, quotient_structure, smith_normal_form

D, U, V = smith_normal_form([[-36, 27], [1, -1]])
print("D =", D, " U =", U, " V =", V)

p = GroupPresentation(("c1", "s1"), ((-36, 27), (1, -1)))
print("Z<c1, s1> / <27 s1 - 36 c1, c1 - s1> =", quotient_structure(p))

for g in (3, 4, 5):
    r = genus_pipeline(g)
    extra = "".join(f", [{k}] = {v}" for k, v in r.extra_classes.items())
    print(f"genus {g}: Pic(U{g}) = {r.open_structure}, Pic(M{g}) = {r.structure}{extra}")
    for name, k in r.divisor_multiples.items():
        print(f"   [{name}] = {k} lambda1")
    for note in r.axioms:
        print("   axiom:", note.id)
    for note in r.errata:
        print("   erratum:", note.id)
