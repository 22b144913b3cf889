"""Torelli words, the homology spheres they glue up, and d-invariant bounds."""
from torelli_calc import (assemble, d_manifold, casson_manifold, generator_defect_bound,
                          homology_order, parse_word, realized_manifold, render_word,
                          word_bound)
from torelli_calc.torelli import letter_cap, norm_lower_bound_from_d, word_norm

# separating twists on genus m curves, realized by knots of genus <= m
w = parse_word("sep(1; T(2,3))^-1 * sep(2; T(2,5))^-1")
print("word:", render_word(w), " genus", w.genus, " norm", word_norm(w))
p = assemble(w, split=True)
print("presentation has %d components, |H_1| = %d" % (len(p), homology_order(p)))
y = realized_manifold(w, split=True)
print("manifold:", y, " lambda =", casson_manifold(y), " d =", d_manifold(y))

# each letter moves d by at most 2 ceil(m/2)
for gen, _ in w.letters:
    print("letter genus %d: |d change| <= %d" % (gen.m, generator_defect_bound(gen).bound))
print("word bound:", word_bound(w, [g for g, _ in w.letters]))

# bounding pair maps realized by a cable pair of a knot reduce away entirely
bp = parse_word("bp(1; cable(T(2,3)), 2)^3 * sep(1; T(2,3))^-1")
print(render_word(bp), "->", realized_manifold(bp))

# reading a lower bound on word length off d
for genus in (2, 5, 7):
    print("genus %d: cap %d per letter, d = -100 forces length >= %d"
          % (genus, letter_cap(genus), norm_lower_bound_from_d(-100, genus)))
