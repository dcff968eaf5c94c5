"""SO(4): the order-4 block matrix, exact eigenvectors, characters, and the
first repeated eigenvalue.

The basis {p_0} + {p_1^l p_2^m : 0 < l+2m <= k} makes the restricted
operator upper block triangular with small diagonal blocks.  The spins
(j1, j2) label the irreducible characters; the eigenvalue is
-(j1(j1+1) + j2(j2+1)) and labels with equal eigenvalue collide for the
first time at -12 inside the order-6 flag.
"""

from fractions import Fraction

from sonlap import (
    SO4,
    build_matrix,
    character_so4,
    eigenspace_exact,
    eigenvalues_exact,
    match_characters,
    matrix_to_latex,
    matrix_to_pretty,
)

matrix = build_matrix(SO4, "so4", 4)
print("Order-4 matrix")
print(matrix_to_pretty(matrix))

print("Same matrix as LaTeX source")
print(matrix_to_latex(matrix))

print("Spectrum with spin labels (k1, k2) and eigenvectors")
for entry in eigenvalues_exact(matrix):
    vectors = eigenspace_exact(matrix, entry.eigenvalue)
    print(f"  {str(entry.eigenvalue):>6}  labels {entry.labels}  eigenvector {vectors[0]}")

print()
print("Characters up to spin 2")
for j1, j2 in [(0, 0), (Fraction(1, 2), Fraction(1, 2)), (1, 0), (1, 1),
               (Fraction(3, 2), Fraction(1, 2)), (Fraction(3, 2), Fraction(3, 2)),
               (2, 0), (2, 1), (2, 2)]:
    chi = character_so4(j1, j2)
    print(f"  chi_({j1},{j2}): eigenvalue {chi.eigenvalue}: {chi.poly.pretty()}")

print()
print("First eigenvalue collision, inside the order-6 flag")
big = build_matrix(SO4, "so4", 6)
space = eigenspace_exact(big, Fraction(-12))
print(f"  dim ker(M + 12 I) = {len(space)}")
for entry, chi in match_characters(big):
    if entry.eigenvalue == Fraction(-12):
        print(f"  found chi with labels {chi.label} inside the eigenspace")
