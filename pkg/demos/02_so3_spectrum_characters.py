"""SO(3): triangular flag matrices, the exact spectrum, and characters.

On SO(3) the flag space of order k has the two bases
{p_0, p_1, p_1^2, ..., p_1^k} and {p_0, p_1, ..., p_k}; the restricted
operator is upper triangular in both, so the eigenvalues -k(k+1)/2 can be
read off the diagonal.  The irreducible characters come out as explicit
trace polynomials and are located inside the computed eigenspaces.
"""

from sonlap import (
    SO3,
    build_matrix,
    character_so3,
    eigenvalues_exact,
    match_characters,
    matrix_to_pretty,
    spectrum_closed,
)

K = 5

print(f"Power-basis matrix at k={K}")
print(matrix_to_pretty(build_matrix(SO3, "bprime", K)))

print(f"Trace-basis matrix at k={K}")
trace_matrix = build_matrix(SO3, "btrace", K)
print(matrix_to_pretty(trace_matrix))

print("Exact spectrum from the diagonal blocks")
for entry in eigenvalues_exact(trace_matrix):
    print(f"  {entry.eigenvalue}  (k={entry.labels[0]}, multiplicity {entry.geometric_multiplicity})")

print()
print("Closed form -k(k+1)/2 for comparison:",
      [str(e.eigenvalue) for e in spectrum_closed("so3", K)])

print()
print("Characters in both forms")
for k in range(K + 1):
    chi = character_so3(k)
    print(f"  chi_{k}: eigenvalue {chi.eigenvalue}")
    print(f"    trace form : {chi.alt.pretty()}")
    print(f"    power form : {chi.poly.pretty()}")

pairs = match_characters(trace_matrix)
print()
print(f"All {len(pairs)} characters found inside their eigenspaces.")
