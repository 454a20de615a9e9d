"""Counting divisors of Delta_n^d with the transfer matrix and checking exact formulas.

Run with ``python demos/counting_tour.py``.
"""

from __future__ import annotations

from braidorder.counting import (
    closed_form_height,
    complexity_via_matrix,
    format_table_text,
    height_via_matrix,
    table1,
    table1_mismatches,
)

# The number of divisors of Delta_n^d with a given last factor is read off
# a row vector of ones times powers of the 0/1 matrix of normal pairs.
print(format_table_text(table1(5, 5)))

compared, bad = table1_mismatches(6, 6)
print(f"reference values compared: {compared}, mismatches: {len(bad)}")

# Closed forms with irrational eigenvalues 3 +/- sqrt(6) evaluated exactly.
for d in range(6):
    exact = closed_form_height("h1_delta4", d=d)
    print(f"h_1(Delta_4^{d}) = {exact} (matrix: {height_via_matrix(4, d, 1)})")

print("c(Delta_4^4) =", complexity_via_matrix(4, 4))
