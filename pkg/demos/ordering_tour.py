"""A walk through normal forms, the ordering, and the chain Div(Delta_3^2).

Run with ``python demos/ordering_tour.py``.
"""

from __future__ import annotations

from braidorder import compare, divisors, height, normal_form, ordered_enumeration, parse_word, quotient_sequence
from braidorder.garside import delta_power_word

# Normal forms: a positive word is cut into a left-greedy sequence of simple braids.
for text in ("abab", "bab", "aabb"):
    print(f"NF({text}) = {normal_form(parse_word(text, 3)).render()}")

# The ordering: x < y iff x^-1 y has a representative in which the main generator
# only occurs positively.
print("ba vs ab:", compare(parse_word("ba", 3), parse_word("ab", 3)))
print("aba vs bab:", compare(parse_word("aba", 3), parse_word("bab", 3)))

# Div(Delta_3^2) is a finite chain for that order.
z = normal_form(delta_power_word(3, 2))
enum_ = ordered_enumeration(z)
print(f"#Div(Delta_3^2) = {len(divisors(z))}")
print("increasing enumeration:", ", ".join(x.render() for x in enum_.entries))
print("jump heights:          ", " ".join(str(j) for j in enum_.jumps))
print("quotients:             ", " ".join(quotient_sequence(z).rendered()))
print("heights h_1, h_2, h_3: ", [height(z, r=r) for r in (1, 2, 3)])
