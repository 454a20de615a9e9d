"""The explicit increasing enumeration of Div(Delta_3^d) and Burckel normal words.

Run with ``python demos/pascal_tour.py``.
"""

from __future__ import annotations

from braidorder.garside import delta_power_word
from braidorder.pascal3 import burckel_code, burckel_representative, s_sequence, verify_pascal, w_sequence
from braidorder.words import render

for d in range(3):
    seq = s_sequence(3, d)
    print(f"S_3^{d} ({len(seq)} entries):", " ".join(seq.rendered()))
    print("   quotients:", " ".join(render(q) for q in w_sequence(3, d)) or "(none)")

report = verify_pascal(4)
print(f"S_3^4: {report.length} entries")
for line in report.lines():
    print("  ", line)

word = burckel_representative(delta_power_word(3, 4))
print("Burckel form of Delta_3^4:", render(word), "code", burckel_code(word))
