"""How many distinct self-dual lengths do the constructions reach?

For q = r^2 the lengths are n = s(r-1) + t(r+1) for admissible (s, t); distinct
pairs always give distinct n.
"""

from grsdual.construct import enumerate_lengths, expected_selfdual_count

for r in (3, 5, 7, 9, 11, 13, 149, 151):
    rows = enumerate_lengths(r * r, "selfdual")
    print(f"r={r:<4} self-dual lengths: {len(rows):>5}  (formula {expected_selfdual_count(r)})"
          f"  smallest {[w.n for w in rows[:4]]}")

print("\nalmost self-dual lengths over GF(49):", [w.n for w in enumerate_lengths(49, "almost")])
