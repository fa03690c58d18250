"""Rectangular Dyck paths: words, areas, risers, parking functions."""

from ehall.rectcomb import (
    area,
    descent_comp,
    enumerate_paths,
    parking,
    path_enumerator,
    riser_comp,
    staircase,
)
from ehall.symfun import to_latex

m, n = 5, 4
print(f"({m},{n})-Dyck paths (word, area, riser composition):")
for p in enumerate_paths(m, n):
    word = "".join(map(str, p.word))
    print(f"  {word}  area={area(p)}  rho={riser_comp(p)}")
print()
print("staircase words delta_(m,4):")
print(" ", {mm: "".join(map(str, staircase(mm, 4).word)) for mm in range(1, 13)})
print()
print(f"area/riser enumerator of ({m},{n}):")
print(" ", to_latex(path_enumerator(m, n)))
print()
p = enumerate_paths(3, 3)[1]
print(f"parking functions on the (3,3) path {p.word} and their descent compositions:")
for pf in parking(p):
    print(f"  labels={pf.labels}  word={pf.word()}  comp={descent_comp(pf)}")
