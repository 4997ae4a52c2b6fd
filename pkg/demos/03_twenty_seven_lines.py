"""The 27 lines of the diagonal cubic by residuation closure.

Fifteen lines have closed-form equations x_a + x_b = x_c + x_d = 0.  Two more
join opposite points of the length-4 orbit.  Every further line is the third
component of a plane section through two known meeting lines, an exact
polynomial division.  The invariant skew families of the result are the two
extremal contractions of the surface.
"""

from dp5links import (
    clebsch_surface,
    invariant_skew_families,
    lines27,
    standard_groups,
)
from dp5links.census import line_orbits

clebsch = clebsch_surface()
cfg = lines27(clebsch)
print("lines found:", len(cfg.lines))
print("provenance: ",
      {tag: cfg.tags.count(tag) for tag in ("coordinate", "pair-line", "residuation")})
print("every line meets", sum(cfg.incidence[0]), "others")

print("\nthe five contraction lines:")
for k in range(1, 6):
    lab = f"L{k}"
    line = cfg.by_label(lab)
    print(f"  {lab}: reduced echelon basis {line.basis[0]} / {line.basis[1]}")

g20 = standard_groups()["G20"]
orbits = line_orbits(cfg, g20)
print("\nline orbit sizes under the group:", sorted(len(o) for o in orbits))

print("\ninvariant skew families (g-stable sets of pairwise disjoint lines):")
for fam in invariant_skew_families(cfg, g20):
    flag = "maximal" if fam.maximal else "       "
    print(f"  {flag}  size {fam.size()}: {', '.join(fam.labels)}")
