"""Group orbits on the two surfaces, computed from stabilizer fixed loci.

The order-20 group acts by coordinate permutation.  An orbit of length r has
a stabilizer of order 20/r, and its points are simultaneous eigenvectors of
that stabilizer, so a complete census below a length bound reduces to exact
eigenspace computations.
"""

from dp5links import (
    clebsch_surface,
    fixed_locus,
    orbit_and_stabilizer,
    orbit_census,
    quadric_surface,
    standard_groups,
)

groups = standard_groups()
g20 = groups["G20"]
print("group generated by (12345) and (2354), order", g20.order())

print("\nfixed points of the order-4 subgroup, restricted to sum x_i = 0:")
for comp in fixed_locus(groups["C4"]):
    print("  scalars per generator:", [str(s) for s in comp.character],
          "point:", comp.point())

print("\nthe dihedral subgroup of order 10 has no fixed points:")
print("  components:", fixed_locus(groups["D10"]))

clebsch = clebsch_surface()
census = orbit_census(clebsch, g20, 8)
print("\norbit census on the cubic, lengths < 8:")
for r, orbits in sorted(census.orbits_by_length.items()):
    print(f"  length {r}: {len(orbits)} orbit(s)")
    for orbit in orbits:
        print("    ", ", ".join(str(p) for p in orbit[:2]), "...")

quadric = quadric_surface()
census_q = orbit_census(quadric, g20, 8)
print("\norbit census on the quadric, lengths < 8:")
for r, orbits in sorted(census_q.orbits_by_length.items()):
    print(f"  length {r}: {len(orbits)} orbit(s)")

print("\norbit-stabilizer identity on a generic point:")
orbit, stab = orbit_and_stabilizer(g20, census.orbits_by_length[5][0][0])
print(f"  |orbit| * |stabilizer| = {len(orbit)} * {stab.order()} = "
      f"{len(orbit) * stab.order()}")
