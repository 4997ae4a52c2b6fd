"""Tour of exact arithmetic in Q(zeta_20).

The whole package computes in a single number field: the degree-8 cyclotomic
field generated by a primitive 20th root of unity.  It contains the fifth
roots of unity, the imaginary unit and sqrt(5) at once, so every coordinate
in the link calculus is representable exactly.
"""

from fractions import Fraction

from dp5links import FieldElement, I_UNIT, ONE, SQRT5, ZETA, ZETA5, galois_apply, rational

print("zeta_20 =", ZETA)
print("zeta_5  = zeta_20^4 =", ZETA5)
print("i       = zeta_20^5 =", I_UNIT)

print("\nfifth roots multiply back to one:")
print("  zeta_5 * zeta_5^4 =", ZETA5 * ZETA5 ** 4)

print("\ni^2 =", I_UNIT * I_UNIT)

print("\nsqrt(5) in the power basis:", SQRT5)
print("sqrt(5)^2 =", SQRT5 * SQRT5)

print("\nexact division: (3/7 + zeta^3) / (1 - zeta) * (1 - zeta) recovers it:")
a = rational(Fraction(3, 7)) + ZETA ** 3
b = ONE - ZETA
print("  ", (a / b) * b == a)

print("\ncomplex conjugation is the Galois map zeta -> zeta^19:")
print("  conj(i) =", galois_apply(19, I_UNIT))
u1 = [rational(0), -I_UNIT, -ONE, ONE, I_UNIT]
print("  conj of (0 : -i : -1 : 1 : i) =", [str(galois_apply(19, c)) for c in u1])

print("\nserialization is bit-exact:")
x = FieldElement([1, 2, Fraction(-3, 4), 0, 0, 5, 0, Fraction(1, 9)])
print("  ", x.serialize())
print("  round trip equal:", FieldElement.deserialize(x.serialize()) == x)
