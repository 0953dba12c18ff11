"""What the reduction certificate buys you.

The Smith normal form here comes with the unimodular transforms U and V,
so every claim is checkable after the fact: U M V = D exactly, both
determinants are units, and the divisor chain survives any unimodular
change of basis or slide move.
"""

from hlk import (
    IntMatrix,
    apply_slide,
    determinant,
    elementary_divisors,
    minor_gcd_profile,
    random_unimodular,
    smith_normal_form,
)

M = IntMatrix.from_rows([
    [6, 4, 2],
    [4, 8, 0],
    [2, 0, 10],
])

r = smith_normal_form(M)
print("M:")
for i in range(M.rows):
    print("   ", list(M.row(i)))
print("divisors:", list(r.divisors))
print("U M V == D:", r.u @ M @ r.v == r.d)
print("det U =", determinant(r.u), " det V =", determinant(r.v))

print("\nMultiplying by random unimodular matrices never moves the divisors:")
for seed in (1, 2, 3):
    u = random_unimodular(3, seed, ops=15)
    v = random_unimodular(3, seed + 100, ops=15)
    print(f"  seed {seed}: divisors of U M V = {elementary_divisors(u @ M @ v)}")

print("\nNeither do slide moves (adding one row/column to another):")
slid = apply_slide(apply_slide(M, "row", 0, 2, 1), "col", 1, 0, -1)
for i in range(slid.rows):
    print("   ", list(slid.row(i)))
print("  divisors:", elementary_divisors(slid))

print("\nIndependent cross-check: gcds of all k x k minors")
print("  minor_gcd_profile(M) =", minor_gcd_profile(M))
prods = []
acc = 1
for d in r.divisors:
    acc *= d
    prods.append(acc)
print("  prefix products of the divisors =", prods)
