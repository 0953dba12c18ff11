"""The built-in property suite, driven from a single seed.

Every trial draws a random matrix and checks the whole contract: SNF
exactness, invariance of the divisors under unimodular multiplication,
transposition and slides, the minor-gcd oracle, and the quotient-group
round trip.  The same (trials, seed) pair replays identically anywhere,
because all randomness comes from one splitmix64 stream.
"""

from hlk import SplitMix64, run_selftest

print("Two draws from the same seed agree:")
a = SplitMix64(42)
b = SplitMix64(42)
print("  ", [a.next_u64() for _ in range(3)])
print("  ", [b.next_u64() for _ in range(3)])

print("\n500 trials, seed 7:")
failures = run_selftest(500, 7)
print("failing trials:", failures)

print("\nThe CLI equivalent:  hlk selftest --trials 500 --seed 7")
