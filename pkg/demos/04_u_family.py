"""U numbers: the same family seen through one extra 1/e^m factor.

U_n at a non-positive upper index is the alternating binomial shift of
the B values, equivalently the mu-weighted power sum with every base
lowered by one. A third, very different route goes through Stirling
numbers of the second kind and chain sums over increasing tuples; it
also extends to positive indices, where the values stop being integers.
"""

from rbpa import bernoulli

print("three routes to U at index (-2, 0):")
print(f"{'n':>3} {'shift':>10} {'mu':>10} {'chains':>10}")
for n in range(8):
    a = bernoulli.u_via_shift((2, 0), n)
    b = bernoulli.u_from_mu((2, 0), n)
    c = bernoulli.u_number((2, 0), n)
    assert a == b == c
    print(f"{n:>3} {a:>10} {b:>10} {c:>10}")

print()
print("constant terms are chain weights, not 1:")
for idx in [(2,), (1, 1), (1, 2), (2, 1, 1)]:
    shown = tuple(-e for e in idx)
    print(f"  U at {shown}: U_0 = {bernoulli.u_number(idx, 0)}")

print()
print("positive indices leave the integers:")
for n in range(5):
    print(f"  U^(1)_{n} = {bernoulli.u_stirling_sum((1,), n)}")

print()
print("last digits of U at (-2,) repeat with period four from n = 1:")
vals = [bernoulli.u_number((2,), n) for n in range(14)]
print("  values:", vals)
print("  digits:", [v % 10 for v in vals[1:]])
