"""The poly-Bernoulli numbers at negative upper indices, three ways.

At upper index (-j_1, ..., -j_b) the numbers collapse to a finite
weighted power sum: B_n = sum_s mu_s (s+b)^n with integer weights mu_s
that depend only on the index. The weights come out of a short
recursion; a completely independent route sums over increasing integer
chains. Both are checked against each other and against closed forms.
"""

from rbpa import bernoulli

print("weights mu for a few indices (index -> mu_0..mu_w):")
for idx in [(1,), (2,), (1, 1), (2, 1), (1, 2), (2, 0, 0)]:
    table = bernoulli.mu_table(idx)
    shown = tuple(-e for e in idx)
    print(f"  {shown}: {list(table.coefficients)}")

print()
print("B at index (-2,): closed form 2*3^n - 2^n")
for n in range(8):
    via_mu = bernoulli.multi_poly_bernoulli((2,), n)
    via_chains = bernoulli.multi_poly_bernoulli_li_oracle((2,), n)
    closed = 2 * 3 ** n - 2 ** n
    assert via_mu == via_chains == closed
    print(f"  n = {n}: {via_mu}")

print()
print("padding with zeros shifts the closed form: index (-2, 0^b)")
for b in range(4):
    idx = (2,) + (0,) * b
    row = [bernoulli.multi_poly_bernoulli(idx, n) for n in range(6)]
    assert row == [bernoulli.w_family(3 + b, n) for n in range(6)]
    print(f"  b = {b}: {row}  (= 2*{3 + b}^n - {2 + b}^n)")

print()
print("single positive upper index leaves the integers; exact rationals:")
for n in range(5):
    print(f"  B^(2)_{n} = {bernoulli.poly_bernoulli(2, n)}")

print()
print("the convolution splitting of (-j, 0^{b-1}) against the all-zero")
print("index holds on a grid:", all(
    bernoulli.corollary_convolution_check(j, b, n)
    for j in range(4)
    for b in range(1, 4)
    for n in range(8)
))
