"""Sum an infinite series exactly and prove the part you dropped away.

p^r_j(n) equals (1/2) sum_{s>=0} p^{r+s}_{j-1}(n) / 2^s. The summands
are integers over powers of two, so a partial sum is an exact rational;
the code finds a truncation index S whose tail is provably below 1/2
and rounds. Floats appear below for display only; the computation is
exact throughout.
"""

from fractions import Fraction

from rbpa import counts

R, J, N = 2, 1, 5

value, cert = counts.p_series_certified(R, J, N)
print(f"p^{R}_{J}({N}) by certified series = {value}")
print(f"truncation index S = {cert.truncation_index}")
print(f"proven tail bound    < {cert.tail_bound} "
      f"(~{float(cert.tail_bound):.2e})")
assert value == counts.p_egf(R, J, N)[N]

print()
print("partial sums closing in (with j = 1 the summands are plain powers):")
partial = Fraction(0)
for s in range(cert.truncation_index):
    partial += Fraction((R + s) ** N, 2 ** (s + 1))
    if s < 8 or s == cert.truncation_index - 1:
        print(f"  S = {s + 1:>3}: {float(partial):14.6f}")
print(f"rounds to {value}")

print()
print("the tail really is tiny: the next five terms")
for s in range(cert.truncation_index, cert.truncation_index + 5):
    term = Fraction((R + s) ** N, 2 ** (s + 1))
    print(f"  term {s}: {float(term):.3e}")
