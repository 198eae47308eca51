"""Count arrangements of a labeled set into sections, five ways.

An arrangement places {1..n} into r restricted sections (at most one
block each) and j free sections (any ordered set partition). The count
p^r_j(n) comes out of a generating function, two recurrences, a double
sum, and, for small n, literal enumeration. They had better agree.
"""

from rbpa import counts, oracle

R, J = 2, 1
N = 6

print(f"p^{R}_{J}(n): {R} restricted + {J} free sections")
print(f"{'n':>3} {'egf':>8} {'recur':>8} {'shift':>8} {'dblsum':>8} {'oracle':>8}")
row = counts.p_egf(R, J, N).values
for n in range(N + 1):
    values = [
        row[n],
        counts.p_recurrence(R, J, n),
        counts.p_binomial_shift(R, J, n),
        counts.p_double_sum(R, J, n),
        oracle.enumerate_rbpa(n, R, J),
    ]
    assert len(set(values)) == 1
    print(f"{n:>3} " + " ".join(f"{v:>8}" for v in values))

print()
print("every arrangement of {1,2} over one restricted + one free section:")
for structure in oracle.iter_rbpa(2, ("restricted", "free")):
    # block order inside a free section is significant, so keep it
    rendered = [
        "[" + " | ".join("".join(map(str, sorted(b))) for b in section) + "]"
        for section in structure
    ]
    print("   ", "  ".join(rendered))

print()
print("r = 0, j = 1 is the plain preferential arrangement (Fubini) row:")
print("   ", list(counts.p_egf(0, 1, 8).values))
