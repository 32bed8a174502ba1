"""
Where the piecewise k-path correction term stops working
========================================================

D(P^k_n) peels the last vertex u, which leaves a correction p_u: the
dominating sets of P^k_n - u avoiding N(u).  Two short closed forms are
known for it.  This script checks them against restricted enumeration
and then runs the full method grid, literal variants included.
"""

from domipoly import checks
from domipoly.families import k_path
from domipoly.oracle import restricted_count_pu
from domipoly.recurrences import kpath_pu_printed

print(" k   n   closed form == enumeration")
for k in range(1, 6):
    row = []
    for n in range(k + 2, 2 * k + 7):
        closed = kpath_pu_printed(k, n)
        exact = restricted_count_pu(k_path(k, n), n - 1)
        row.append("." if closed == exact else "X")
    print(f"{k:2d}  {k + 2:2d}..{2 * k + 6:<2d} {''.join(row)}")

# The second branch x((1+x)**(n-k-2) - (1+x)**(n-2k-3)) holds up to n = 3k+3,
# so for k <= 2 it breaks before the end of its claimed range.
k, n = 1, 7
print("\nk=1, n=7 closed:", kpath_pu_printed(k, n))
print("k=1, n=7 exact: ", restricted_count_pu(k_path(k, n), n - 1))

# Grid run with the literal transcriptions switched on
reports = checks.run_grid(3, 12, include_printed=True, scalars=False)
findings = [r for r in reports if not r.ok]
print("\n" + checks.summary_line(reports, 3, 12))
for r in findings[:5]:
    print(r.to_json())
by_method = {}
for r in findings:
    by_method[r.a] = by_method.get(r.a, 0) + 1
print("findings per literal method:", by_method)
