"""The shared counting sequence and its bivariate refinements.

The closed form, the two functional equations solved as exact truncated
series, and their agreement with exhaustive contact histograms.
"""

from tamarimaps import (
    closed_form,
    enumerate_sync_intervals,
    solve_interval_equation,
    solve_map_equation,
)

print("closed form      :", [closed_form(n) for n in range(8)])

ORDER = 8
F = solve_interval_equation(ORDER)
M = solve_map_equation(ORDER)
print("equations agree  :", F.rows == M.rows)
print("row sums         :", F.at_x_one())
print()

print("coefficient triangle (row n, column k = number of objects with statistic k):")
print(F.to_tsv())

n = 4
histogram = {}
for I in enumerate_sync_intervals(n):
    k = I.lower.contacts() - 1
    histogram[k] = histogram.get(k, 0) + 1
print("contact histogram at size %d from enumeration: %s" % (n, sorted(histogram.items())))
print("matches row %d of the triangle: %s" % (n, [histogram.get(k, 0) for k in range(n + 1)] == F.row(n) + [0] * (n + 1 - len(F.row(n)))))
