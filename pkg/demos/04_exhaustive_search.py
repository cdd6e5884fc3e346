"""
Exhaustive minimal-height search
================================

Run over every primitive pair Q < P < bound, keep the lowest height per N,
and compare against the published first rows.
"""
import time
from pathlib import Path

from congruent import SearchConfig, build_min_height_table, diff_tables
from congruent.table_io import read_table

rows = read_table(Path(__file__).parents[1] / "tests" / "data" / "first_rows.csv")

t0 = time.perf_counter()
table = build_min_height_table(SearchConfig(bound=2000))
print(f"{len(table)} congruent numbers in {time.perf_counter() - t0:.1f}s")

for r in rows:
    if r.P < 2000:
        print(r.n, "published", r.height, "search", table[r.n].height)

# 330 has a lower-height triangle than the older table's 60
print(table[330])

# compare the published rows with what the search found
searched = [table[r.n] for r in rows if r.n in table]
print(diff_tables(rows, searched))
