"""
Plotting log10(height)
======================

Writes n and log10(height) for a table and draws them if matplotlib is
available.
"""
from congruent import SearchConfig, build_min_height_table, emit_plot_data

table = build_min_height_table(SearchConfig(bound=3000, n_max=1000))
records = [table[n] for n in sorted(table)]
tsv = emit_plot_data(records)
print(tsv[:200])

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    pts = [line.split("\t") for line in tsv.splitlines()]
    plt.scatter([int(n) for n, _ in pts], [float(h) for _, h in pts], s=2)
    plt.xlabel("n")
    plt.ylabel("log10 height")
    plt.savefig("heights.png", dpi=120)
    print("wrote heights.png")
