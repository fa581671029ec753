# %% [markdown]
# # Figure tables and sweeps
#
# Each figure preset produces a table whose first column is the swept
# variable. The same data are available from the command line:
#
#     ergoengine figure fig3 --out fig3.csv
#     ergoengine sweep --config scan.cfg --out scan.csv

# %%
import numpy as np

from ergoengine.figures import PRESETS, describe_preset, figure_table
from ergoengine.sweep import parse_config, run_sweep
from ergoengine.tables import to_csv

print(sorted(PRESETS))
print(describe_preset("fig3"))

# %% Efficiency vs c0 at four temperatures (NaN outside the R1 window)
header, rows = figure_table("fig3", num=15)
print(to_csv(header, rows))

# %% Efficiency decays with coupling strength
header, rows = figure_table("fig4", num=8)
for r in rows:
    print(np.round(r, 4))

# %% A small config-driven sweep
cfg = parse_config(
    """
    meas = zz
    c0 = linspace(0, 0.7071067811865476, 9)
    B1 = 3.5
    B2 = 3
    J = 1
    beta = 1
    """
)
header, rows, skipped = run_sweep(cfg)
for r in rows:
    print(round(r[0], 3), r[header.index("ordering")], round(r[header.index("w_total")], 5))
