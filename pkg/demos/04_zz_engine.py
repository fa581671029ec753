# %% [markdown]
# # The z-z engine
#
# Thermal state at B2, ramp to B1, measure both spins along z, extract the
# ergotropy, ramp back, thermalize. The four-stroke cycle without extraction
# does no net work.

# %%
import numpy as np

from ergoengine import EngineParams, MeasurementSpec, run_five_stroke, run_four_stroke
from ergoengine.analytics import eta_r1, zz_chi
from ergoengine.ergotropy import r1_c0_interval
from ergoengine.measurement import C0_MAX

params = EngineParams(B1=3.5, B2=3.0, J=1.0, beta=1.0)
L = run_five_stroke(params, MeasurementSpec.preset("zz", 0.5))
for k, v in L.as_dict().items():
    print(f"{k:>10} = {v}")

# %% Four-stroke work vanishes
print("W4 =", run_four_stroke(params, MeasurementSpec.preset("zz", 0.5)).w_total)

# %% The active window in c0 and the efficiency inside it
print("chi =", zz_chi(3.0, 1.0, 1.0), "window =", r1_c0_interval(3.0, 1.0, 1.0))
for c0 in np.linspace(0.2, 0.68, 7):
    print(f"c0={c0:.2f}  eta={eta_r1(3.0, 1.0, 1.0, c0):.6f}")

# %% Efficiency does not depend on B1
for b1 in (3.0, 3.5, 3.9):
    print(b1, run_five_stroke(EngineParams(b1, 3.0, 1.0, 1.0), MeasurementSpec.preset("zz", 0.5)).eta)

# %% Colder reservoirs approach B2 / 4J
for beta in (1, 2, 5, 50):
    print(beta, eta_r1(3.0, 1.0, beta, 0.5))

# %% Strength scan of the total work
c0 = np.linspace(0, C0_MAX, 11)
print([round(run_five_stroke(params, MeasurementSpec.preset("zz", c)).w_total, 4) for c in c0])
