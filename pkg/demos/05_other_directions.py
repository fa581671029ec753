# %% [markdown]
# # Measuring along other axes
#
# Measurements that do not commute with the Hamiltonian feed energy in even
# without the extraction stroke, and five-stroke work splits into four- and
# three-stroke pieces for any measurement direction.

# %%
import math

import numpy as np

from ergoengine import EngineParams, MeasurementSpec, run_five_stroke, run_four_stroke, run_three_stroke, verify_work_identity
from ergoengine.sweep import build_inputs, random_point

params = EngineParams(B1=3.5, B2=3.0, J=1.0, beta=1.0)

# %% Work per cycle type for each preset, projective case
for name in ("zz", "xx", "xz", "xy"):
    spec = MeasurementSpec.preset(name, 0.5)
    w5 = run_five_stroke(params, spec).w_total
    w4 = run_four_stroke(params, spec).w_total
    w3 = run_three_stroke(params, spec).w_total
    print(f"{name}: W5={w5:.6f} W4={w4:.6f} W3={w3:.6f} residual={abs(w5 - w4 - w3):.1e}")

# %% Weak x-x measurements can beat the projective one
for c0 in (0.1, 0.3, 0.5):
    print(c0, run_five_stroke(EngineParams(3.5, 3.0, 0.9, 1.0), MeasurementSpec.preset("xx", c0)).eta)

# %% Arbitrary directions
spec = MeasurementSpec(0.4, (math.pi / 3, 0.2), (2 * math.pi / 3, 1.1))
L = run_five_stroke(params, spec)
print(L.ordering.tag, L.w_total, L.coherence)

# %% Identity on random instances
rng = np.random.default_rng(1)
print(max(verify_work_identity(*build_inputs(random_point(rng))).residual for _ in range(500)))
