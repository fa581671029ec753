# %% [markdown]
# # Non-selective spin measurements
#
# Each spin is measured along a direction n with Kraus operators
# c0 I +/- c1 sigma.n. c0 = 0 and c0 = 1/sqrt(2) leave the state unchanged
# (up to a flip), c0 = 1/2 is projective.

# %%
import numpy as np

from ergoengine import MeasurementSpec, build_kraus, channel_post_probs, kraus_completeness_error
from ergoengine.measurement import C0_MAX, xx_post_probs, zz_post_probs
from ergoengine.model import analytic_spectrum
from ergoengine.core import boltzmann, energy_basis_coherence

p = boltzmann(analytic_spectrum(3.0, 1.0).energies, 1.0)

# %% The four operators of a z-z measurement form a complete set
spec = MeasurementSpec.preset("zz", 0.3)
print("completeness error:", kraus_completeness_error(build_kraus(spec).operators))

# %% Closed forms vs the dense channel across the strength range
for c0 in np.linspace(0, C0_MAX, 6):
    zz = MeasurementSpec.preset("zz", c0)
    xx = MeasurementSpec.preset("xx", c0)
    print(
        f"c0={c0:.3f}",
        np.abs(zz_post_probs(p, c0) - channel_post_probs(p, zz)).max(),
        np.abs(xx_post_probs(p, c0) - channel_post_probs(p, xx)).max(),
    )

# %% Projective measurements along different axes
for name in ("zz", "xx", "xz", "xy"):
    print(name, np.round(channel_post_probs(p, MeasurementSpec.preset(name, 0.5)), 6))

# %% x-x measurements also leave coherences between energy levels
_, rho = channel_post_probs(p, MeasurementSpec.preset("xx", 0.5), return_state=True)
print("x-x coherence:", energy_basis_coherence(rho, analytic_spectrum(3.5, 1.0)))
