# %% [markdown]
# # Ergotropy of diagonal states
#
# For a state diagonal in the energy basis the best cyclic unitary sorts the
# populations in decreasing order against increasing energies. The result is
# checked against an exhaustive search over all 24 permutations.

# %%
import numpy as np

from ergoengine import brute_force_ergotropy, ergotropy_extract, is_active
from ergoengine.measurement import zz_post_probs
from ergoengine.model import analytic_spectrum
from ergoengine.core import boltzmann

spec = analytic_spectrum(3.5, 1.0)
rng = np.random.default_rng(0)

# %% Random populations
for _ in range(5):
    p = rng.dirichlet(np.ones(4))
    w, p_passive, cls = ergotropy_extract(p, spec)
    print(cls.tag, cls.permutation, -w, brute_force_ergotropy(p, spec.energies))

# %% Thermal states are passive
p_th = boltzmann(analytic_spectrum(3.0, 1.0).energies, 1.0)
print("active:", is_active(p_th, spec), "ergotropy:", ergotropy_extract(p_th, spec)[0])

# %% A projective z-z measurement swaps the order of the two middle levels
p_pm = zz_post_probs(p_th, 0.5)
w, p_passive, cls = ergotropy_extract(p_pm, spec)
print(cls.tag, "W_erg =", w)
print("before:", np.round(p_pm, 5))
print("after :", np.round(p_passive, 5))
