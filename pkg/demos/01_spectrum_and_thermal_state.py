# %% [markdown]
# # Two coupled qubits: spectrum and thermal state
#
# The working medium is a pair of spins in a field B with isotropic exchange J.
# For 0 < B < 4J the levels are ordered as (-6J, 2J-2B, 2J, 2J+2B) and the
# eigenvectors (singlet, |11>, triplet zero, |00>) do not depend on B.

# %%
import numpy as np

from ergoengine import analytic_spectrum, eig_hermitian, gibbs_state, hamiltonian

B, J, beta = 3.0, 1.0, 1.0
H = hamiltonian(B, J)
print(np.real_if_close(H))

# %% Numerical diagonalization agrees with the closed form
num = eig_hermitian(H)
ana = analytic_spectrum(B, J)
print("numeric :", num.energies)
print("analytic:", ana.energies)

# %% Thermal populations, ground state first
rho, p = gibbs_state(H, beta)
print("p =", p)
print("trace =", np.trace(rho).real)

# %% Colder reservoirs pile everything into the singlet
for b in (0.5, 1, 2, 5, 50):
    print(b, np.round(gibbs_state(H, b)[1], 6))
