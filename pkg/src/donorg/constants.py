"""Physical constants used throughout, pinned in one place.

Energies are in eV, lengths in nm, magnetic fields in tesla and electric
fields in V/um everywhere in this package.
"""

# Bohr magneton [eV/T] (CODATA)
MU_B = 5.7883818012e-5

# Coulomb constant e^2 / (4 pi eps0) [eV nm] (CODATA)
COULOMB_EV_NM = 1.43996

# hbar^2 / (2 m0) [eV nm^2] (CODATA)
HBAR2_OVER_2M0 = 0.0380998212

# m0 / hbar^2 [1 / (eV nm^2)], prefactor of the envelope angular momentum
# L/hbar = (m0/hbar^2) (r x v) with r in nm and [H, r] in eV nm.
M0_OVER_HBAR2 = 1.0 / (2.0 * HBAR2_OVER_2M0)

# 1 V/um * 1 nm = 1e-3 eV potential drop per unit charge
EV_PER_VUM_NM = 1.0e-3
