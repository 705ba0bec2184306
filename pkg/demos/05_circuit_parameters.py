# From capacitances to model couplings and protocol frequencies.
#
# Two chains of capacitively coupled charge qubits realize the two
# fermion species; the compiled (chain a, chain b, on-site) coupling
# triple maps onto the lattice model couplings.  The exact pair
# coupling obeys lambda (1 + 2 beta) = 2 beta E_c, so the 2 beta E_c
# shorthand is first-order accurate only.

from semionlab import (
    DeviceNetwork,
    DeviceParams,
    chain_couplings,
    charging_energy,
    jc_resonance,
    long_range_warning,
    qnd_frequencies,
    two_device_couplings,
)
from semionlab.circuit import PLANCK

aF = 1e-18
dev = DeviceParams(c_g=300 * aF, c_j=300 * aF, e_j=3.3e-24, n_g=0.5)
print(f"C_0 = {dev.c_0 / aF:.0f} aF  ->  "
      f"E_c/h = {charging_energy(dev.c_0) / PLANCK / 1e9:.2f} GHz")
print()

for beta in (0.01, 0.05, 0.1):
    net = DeviceNetwork(dev, dev, beta * dev.c_0)
    c = two_device_couplings(net)
    ratio = c.lam_pair / (2 * beta * c.e_c_a)
    print(f"beta={beta:5.2f}: lambda/h = {c.in_ghz(c.lam_pair):7.4f} GHz, "
          f"lambda/(2 beta E_c) = {ratio:.4f} = 1/(1+2 beta)")
print()

# A full network with intra-chain couplers compiles to the model triple.
net = DeviceNetwork(dev, dev, c_c=30 * aF, c_a=25 * aF, c_b=20 * aF)
c = chain_couplings(net)
print("chain couplings (GHz):",
      {k: round(c.in_ghz(v), 4) for k, v in c.as_model_couplings().items()})
print("residual long-range coupling:", long_range_warning(c.beta_a))
print()

# Protocol frequencies for the dispersive gate and the resonant swap.
e_c = charging_energy(dev.c_0)
freqs = qnd_frequencies(e_c, n_g=0.3, omega_c=2 * 3.14159e9 * 5,
                        delta=2 * 3.14159e8, g=2 * 3.14159e8 * 0.5,
                        temperature=0.03)
for key in ("omega_01", "omega_12", "drive_omega", "delta_1", "delta_2",
            "chi", "tau"):
    print(f"  {key:12s} = {freqs[key]:.4e}")
print("  small detuning ok:", freqs["small_detuning_ok"],
      "| temperature regime ok:", freqs["regime_ok"])
print("ancilla swap drive:", jc_resonance(e_c, 0.3, 2 * 3.14159e9 * 5))
