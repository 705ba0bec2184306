"""Charge-qubit circuit parameters compiled into effective couplings.

Inputs are SI (farads, joules, kelvin, rad/s); energy outputs are
dual-rendered in joules and GHz (division by the Planck constant).
Physical constants are CODATA values taken from ``scipy.constants`` and
fixed in one table below.

Formulas implemented exactly for one capacitively coupled device pair:

    C_0 = C_g + C_J          C_t = C_0 + C_c
    Lambda = C_t^a C_t^b - C_c^2
    eps_a = 2 e^2 (C_t^b + C_c) / Lambda     (and a<->b)
    delta_eta = E_J^eta
    lambda_pair = e^2 C_c / Lambda
    E_c = e^2 / (2 C_0)      beta = C_c / C_0

For identical devices these give ``eps = 4 E_c`` exactly and the
identity ``lambda_pair * (1 + 2 beta) = 2 beta E_c``, i.e. the popular
``2 beta E_c`` shorthand is accurate only to first order in beta.

Chain couplings are first order in beta.  The printed forms carry a
dimensional slip (an energy cannot scale as e^2 C / C), so the
denominators here are normalized by ``C_0``; the normalized expressions
reduce exactly to the two-device formula when the intra-chain couplers
vanish, which is asserted in tests:

    lambda_eta = e^2 C_eta / (C_0 (C_0 + 2 (C_c + 2 C_eta)))
    lambda_c   = e^2 C_c   / (C_0 (C_0 + 2 (C_c + C_a + C_b)))

Diagnostics never alter computed values; they only report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.constants import e as _E_CODATA
from scipy.constants import h as _H_CODATA
from scipy.constants import hbar as _HBAR_CODATA
from scipy.constants import k as _KB_CODATA

from .errors import DegenerateNetworkError

ELEMENTARY_CHARGE = _E_CODATA
PLANCK = _H_CODATA
HBAR = _HBAR_CODATA
BOLTZMANN = _KB_CODATA

__all__ = [
    "DeviceParams",
    "DeviceNetwork",
    "EffectiveCouplings",
    "capacitance_determinant",
    "two_device_couplings",
    "chain_couplings",
    "charging_energy",
    "long_range_estimate",
    "long_range_warning",
    "qnd_frequencies",
    "jc_resonance",
]


@dataclass(frozen=True)
class DeviceParams:
    """One charge qubit: gate/junction capacitance, Josephson energy, bias."""

    c_g: float
    c_j: float
    e_j: float
    n_g: float = 0.5

    def __post_init__(self):
        if self.c_g <= 0 or self.c_j <= 0:
            raise ValueError("capacitances must be positive")
        if not 0.0 <= self.n_g <= 1.0:
            raise ValueError("gate charge must lie in [0, 1]")

    @property
    def c_0(self) -> float:
        return self.c_g + self.c_j


def capacitance_determinant(c_t_a: float, c_t_b: float, c_c: float) -> float:
    """``C_t^a C_t^b - C_c^2``, rejected when not positive.

    With ``C_t = C_0 + C_c`` and positive device capacitances the
    determinant is always positive; the guard protects direct uses with
    raw totals.
    """
    det = c_t_a * c_t_b - c_c ** 2
    if det <= 0:
        raise DegenerateNetworkError(
            f"capacitance determinant {det} is not positive")
    return det


@dataclass(frozen=True)
class DeviceNetwork:
    """Two coupled devices plus optional intra-chain couplers."""

    device_a: DeviceParams
    device_b: DeviceParams
    c_c: float
    c_a: float = 0.0
    c_b: float = 0.0

    def __post_init__(self):
        if self.c_c < 0 or self.c_a < 0 or self.c_b < 0:
            raise ValueError("coupling capacitances cannot be negative")
        capacitance_determinant(self.c_t_a, self.c_t_b, self.c_c)

    @property
    def c_t_a(self) -> float:
        return self.device_a.c_0 + self.c_c

    @property
    def c_t_b(self) -> float:
        return self.device_b.c_0 + self.c_c

    @property
    def lam_det(self) -> float:
        return capacitance_determinant(self.c_t_a, self.c_t_b, self.c_c)

    @property
    def is_identical(self) -> bool:
        return math.isclose(self.device_a.c_0, self.device_b.c_0,
                            rel_tol=1e-12)

    @classmethod
    def identical(cls, c_g: float, c_j: float, e_j: float, beta: float,
                  n_g: float = 0.5, c_a: float = 0.0,
                  c_b: float = 0.0) -> "DeviceNetwork":
        """Two identical devices with ``C_c = beta * C_0``."""
        dev = DeviceParams(c_g, c_j, e_j, n_g)
        return cls(dev, dev, beta * dev.c_0, c_a, c_b)


def charging_energy(c_0: float, charge: float = ELEMENTARY_CHARGE) -> float:
    """Single-pair charging energy e^2 / (2 C_0), joules."""
    if c_0 <= 0:
        raise ValueError("capacitance must be positive")
    return charge ** 2 / (2.0 * c_0)


@dataclass(frozen=True)
class EffectiveCouplings:
    """Compiled energies (joules) with a GHz rendering."""

    eps_a: float
    eps_b: float
    delta_a: float
    delta_b: float
    lam_pair: float
    e_c_a: float
    e_c_b: float
    beta_a: float
    beta_b: float
    lam_chain_a: float | None = None
    lam_chain_b: float | None = None
    lam_chain_c: float | None = None
    single_device_z: tuple[float, float] = (0.0, 0.0)
    include_single_device_terms: bool = False
    notes: tuple[str, ...] = field(default=(), compare=False)

    def in_ghz(self, value: float) -> float:
        return value / PLANCK / 1e9

    def as_model_couplings(self) -> dict[str, float]:
        """Map (chain a, chain b, on-site) onto the lattice couplings."""
        if self.lam_chain_a is None:
            raise ValueError("chain couplings were not compiled")
        return {"j_up": self.lam_chain_a, "j_down": self.lam_chain_b,
                "u": self.lam_chain_c}

    def report(self) -> dict:
        out = {
            "eps_a_J": self.eps_a, "eps_b_J": self.eps_b,
            "delta_a_J": self.delta_a, "delta_b_J": self.delta_b,
            "lambda_pair_J": self.lam_pair,
            "lambda_pair_GHz": self.in_ghz(self.lam_pair),
            "E_c_a_J": self.e_c_a, "E_c_a_GHz": self.in_ghz(self.e_c_a),
            "E_c_b_J": self.e_c_b, "E_c_b_GHz": self.in_ghz(self.e_c_b),
            "beta_a": self.beta_a, "beta_b": self.beta_b,
            "single_device_z_J": list(self.single_device_z),
            "single_device_terms_included": self.include_single_device_terms,
            "notes": list(self.notes),
        }
        if self.lam_chain_a is not None:
            out.update({
                "lambda_chain_a_J": self.lam_chain_a,
                "lambda_chain_b_J": self.lam_chain_b,
                "lambda_chain_c_J": self.lam_chain_c,
                "lambda_chain_a_GHz": self.in_ghz(self.lam_chain_a),
                "lambda_chain_b_GHz": self.in_ghz(self.lam_chain_b),
                "lambda_chain_c_GHz": self.in_ghz(self.lam_chain_c),
                "model_couplings_J": self.as_model_couplings(),
            })
        return out


def two_device_couplings(net: DeviceNetwork,
                         include_single_device_terms: bool = False,
                         charge: float = ELEMENTARY_CHARGE) -> EffectiveCouplings:
    """Exact pair couplings of two capacitively coupled charge qubits.

    Single-device Z coefficients are computed and reported but excluded
    from the lattice mapping unless explicitly re-included (they are
    assumed nulled by bias tuning).
    """
    lam_det = net.lam_det
    e2 = charge ** 2
    eps_a = 2 * e2 * (net.c_t_b + net.c_c) / lam_det
    eps_b = 2 * e2 * (net.c_t_a + net.c_c) / lam_det
    lam = e2 * net.c_c / lam_det
    sz_a = -0.5 * eps_a * (1 - 2 * net.device_a.n_g)
    sz_b = -0.5 * eps_b * (1 - 2 * net.device_b.n_g)
    notes = []
    if not include_single_device_terms:
        notes.append("single-device terms reported only (assumed nulled)")
    return EffectiveCouplings(
        eps_a=eps_a, eps_b=eps_b,
        delta_a=net.device_a.e_j, delta_b=net.device_b.e_j,
        lam_pair=lam,
        e_c_a=charging_energy(net.device_a.c_0, charge),
        e_c_b=charging_energy(net.device_b.c_0, charge),
        beta_a=net.c_c / net.device_a.c_0,
        beta_b=net.c_c / net.device_b.c_0,
        single_device_z=(sz_a, sz_b),
        include_single_device_terms=include_single_device_terms,
        notes=tuple(notes),
    )


def chain_couplings(net: DeviceNetwork,
                    charge: float = ELEMENTARY_CHARGE) -> EffectiveCouplings:
    """Chain couplings, first order in beta, for identical devices."""
    if not net.is_identical:
        raise ValueError("chain formulas assume identical devices")
    base = two_device_couplings(net, charge=charge)
    c_0 = net.device_a.c_0
    e2 = charge ** 2
    lam_a = e2 * net.c_a / (c_0 * (c_0 + 2 * (net.c_c + 2 * net.c_a)))
    lam_b = e2 * net.c_b / (c_0 * (c_0 + 2 * (net.c_c + 2 * net.c_b)))
    lam_c = e2 * net.c_c / (c_0 * (c_0 + 2 * (net.c_c + net.c_a + net.c_b)))
    notes = base.notes + ("chain couplings are first order in beta",)
    return EffectiveCouplings(
        eps_a=base.eps_a, eps_b=base.eps_b,
        delta_a=base.delta_a, delta_b=base.delta_b,
        lam_pair=base.lam_pair,
        e_c_a=base.e_c_a, e_c_b=base.e_c_b,
        beta_a=base.beta_a, beta_b=base.beta_b,
        lam_chain_a=lam_a, lam_chain_b=lam_b, lam_chain_c=lam_c,
        single_device_z=base.single_device_z,
        include_single_device_terms=base.include_single_device_terms,
        notes=notes,
    )


def long_range_estimate(i: int, j: int, beta: float) -> float:
    """Dimensionless magnitude ``beta ** |i - j|`` of the residual coupling."""
    if not 0.0 < beta < 1.0:
        raise ValueError("beta must lie strictly between 0 and 1")
    return beta ** abs(i - j)


def long_range_warning(beta: float, threshold: float = 0.01) -> dict:
    """Flag when the next-nearest coupling is not negligible.

    The nearest coupling in units of ``2 E_c`` is ``beta / (1 + 2 beta)``
    exactly; the warning triggers when the next-nearest estimate
    ``beta**2`` exceeds ``threshold`` times that scale.
    """
    nearest_rel = beta / (1.0 + 2.0 * beta)
    estimate = long_range_estimate(0, 2, beta)
    return {
        "next_nearest_estimate": estimate,
        "nearest_relative_coupling": nearest_rel,
        "threshold": threshold,
        "warn": estimate > threshold * nearest_rel,
    }


def qnd_frequencies(e_c: float, n_g: float, omega_c: float, delta: float,
                    g: float, temperature: float | None = None,
                    detuning_ratio: float = 0.1,
                    regime_ratio: float = 0.1) -> dict:
    """Drive frequencies and validity flags for the dispersive gate.

    All frequencies are angular (rad/s); ``e_c`` is in joules.  The
    transition frequencies of the three lowest charge states are
    ``omega_01 = 2 E_c (1 - 2 n_g) / hbar`` and
    ``omega_12 = 2 E_c (3 - 2 n_g) / hbar``; the drive sits at
    ``omega = omega_12 + omega_c + delta`` and the leakage detunings are
    checked against ``delta``.
    """
    if delta == 0:
        raise ZeroDivisionError("detuning delta must be nonzero")
    omega_01 = 2 * e_c * (1 - 2 * n_g) / HBAR
    omega_12 = 2 * e_c * (3 - 2 * n_g) / HBAR
    drive = omega_12 + omega_c + delta
    delta_1 = drive - omega_01
    delta_2 = omega_01 + omega_12 - drive
    chi = g ** 2 / (2 * delta)
    tau = math.pi / (2 * chi)
    small = (abs(delta / delta_1) <= detuning_ratio if delta_1 != 0 else False) \
        and (abs(delta / delta_2) <= detuning_ratio if delta_2 != 0 else False)
    out = {
        "omega_01": omega_01,
        "omega_12": omega_12,
        "drive_omega": drive,
        "delta_1": delta_1,
        "delta_2": delta_2,
        "chi": chi,
        "tau": tau,
        "small_detuning_ok": bool(small),
        "negative_frequency_flag": bool(min(omega_01, omega_12, drive) < 0),
    }
    if temperature is not None:
        out["regime_ok"] = bool(BOLTZMANN * temperature <= regime_ratio * e_c)
        out["k_b_T_over_E_c"] = BOLTZMANN * temperature / e_c
    return out


def jc_resonance(e_c: float, n_g: float, omega_c: float) -> dict:
    """Resonant drive frequency for the ancilla swap.

    ``omega = omega_c + omega_01``; the ancilla must sit away from the
    degeneracy point for the qubit transition to be nonzero.
    """
    omega_01 = 2 * e_c * (1 - 2 * n_g) / HBAR
    return {
        "omega_01": omega_01,
        "drive_omega": omega_c + omega_01,
        "at_degeneracy_point": math.isclose(n_g, 0.5, abs_tol=1e-12),
    }
