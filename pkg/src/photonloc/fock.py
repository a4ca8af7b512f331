"""Brute-force two-mode Fock-space oracle.

Builds the localized states explicitly in a truncated number basis and
measures fidelities and observables by direct linear algebra.  Everything
here is deliberately independent of the closed-form module so the two can
cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import TruncationError


@dataclass(frozen=True)
class TwoModeFockState:
    """State vector on the product basis |n1, n2> with n1, n2 < cutoff."""

    cutoff: int
    amplitudes: np.ndarray  # shape (cutoff, cutoff), indexed [n1, n2]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def flat(self) -> np.ndarray:
        return self.amplitudes.reshape(-1)


def default_cutoff(gamma: float, n: int, tol: float = 1e-12) -> int:
    """Smallest basis size keeping the discarded pair-amplitude tail below tol.

    The pair expansion decays geometrically with ratio t = tanh^2(gamma);
    the extra margin absorbs the step operator and observable weights.
    """
    t = float(np.tanh(gamma) ** 2)
    if t <= 0:
        return n + 12
    est = int(np.ceil(np.log(tol * (1.0 - t)) / np.log(t)))
    return max(n + 12, n + est + 10)


def _ladder(cutoff: int) -> np.ndarray:
    """Single-mode annihilation operator on a cutoff-dimensional space."""
    return np.diag(np.sqrt(np.arange(1, cutoff)), k=1)


def squeeze_operator(gamma: float, cutoff: int) -> np.ndarray:
    """Two-mode squeezer S = exp(gamma (a1 a2 - a1^dag a2^dag)).

    The generator is antihermitian, so the truncated exponential is exactly
    unitary; leakage only enters through amplitudes near the cutoff.
    """
    a = _ladder(cutoff)
    one = np.eye(cutoff)
    a1a2 = np.kron(a, a)
    gen = gamma * (a1a2 - a1a2.conj().T)
    return expm(gen)


def squeeze_operator_disentangled(gamma: float, cutoff: int) -> np.ndarray:
    """Same squeezer through its normal-ordered factorization.

    S = exp(-tau K+) exp(-ln(cosh gamma) K0) exp(tau K-) with
    K+ = a1^dag a2^dag, K- = a1 a2, K0 = n1 + n2 + 1, tau = tanh(gamma).
    Used as an independent cross-check of ``squeeze_operator``.
    """
    a = _ladder(cutoff)
    tau = np.tanh(gamma)
    kminus = np.kron(a, a)
    kplus = kminus.conj().T
    n1n2 = np.kron(np.diag(np.arange(cutoff)), np.eye(cutoff)) + np.kron(
        np.eye(cutoff), np.diag(np.arange(cutoff))
    )
    k0 = n1n2 + np.eye(cutoff**2)
    return expm(-tau * kplus) @ expm(-np.log(np.cosh(gamma)) * k0) @ expm(tau * kminus)


def step_operator(cutoff: int) -> np.ndarray:
    """Number-raising step on mode 1: |n1, n2> -> |n1+1, n2>.

    This is the isometric part of the polar decomposition of a1^dag (unit
    coefficients, no sqrt(n) factors); the top state is annihilated by the
    truncation.
    """
    shift = np.eye(cutoff, k=-1)
    return np.kron(shift, np.eye(cutoff))


def localized_state(gamma: float, n: int, cutoff: int | None = None) -> TwoModeFockState:
    """Strictly localized approximation of the n-photon state.

    W = S^dag (A1^dag)^n S |0, 0> where S is the two-mode squeezer and
    A1^dag the step operator on the first mode.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cutoff is None:
        cutoff = default_cutoff(gamma, n)
    if cutoff < n + 2:
        raise TruncationError("cutoff must exceed n + 1")
    S = squeeze_operator(gamma, cutoff)
    A = step_operator(cutoff)
    vac = np.zeros(cutoff**2)
    vac[0] = 1.0
    psi = S @ vac
    for _ in range(n):
        psi = A @ psi
    psi = S.conj().T @ psi
    state = TwoModeFockState(cutoff=cutoff, amplitudes=psi.reshape(cutoff, cutoff))
    if abs(state.norm - 1.0) > 1e-9:
        raise TruncationError(
            f"state norm {state.norm:.12f} deviates from 1; raise the cutoff"
        )
    return state


def fidelity_oracle(gamma: float, n: int, cutoff: int | None = None) -> float:
    """|<n, 0|W>| measured directly in the truncated basis."""
    state = localized_state(gamma, n, cutoff)
    return float(abs(state.amplitudes[n, 0]))


def observables(state: TwoModeFockState) -> dict[str, complex]:
    """Second-moment observables of a two-mode state.

    Returns N = <n1 + n2>, corr_dag[i][j] = <a_i^dag a_j>, and
    corr_pair[i][j] = <a_i a_j> as nested 2x2 lists.
    """
    c = state.cutoff
    a = _ladder(c)
    one = np.eye(c)
    ops = [np.kron(a, one), np.kron(one, a)]
    psi = state.flat()
    corr_dag = [
        [complex(np.vdot(ops[i] @ psi, ops[j] @ psi)) for j in range(2)]
        for i in range(2)
    ]
    corr_pair = [
        [complex(np.vdot(psi, ops[i] @ (ops[j] @ psi))) for j in range(2)]
        for i in range(2)
    ]
    N = corr_dag[0][0].real + corr_dag[1][1].real
    return {"N": N, "corr_dag": corr_dag, "corr_pair": corr_pair}


def esq_reconstruction(
    state: TwoModeFockState, profile1: np.ndarray, profile2: np.ndarray
) -> np.ndarray:
    """Normal-ordered <:E^2:>/sin^2(theta) from measured second moments.

    ``profile1``/``profile2`` are the scalar radial profiles multiplying the
    two annihilation operators in E(+); the vector dot product of the
    underlying fields contributes sin^2(theta) |p_i|^2 for like modes and
    -sin^2(theta) p1 p2 across them (opposite chirality), handled by passing
    the second profile with its sign flipped.
    """
    obs = observables(state)
    cd = obs["corr_dag"]
    cp = obs["corr_pair"]
    p = [np.asarray(profile1, dtype=complex), np.asarray(profile2, dtype=complex)]
    out = np.zeros(p[0].shape, dtype=float)
    for i in range(2):
        for j in range(2):
            out += 2.0 * np.real(np.conj(p[i]) * p[j] * cd[i][j])
            out -= 2.0 * np.real(p[i] * p[j] * cp[i][j])
    return out
