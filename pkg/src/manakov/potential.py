"""Periodic two-component potentials as finite Fourier series.

A potential is v(x) = sum_k vhat_k e^{2 pi i k x} with vhat_k in C^2 and
|k| <= k_max.  All derived functionals (motion constants, the integrated
matrix square, the beta spectrum) are evaluated from the coefficients,
with trigonometric integrals done exactly.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

TWO_PI = 2.0 * np.pi

# Index convention, fixed once for the whole package: the analytic transform
#   (F v)(n) = int_0^1 e^{2 pi i n x} v(x) dx
# evaluates to the stored coefficient at index -n.  Covered by a dedicated
# convention test; everything downstream (gap predictions, eigenvalue
# clusters) goes through fourier_at_pin.
FOURIER_INDEX_OF_PIN = -1

DEFAULT_K_MAX = 16


@dataclass(frozen=True)
class PeriodicPotential:
    """Finite Fourier representation of a 1-periodic C^2-valued potential."""

    ks: np.ndarray          # (M,) int, sorted, |k| <= k_max
    coeffs: np.ndarray      # (M, 2) complex
    k_max: int

    def __post_init__(self):
        ks = np.asarray(self.ks, dtype=int)
        coeffs = np.atleast_2d(np.asarray(self.coeffs, dtype=complex))
        if coeffs.shape != (ks.size, 2):
            raise ConfigError(f"coefficient array shape {coeffs.shape} does not match {ks.size} modes")
        if ks.size and np.max(np.abs(ks)) > self.k_max:
            raise ConfigError(f"mode index exceeds k_max={self.k_max}")
        if ks.size != np.unique(ks).size:
            raise ConfigError("duplicate mode indices")
        order = np.argsort(ks)
        ks = ks[order]
        coeffs = coeffs[order]
        ks.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_modes(cls, modes, k_max=None):
        """Build from a {k: (v1, v2)} mapping (or iterable of (k, v1, v2))."""
        if isinstance(modes, dict):
            items = sorted(modes.items())
            ks = [k for k, _ in items]
            cs = [np.asarray(c, dtype=complex) for _, c in items]
        else:
            items = sorted(modes)
            ks = [k for k, _, _ in items]
            cs = [np.array([a, b], dtype=complex) for _, a, b in items]
        ks = np.asarray(ks, dtype=int)
        cs = np.asarray(cs, dtype=complex).reshape(-1, 2)
        if k_max is None:
            k_max = int(np.max(np.abs(ks))) if ks.size else 0
        return cls(ks, cs, k_max)

    @classmethod
    def zero(cls):
        return cls(np.zeros(0, dtype=int), np.zeros((0, 2), dtype=complex), 0)

    @classmethod
    def zs(cls, u_modes, e):
        """Reduced potential v = u * e for scalar u and a constant unit vector e."""
        e = np.asarray(e, dtype=complex)
        ne = np.linalg.norm(e)
        if abs(ne - 1.0) > 1e-12:
            e = e / ne
        if isinstance(u_modes, dict):
            items = sorted(u_modes.items())
        else:
            items = sorted(u_modes)
        ks = np.asarray([k for k, _ in items], dtype=int)
        us = np.asarray([u for _, u in items], dtype=complex)
        coeffs = us[:, None] * e[None, :]
        k_max = int(np.max(np.abs(ks))) if ks.size else 0
        return cls(ks, coeffs, k_max)

    @classmethod
    def from_samples(cls, samples, k_max=DEFAULT_K_MAX):
        """Project equispaced samples of v onto |k| <= k_max modes.

        Returns (potential, residual) where residual is the l2 norm of the
        discarded high-frequency content relative to the sample norm.
        """
        samples = np.atleast_2d(np.asarray(samples, dtype=complex))
        if samples.shape[1] != 2:
            raise ConfigError("samples must have shape (N, 2)")
        n = samples.shape[0]
        spec = np.fft.fft(samples, axis=0) / n
        freqs = np.fft.fftfreq(n, d=1.0 / n).astype(int)
        keep = np.abs(freqs) <= min(k_max, (n - 1) // 2)
        ks = freqs[keep]
        cs = spec[keep]
        dropped = np.linalg.norm(spec[~keep])
        total = np.linalg.norm(spec)
        residual = float(dropped / total) if total > 0 else 0.0
        pot = cls(ks, cs, k_max)
        return pot, residual

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self):
        return self.ks.size == 0 or not np.any(self.coeffs)

    def mode(self, k):
        """Stored coefficient vhat_k (zero vector if absent)."""
        idx = np.searchsorted(self.ks, k)
        if idx < self.ks.size and self.ks[idx] == k:
            return self.coeffs[idx].copy()
        return np.zeros(2, dtype=complex)

    def __call__(self, x):
        return evaluate(self, x)


def evaluate(v, x):
    """v(x) = sum_k vhat_k e^{2 pi i k x}; x scalar or array, returns (..., 2)."""
    x = np.asarray(x, dtype=float)
    if v.ks.size == 0:
        return np.zeros(x.shape + (2,), dtype=complex)
    phases = np.exp(1j * TWO_PI * np.multiply.outer(x, v.ks.astype(float)))
    return phases @ v.coeffs


def fourier_at_pin(v, n):
    """int_0^1 e^{2 pi i n x} v(x) dx, i.e. the transform at lambda = pi n."""
    return v.mode(FOURIER_INDEX_OF_PIN * int(n))


def potential_matrix(v, x):
    """The 3x3 coefficient matrix V(x) = [[0, v*], [v, 0]] at the given x nodes."""
    x = np.asarray(x, dtype=float)
    vals = evaluate(v, x)
    out = np.zeros(x.shape + (3, 3), dtype=complex)
    out[..., 0, 1] = np.conj(vals[..., 0])
    out[..., 0, 2] = np.conj(vals[..., 1])
    out[..., 1, 0] = vals[..., 0]
    out[..., 2, 0] = vals[..., 1]
    return out


@dataclass(frozen=True)
class MotionConstants:
    """Conserved functionals of the flow: norm, momentum, Hamiltonian."""

    h0: float
    h1: float
    h2: float


@dataclass(frozen=True)
class BetaSpectrum:
    """Eigenvalues of the integrated matrix square, beta1 <= beta2 <= beta3."""

    beta1: float
    beta2: float
    beta3: float
    beta_o: float
    gamma12: complex


def squared_norm(v):
    """||v||^2 by Parseval."""
    return float(np.sum(np.abs(v.coeffs) ** 2))


def quartic_integral(v):
    """int_0^1 |v(x)|^4 dx, exact for the trigonometric polynomial |v|^2.

    |v|^2 has bandwidth 2 k_max, its square 4 k_max, so an equispaced
    rule with more than 4 k_max nodes integrates it exactly.
    """
    n_nodes = 4 * max(v.k_max, 1) + 2
    x = np.arange(n_nodes) / n_nodes
    vals = evaluate(v, x)
    dens = np.sum(np.abs(vals) ** 2, axis=-1)
    return float(np.mean(dens ** 2))


def motion_constants(v):
    """H0 = ||v||^2, H1 = -i<v', v>, H2 = (||v'||^2 + ||v||_4^4) / 2."""
    w = np.sum(np.abs(v.coeffs) ** 2, axis=1) if v.ks.size else np.zeros(0)
    h0 = float(np.sum(w))
    h1 = float(np.sum(TWO_PI * v.ks * w))
    h2 = 0.5 * (float(np.sum((TWO_PI * v.ks) ** 2 * w)) + quartic_integral(v))
    return MotionConstants(h0, h1, h2)


def v_squared_integral(v):
    """The 3x3 matrix int_0^1 V(x)^2 dx (block diagonal: ||v||^2 and the Gram block)."""
    g1 = float(np.sum(np.abs(v.coeffs[:, 0]) ** 2))
    g2 = float(np.sum(np.abs(v.coeffs[:, 1]) ** 2))
    g12 = complex(np.sum(v.coeffs[:, 0] * np.conj(v.coeffs[:, 1])))
    out = np.zeros((3, 3), dtype=complex)
    out[0, 0] = g1 + g2
    out[1, 1] = g1
    out[2, 2] = g2
    out[1, 2] = np.conj(g12)
    out[2, 1] = g12
    return out


def beta_spectrum(v):
    g1 = float(np.sum(np.abs(v.coeffs[:, 0]) ** 2))
    g2 = float(np.sum(np.abs(v.coeffs[:, 1]) ** 2))
    g12 = complex(np.sum(v.coeffs[:, 0] * np.conj(v.coeffs[:, 1])))
    h0 = g1 + g2
    beta_o = (g1 - g2) ** 2 + 4.0 * abs(g12) ** 2
    root = np.sqrt(beta_o)
    return BetaSpectrum(
        beta1=0.5 * (h0 - root),
        beta2=0.5 * (h0 + root),
        beta3=h0,
        beta_o=beta_o,
        gamma12=g12,
    )


def is_reduced_form(v, tol=1e-12):
    """True when v = u * e (all coefficient vectors parallel): the 2-sheeted family."""
    c = v.coeffs[np.any(v.coeffs != 0, axis=1)]
    if c.shape[0] <= 1:
        return True
    cross = c[:, 0, None] * c[None, :, 1] - c[:, 1, None] * c[None, :, 0]
    return bool(np.max(np.abs(cross)) <= tol * max(1.0, np.max(np.abs(c)) ** 2))
