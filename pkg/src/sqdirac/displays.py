"""Transcriptions of the closed-form matrices printed in the reference text.

These are claims under test, never constructors. Each function takes a
mode (anything with ``k1, k2, k, M, epsilon, p`` attributes) and returns
the printed matrix or vector, copied symbol for symbol, including any
typesetting defects. The library derives every object independently and
the paper-check report compares the two.
"""

from __future__ import annotations

import numpy as np

_i = 1j

# Majorana-basis gammas as printed, rows top to bottom
MAJORANA_GAMMAS = (
    np.array([[0, -_i, 0, 0], [_i, 0, 0, 0], [0, 0, 0, _i], [0, 0, -_i, 0]]),
    np.diag([-_i, _i, -_i, _i]),
    np.array([[0, 0, 0, _i], [0, 0, -_i, 0], [0, -_i, 0, 0], [_i, 0, 0, 0]]),
    np.array([[0, _i, 0, 0], [_i, 0, 0, 0], [0, 0, 0, _i], [0, 0, _i, 0]]),
)

# spinor-basis chirality matrix as printed
SPINOR_GAMMA5 = np.diag([-1, -1, 1, 1]).astype(complex)


def _fg(m):
    return m.k1 + 1j * m.k2, m.k1 - 1j * m.k2


def _ab(m):
    return (m.epsilon - m.p) / m.M, (m.epsilon + m.p) / m.M


# ---------------------------------------------------------------- squared sets


def squared_sin_seed(m, z: float) -> np.ndarray:
    """Spinor-basis squared set from the seed sin kz, transverse phase dropped."""
    f, g = _fg(m)
    s, c = np.sin(m.k * z), np.cos(m.k * z)
    e, k, M = m.epsilon, m.k, m.M
    cols = [
        [M * s, 0, e * s + 1j * k * c, -f * s],
        [0, M * s, -g * s, e * s - 1j * k * c],
        [e * s - 1j * k * c, f * s, M * s, 0],
        [g * s, e * s + 1j * k * c, 0, M * s],
    ]
    return np.array(cols, dtype=complex).T


def squared_primed_seed(m, z: float) -> np.ndarray:
    """Spinor-basis set from the seed sin(kz - pi/2) = -cos kz."""
    f, g = _fg(m)
    s, c = np.sin(m.k * z), np.cos(m.k * z)
    e, k, M = m.epsilon, m.k, m.M
    cols = [
        [-M * c, 0, -e * c + 1j * k * s, f * c],
        [0, -M * c, g * c, -e * c - 1j * k * s],
        [-e * c - 1j * k * s, -f * c, -M * c, 0],
        [-g * c, -e * c + 1j * k * s, 0, -M * c],
    ]
    return np.array(cols, dtype=complex).T


def plane_wave_set(m) -> np.ndarray:
    """Coefficient matrix of U (the e^{ikz} squared plane wave)."""
    f, g = _fg(m)
    e, k, M = m.epsilon, m.k, m.M
    return np.array(
        [[M, 0, e + k, g], [0, M, f, e - k], [e - k, -g, M, 0], [-f, e + k, 0, M]],
        dtype=complex,
    )


def plane_wave_set_reflected(m) -> np.ndarray:
    """Coefficient matrix of U' (the e^{-ikz} squared plane wave)."""
    f, g = _fg(m)
    e, k, M = m.epsilon, m.k, m.M
    return np.array(
        [[M, 0, e - k, g], [0, M, f, e + k], [e + k, -g, M, 0], [-f, e - k, 0, M]],
        dtype=complex,
    )


def standard_sin_seed(m, z: float) -> np.ndarray:
    """Standard-basis set W from the seed sin kz."""
    f, g = _fg(m)
    s, c = np.sin(m.k * z), np.cos(m.k * z)
    e, k, M = m.epsilon, m.k, m.M
    cols = [
        [(e + M) * s, 0, -1j * k * c, f * s],
        [0, (e + M) * s, g * s, 1j * k * c],
        [1j * k * c, -f * s, (-e + M) * s, 0],
        [-g * s, -1j * k * c, 0, (-e + M) * s],
    ]
    return np.array(cols, dtype=complex).T


def standard_primed_seed(m, z: float) -> np.ndarray:
    """Standard-basis set W' from the seed -cos kz."""
    f, g = _fg(m)
    s, c = np.sin(m.k * z), np.cos(m.k * z)
    e, k, M = m.epsilon, m.k, m.M
    cols = [
        [-(e + M) * c, 0, -1j * k * s, -f * c],
        [0, -(e + M) * c, -g * c, 1j * k * s],
        [1j * k * s, f * c, (e - M) * c, 0],
        [g * c, -1j * k * s, 0, (e - M) * c],
    ]
    return np.array(cols, dtype=complex).T


def squared_det_claim(m) -> float:
    """Claimed constant determinant of the sin-seed squared set."""
    return m.k ** 4


# ------------------------------------------------------------------ basis maps


def expansion_coeffs(m) -> dict:
    """Printed closed forms of the U and U' expansion coefficients."""
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    c = M * g / (2 * p)
    return {
        "a": M * (k + p) / (2 * p),
        "b": -M * (k - p) / (2 * p),
        "c": c,
        "d": -c,
        "a_primed": M * (-k + p) / (2 * p),
        "b_primed": M * (k + p) / (2 * p),
        "c_primed": c,
        "d_primed": -c,
    }


def u_in_phi(m) -> np.ndarray:
    """Rows: U_1..U_4 as combinations of (Phi_1, Phi_3), as printed."""
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    q = M / (2 * p)
    return q * np.array(
        [[p + k, p - k], [g, -g], [(p + k) / al, (p - k) / be], [g / al, -g / be]],
        dtype=complex,
    )


def u_primed_in_phi(m) -> np.ndarray:
    """Rows: U'_1..U'_4 as combinations of (Phi_2, Phi_4), as printed."""
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    q = M / (2 * p)
    return q * np.array(
        [[p - k, p + k], [g, -g], [(p - k) / al, (p + k) / be], [g / al, -g / be]],
        dtype=complex,
    )


def i_times_a(m) -> np.ndarray:
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    return M / (4 * p) * np.array(
        [
            [p + k, -(p - k), p - k, -(p + k)],
            [g, -g, -g, g],
            [(p + k) / al, -(p - k) / al, (p - k) / be, -(p + k) / be],
            [g / al, -g / al, -g / be, g / be],
        ],
        dtype=complex,
    )


def minus_a_primed(m) -> np.ndarray:
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    return M / (4 * p) * np.array(
        [
            [p + k, p - k, p - k, p + k],
            [g, g, -g, -g],
            [(p + k) / al, (p - k) / al, (p - k) / be, (p + k) / be],
            [g / al, g / al, -g / be, -g / be],
        ],
        dtype=complex,
    )


def s_matrix(m) -> np.ndarray:
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    return M / (2 * p) * np.array(
        [
            [p + k, 0, p - k, 0],
            [g, 0, -g, 0],
            [(p + k) / al, 0, (p - k) / be, 0],
            [g / al, 0, -g / be, 0],
        ],
        dtype=complex,
    )


def s_primed_matrix(m) -> np.ndarray:
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    return M / (2 * p) * np.array(
        [
            [0, p - k, 0, p + k],
            [0, g, 0, -g],
            [0, (p - k) / al, 0, (p + k) / be],
            [0, g / al, 0, -g / be],
        ],
        dtype=complex,
    )


def det_a(m) -> complex:
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    return M * al ** 2 * k ** 2 / (1j * p) * g ** 2 * (al ** 2 + be ** 2 - 2)


def det_a_primed(m) -> complex:
    k, p, M = m.k, m.p, m.M
    _, g = _fg(m)
    al, be = _ab(m)
    return -M * k ** 2 / (1j * p) * g ** 2 * (al ** 2 + be ** 2 - 2)


def inverse_prefactor(m) -> complex:
    al, be = _ab(m)
    return 2j * m.p / (m.k * m.M * (al - be))


def a_inverse(m) -> np.ndarray:
    """Printed inverse of a, with the printed prefactor applied."""
    k, p = m.k, m.p
    _, g = _fg(m)
    al, be = _ab(m)
    body = np.array(
        [
            [al, al * (k - p) / g, -1, -(k - p) / g],
            [al, -al * (k + p) / g, -1, (k + p) / g],
            [be, be * (k + p) / g, -1, -(k + p) / g],
            [be, -be * (k - p) / g, -1, (k - p) / g],
        ],
        dtype=complex,
    )
    return inverse_prefactor(m) * body


def a_primed_inverse(m) -> np.ndarray:
    k, p = m.k, m.p
    _, g = _fg(m)
    al, be = _ab(m)
    body = np.array(
        [
            [-al, -al * (k - p) / g, 1, (k - p) / g],
            [al, -al * (k + p) / g, -1, (k + p) / g],
            [-be, -be * (k + p) / g, 1, (k + p) / g],
            [be, -be * (k - p) / g, -1, (k - p) / g],
        ],
        dtype=complex,
    )
    return inverse_prefactor(m) * body


def composite_primed_from_plain(m) -> np.ndarray:
    """Printed a' a^{-1}."""
    k, p = m.k, m.p
    _, g = _fg(m)
    al, be = _ab(m)
    return 1j / (2 * k * (al - be)) * np.array(
        [
            [(p + k) * al, -(p - k) ** 2 * al / g, -(p - k), (p * p - k * k) / g],
            [g * al, -(k + p) * al, g, -(k + p)],
            [(k + p) * be / al, (p * p - k * k) * be / (g * al), -(p - k) / be, -(p + k) ** 2 / (g * be)],
            [g * be / al, (p - k) * be / al, g / be, (p - k) / be],
        ],
        dtype=complex,
    )


def composite_plain_from_primed(m) -> np.ndarray:
    """Printed a a'^{-1}."""
    k, p = m.k, m.p
    _, g = _fg(m)
    al, be = _ab(m)
    return 1 / (k * (al - be)) * np.array(
        [
            [-(p + k) * al, -(p - k) ** 2 * al / g, p - k, (p * p - k * k) / g],
            [g * al, (k + p) * al, g, k + p],
            [-(k + p) * be / al, (p * p - k * k) * be / (g * al), (p - k) / be, -(p + k) ** 2 / (g * be)],
            [g * be / al, -(p - k) * be / al, g / be, -(p - k) / be],
        ],
        dtype=complex,
    )


# -------------------------------------------------------------------- Majorana


def majorana_helicity_waves(m) -> tuple:
    """Printed Majorana-basis helicity amplitudes (alpha, beta) without phase."""
    f, _ = _fg(m)
    al, be = _ab(m)
    s = f / (m.k + m.p)
    t = f / (m.k - m.p)

    def col(x, r):
        return np.array(
            [1 + 1j * x * r, r - 1j * x, -1j * (r + 1j * x), 1j * (1 - 1j * x * r)]
        ) / np.sqrt(2)

    return col(al, s), col(be, t)


def majorana_helicity_conjugates(m) -> tuple:
    f, _ = _fg(m)
    al, be = _ab(m)
    s = np.conj(f / (m.k + m.p))
    t = np.conj(f / (m.k - m.p))

    def col(x, r):
        return np.array(
            [1 - 1j * x * r, r + 1j * x, 1j * (r - 1j * x), -1j * (1 + 1j * x * r)]
        ) / np.sqrt(2)

    return col(al, s), col(be, t)


def majorana_alpha_real_part(m) -> tuple:
    """(cos part, sin part) of the printed real split of the alpha wave."""
    f, _ = _fg(m)
    al, _ = _ab(m)
    s = f / (m.k + m.p)
    sc = np.conj(s)
    cos_part = np.array(
        [1 + 1j * al * (s - sc) / 2, (s + sc) / 2, al - 1j * (s - sc) / 2, al * (s + sc) / 2]
    ) / np.sqrt(2)
    sin_part = np.array(
        [al * (s + sc) / 2, -1j * (s - sc) / 2 - al, -(s + sc) / 2, 1 - 1j * al * (s - sc) / 2]
    ) / np.sqrt(2)
    return cos_part, sin_part


def majorana_alpha_imag_part(m) -> tuple:
    f, _ = _fg(m)
    al, _ = _ab(m)
    s = f / (m.k + m.p)
    sc = np.conj(s)
    cos_part = np.array(
        [1j * al * (s + sc) / 2, (s - sc) / 2 - 1j * al, -1j * (s + sc) / 2, 1j + al * (s - sc) / 2]
    ) / np.sqrt(2)
    sin_part = np.array(
        [-1j + al * (s - sc) / 2, -1j * (s + sc) / 2, -(s - sc) / 2 - 1j * al, -1j * al * (s + sc) / 2]
    ) / np.sqrt(2)
    return cos_part, sin_part


def majorana_real_set(m, theta: float) -> np.ndarray:
    """Printed real family (identical to the cos-seed squared set)."""
    c, s = np.cos(theta), np.sin(theta)
    e, k1, k2, k3, M = m.epsilon, m.k1, m.k2, m.k, m.M
    return np.array(
        [
            [M * c + k1 * s, -e * s - k3 * s, 0, -k2 * s],
            [e * s - k3 * s, M * c - k1 * s, k2 * s, 0],
            [0, k2 * s, M * c + k1 * s, e * s - k3 * s],
            [-k2 * s, 0, -e * s - k3 * s, M * c - k1 * s],
        ],
        dtype=complex,
    )


def majorana_imag_set(m, theta: float) -> np.ndarray:
    """Printed imaginary family (identical to the sin-seed squared set)."""
    c, s = np.cos(theta), np.sin(theta)
    e, k1, k2, k3, M = m.epsilon, m.k1, m.k2, m.k, m.M
    return 1j * np.array(
        [
            [k1 * c - M * s, -e * c - k3 * c, 0, -k2 * c],
            [e * c - k3 * c, -k1 * c - M * s, k2 * c, 0],
            [0, k2 * c, k1 * c - M * s, e * c - k3 * c],
            [-k2 * c, 0, -e * c - k3 * c, -k1 * c - M * s],
        ],
        dtype=complex,
    )


def majorana_transfer(m, theta: float) -> np.ndarray:
    """Printed S = I R^{-1}, including its inconsistent third diagonal entry."""
    e, k1, k2, k3, M = m.epsilon, m.k1, m.k2, m.k, m.M
    F = (M ** 2 + k1 ** 2) / 2
    s2 = np.sin(2 * theta)
    return 1j / M ** 2 * np.array(
        [
            [M * k1 - F * s2, -(e + k3) ** 2 * s2, 0, -k2 * s2],
            [-(e - k3) ** 2 * s2, -(M * k1 + F * s2), -k2 * s2, 0],
            [0, -k2 * s2, M * k1 - 0.5 * (M ** 2 + k1 ** 2) * s2, -(e - k3) ** 2 * s2],
            [-k2 * s2, 0, -(e + k3) ** 2 * s2, -(M * k1 + F * s2)],
        ],
        dtype=complex,
    )


# -------------------------------------------------------------------- boundary


def _phases(ph):
    return ph.x, ph.y, ph.v, ph.w


def planewave_system(m, ph, K: complex) -> np.ndarray:
    """Coefficient matrix of the plane-wave boundary system (written as equations)."""
    k, p = m.k, m.p
    al, be = _ab(m)
    x, y, v, w = _phases(ph)
    return np.array(
        [
            [al - x, be - x, (al - x) * K, (be - x) * K],
            [(al - y) * K, (be - y) * K, al - y, be - y],
            [(al - v) * (k - p), (be - v) * (k + p), -(al - v) * (k + p) * K, -(be - v) * (k - p) * K],
            [(al - w) * (k - p) * K, (be - w) * (k + p) * K, -(al - w) * (k + p), -(be - w) * (k - p)],
        ],
        dtype=complex,
    )


def planewave_matrix(m, ph, K: complex) -> np.ndarray:
    """The printed plane-wave matrix, which swaps k+p and k-p in rows 3 and 4."""
    k, p = m.k, m.p
    al, be = _ab(m)
    x, y, v, w = _phases(ph)
    return np.array(
        [
            [al - x, be - x, (al - x) * K, (be - x) * K],
            [(al - y) * K, (be - y) * K, al - y, be - y],
            [(al - v) * (k + p), (be - v) * (k - p), -(al - v) * (k - p) * K, -(be - v) * (k + p) * K],
            [(al - w) * (k + p) * K, (be - w) * (k - p) * K, -(al - w) * (k - p), -(be - w) * (k + p)],
        ],
        dtype=complex,
    )


def squared_system(m, ph, K: complex) -> np.ndarray:
    """Coefficient matrix of the printed squared-basis equations."""
    e, k, M = m.epsilon, m.k, m.M
    mm, n = e + k, e - k
    f, g = _fg(m)
    x, y, v, w = _phases(ph)
    return np.array(
        [
            [-(K * (mm - x * M) - (n - x * M)), g * (K - 1), -(K * (M - x * n) - (M - x * mm)), x * g * (K - 1)],
            [-(K * (n - y * M) - (mm - y * M)), g * (K - 1), -(K * (M - y * mm) - (M - y * n)), y * g * (K - 1)],
            [f * (K - 1), -(K * (n - v * M) - (mm - v * M)), v * f * (K - 1), -(K * (M - v * n) - (M - v * mm))],
            [f * (K - 1), -(K * (mm - w * M) - (n - w * M)), w * f * (K - 1), -(K * (M - w * mm) - (M - w * n))],
        ],
        dtype=complex,
    )


def squared_matrix(m, ph, K: complex) -> np.ndarray:
    """The printed squared-basis matrix."""
    e, k, M = m.epsilon, m.k, m.M
    mm, n = e + k, e - k
    f, g = _fg(m)
    x, y, v, w = _phases(ph)
    return np.array(
        [
            [-K * (mm - x * M) + n - x * M, g * (K - 1), -K * (M - x * n) + M - x * mm, x * g * (K - 1)],
            [-K * (n - y * M) + (mm - y * M), g * (K - 1), -K * (M - y * mm) + M - y * n, y * g * (K - 1)],
            [f * (K - 1), -K * (n - v * M) + mm - v * M, v * f * (K - 1), -K * (M - v * n) + M - v * mm],
            [f * (K - 1), -K * (mm - w * M) + n - w * M, w * f * (K - 1), -K * (M - w * mm) + M - w * n],
        ],
        dtype=complex,
    )


def spinor_current_formula(psi) -> float:
    """Printed spinor-component expression of J^z."""
    a = np.abs(np.asarray(psi)) ** 2
    return float((a[0] - a[2]) - (a[1] - a[3]))


def weyl_current_claim(k1: float, k2: float, k: float) -> tuple:
    """(middle expression, final value) of the printed Weyl j^z."""
    e = np.sqrt(k1 ** 2 + k2 ** 2 + k ** 2)
    middle = -(1 - (k1 ** 2 + k2 ** 2) / (e - k) ** 2)
    return float(middle), float(k / (e - k))


def covariant_g_explicit(rho: float, sigma: float) -> np.ndarray:
    """Printed phase-locking matrix in the spinor basis."""
    G = np.zeros((4, 4), dtype=complex)
    G[0, 2] = np.exp(-1j * rho)
    G[1, 3] = np.exp(-1j * sigma)
    G[2, 0] = np.exp(1j * rho)
    G[3, 1] = np.exp(1j * sigma)
    return G
