"""Rows of the binomial triangle, classical and complex-amplitude, with Gaussian-limit errors.

Classical rows are exact big-integer binomials.  The complex rows carry
amplitudes whose squared moduli reproduce the binomial probabilities, so
every distributional statement about the classical triangle transfers
verbatim to the amplitude triangle.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

MAX_ROW = 1000


@dataclass(frozen=True)
class TriangleRow:
    """One row: ``values[k]`` is C(n, k) (classical) or the amplitude psi_nk (quantum)."""

    n: int
    values: list
    kind: str  # "classical" | "quantum"


def _check_row_index(n: int, minimum: int = 0) -> None:
    if not isinstance(n, int) or not minimum <= n <= MAX_ROW:
        raise ValueError(f"row index must be an integer in [{minimum}, {MAX_ROW}], got {n}")


def classical_row(n: int) -> TriangleRow:
    """Exact binomial coefficients C(n, 0..n); Python ints, no overflow."""
    _check_row_index(n)
    return TriangleRow(n, [math.comb(n, k) for k in range(n + 1)], "classical")


def binomial_pmf(n: int, k: int) -> float:
    """C(n, k) / 2**n via exact big-integer division, rounded once to float."""
    return math.comb(n, k) / (1 << n)


def _amplitude_phase(n: int, k: int) -> float:
    # Single home for the adopted reading of the phase: the offset (k - n/2)
    # is divided by n, and both square-root factors use (n - 1)/4.  Swap here
    # if the divisor convention ever needs to change; the squared modulus is
    # independent of this choice.
    r = math.sqrt((n - 1) / 4.0)
    return ((k - n / 2.0) / n) * r * math.atan(r)


def qtpt_amplitude(n: int, k: int) -> complex:
    """Amplitude sqrt(C(n,k)) * 2**(-n/2) * exp(i * phase(n, k)).

    The squared modulus is the binomial probability C(n,k) * 2**(-n).
    n = 0 returns 1 by convention (the apex carries total probability 1;
    the phase term is 0/0 there).
    """
    _check_row_index(n)
    if not 0 <= k <= n:
        raise ValueError(f"k must be in [0, {n}], got {k}")
    if n == 0:
        return complex(1.0)
    modulus = math.sqrt(binomial_pmf(n, k))
    return modulus * cmath.exp(1j * _amplitude_phase(n, k))


def qtpt_row(n: int) -> TriangleRow:
    """All n+1 amplitudes of row n; squared moduli sum to 1."""
    _check_row_index(n, minimum=1)
    return TriangleRow(n, [qtpt_amplitude(n, k) for k in range(n + 1)], "quantum")


def gaussian_approx_row(n: int) -> list[float]:
    """Gaussian limit of the row profile: mean n/2, variance n/4."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    var = n / 4.0
    norm = 1.0 / math.sqrt(2.0 * math.pi * var)
    return [norm * math.exp(-((k - n / 2.0) ** 2) / (2.0 * var)) for k in range(n + 1)]


def row_sup_error(n: int, kind: str) -> float:
    """Sup over k of |p(k) - gaussian[k]| for the normalized row profile.

    ``kind='classical'`` uses the exact binomial pmf, ``kind='quantum'`` the
    squared amplitude moduli; the two agree to roundoff.
    """
    _check_row_index(n, minimum=1)
    if kind == "classical":
        probs = [binomial_pmf(n, k) for k in range(n + 1)]
    elif kind == "quantum":
        probs = [abs(a) ** 2 for a in qtpt_row(n).values]
    else:
        raise ValueError(f"kind must be 'classical' or 'quantum', got {kind!r}")
    gauss = gaussian_approx_row(n)
    return max(abs(p - g) for p, g in zip(probs, gauss))


def row_csv(row: TriangleRow) -> str:
    """CSV text for one row: k,count,pmf (classical) or k,re,im,modulus2 (quantum)."""
    if row.kind == "classical":
        lines = ["k,count,pmf"]
        for k, c in enumerate(row.values):
            lines.append(f"{k},{c},{c / (1 << row.n)!r}")
    else:
        lines = ["k,re,im,modulus2"]
        for k, a in enumerate(row.values):
            lines.append(f"{k},{a.real!r},{a.imag!r},{abs(a) ** 2!r}")
    return "\n".join(lines) + "\n"
