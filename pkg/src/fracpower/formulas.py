"""Closed-form clique and chromatic numbers for fractional powers, cycle
powers and path powers."""

from __future__ import annotations

from dataclasses import dataclass


def omega_fractional(delta: int, m: int, n: int) -> int:
    """Clique number of ``G^(m/n)`` for ``m < n`` given ``delta = Δ(G)``.

    Edgeless graphs (``delta == 0``) get 1, the single-vertex clique.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m >= n:
        raise ValueError(f"clique formula needs m < n, got m={m}, n={n}")
    if delta < 0:
        raise ValueError("max degree cannot be negative")
    if delta == 0:
        return 1
    if delta == 1:
        return m + 1
    if m % 2 == 0:
        return (m // 2) * delta + 1
    return ((m - 1) // 2) * delta + 2


def chi_cycle_power(k: int, m: int) -> int:
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    if m < 1:
        raise ValueError("power must be positive")
    if m >= k // 2:
        return k
    q = k // (m + 1)
    return -(-k // q)


def chi_path_power(k: int, m: int) -> int:
    if k < 1:
        raise ValueError("path order must be at least 1")
    if m < 1:
        raise ValueError("power must be positive")
    return min(m + 1, k)


def chi_cycle_fractional(k: int, m: int, n: int) -> int:
    """χ of ``C_k^(m/n)``, which is the cycle power ``C_(kn)^m``."""
    if n < 1:
        raise ValueError("n must be positive")
    return chi_cycle_power(k * n, m)


def chi_path_fractional(k: int, m: int, n: int) -> int:
    """χ of ``P_k^(m/n)`` (``k`` vertices), which is ``P_((k-1)n+1)^m``."""
    if n < 1:
        raise ValueError("n must be positive")
    return chi_path_power((k - 1) * n + 1, m)


def chi_cycle_fractional_direct(k: int, m: int, n: int) -> int:
    """Same value as :func:`chi_cycle_fractional`, written on ``nk`` directly."""
    nk = n * k
    if 2 * m >= nk:
        return nk
    return -(-nk // (nk // (m + 1)))


def chi_path_fractional_direct(k: int, m: int, n: int) -> int:
    return min(m + 1, (k - 1) * n + 1)


@dataclass(frozen=True)
class CycleBlockPlan:
    """Split of ``C_k`` into ``q`` runs of consecutive vertices, each colored
    ``1, 2, ...`` from its start. ``r1`` runs are one longer than the rest."""

    k: int
    m: int
    q: int
    r: int
    q1: int
    r1: int
    block_sizes: tuple[int, ...]

    def __post_init__(self):
        if sum(self.block_sizes) != self.k:
            raise ValueError("block sizes must cover the cycle")
        if any(b < self.m + 1 for b in self.block_sizes):
            raise ValueError("every block must hold at least m+1 vertices")


def cycle_block_plan(k: int, m: int) -> CycleBlockPlan:
    if k < 3 or m < 1:
        raise ValueError("need k >= 3 and m >= 1")
    if m >= k // 2:
        raise ValueError("block plan applies only when m < floor(k/2)")
    if k % (m + 1) == 0:
        raise ValueError("block plan applies only when m+1 does not divide k")
    q = k // (m + 1)
    r = k - (m + 1) * q
    q1, r1 = divmod(r, q)
    ceil_rq = -(-r // q)
    if r1 == 0:
        sizes = (m + 1 + q1,) * q
    else:
        sizes = (m + 1 + ceil_rq,) * r1 + (m + 1 + q1,) * (q - r1)
    return CycleBlockPlan(k=k, m=m, q=q, r=r, q1=q1, r1=r1, block_sizes=sizes)
