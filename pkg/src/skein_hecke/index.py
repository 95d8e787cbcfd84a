"""Index and grading arithmetic for moduli of holomorphic curves with kappa strands.

Symbols: ``n`` half the dimension of T*M, ``chi`` the Euler characteristic of
the domain, ``mu`` the Maslov index, ``kappa`` the number of strands, ``m``
the number of inputs, ``degrees = [|y0|, |y1|, ..., |ym|]`` (output first).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

__all__ = ["IndexInput", "fredholm_index", "graded_index", "hbar_degree", "matching_maslov"]


@dataclass(frozen=True)
class IndexInput:
    n: int
    chi: int
    kappa: int
    m: int
    mu: int | None = None
    degrees: Sequence[int] = field(default=())

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.kappa < 1:
            raise ValueError("kappa must be at least 1")
        if self.degrees and len(self.degrees) != self.m + 1:
            raise ValueError(f"need m+1 = {self.m + 1} degrees (|y0| first), got {len(self.degrees)}")


def fredholm_index(inp: IndexInput) -> int:
    """(n-2) chi + mu + 2 kappa - m kappa n + m - 2"""
    if inp.mu is None:
        raise ValueError("fredholm_index needs the Maslov index mu")
    return (inp.n - 2) * inp.chi + inp.mu + 2 * inp.kappa - inp.m * inp.kappa * inp.n + inp.m - 2


def graded_index(inp: IndexInput) -> int:
    """(n-2)(chi - kappa) + |y0| - |y1| - ... - |ym| + m - 2"""
    if not inp.degrees:
        raise ValueError("graded_index needs the degrees |y0|, ..., |ym|")
    y0, *rest = inp.degrees
    return (inp.n - 2) * (inp.chi - inp.kappa) + y0 - sum(rest) + inp.m - 2


def matching_maslov(inp: IndexInput) -> int:
    """The mu making both index formulas agree: kappa n (m-1) + |y0| - sum |yi|."""
    y0, *rest = inp.degrees
    return inp.kappa * inp.n * (inp.m - 1) + y0 - sum(rest)


def hbar_degree(n: int) -> int:
    return 2 - n
