"""Littelmann path model for the crystal ``B(lam)`` of a dominant weight.

A path is stored as its list of straight segments ``(direction, duration)``;
directions are integral weights (Weyl conjugates of ``lam``) and durations
are positive :class:`~fractions.Fraction` s summing to 1.  Adjacent segments
with the same direction are always merged, so two paths are equal exactly
when their segment tuples are.

For a fixed index ``i`` the function ``h_i(t) = <pi(t), h_i>`` is linear on
each segment, hence all minima are read off the breakpoints and everything
is exact.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .rootsys import CartanData, RootSystemError, Weight, is_dominant, simple_reflection

DEFAULT_CAP = 10 ** 6

_ONE = Fraction(1)


class CapExceeded(RuntimeError):
    """An enumeration produced more elements than the configured cap."""

    def __init__(self, cap: int, what: str = "elements"):
        super().__init__(f"size cap of {cap} {what} exceeded")
        self.cap = cap


class LSPath:
    """A canonical piecewise-linear path starting at the origin."""

    __slots__ = ("segments", "_hash")

    def __init__(self, segments: Iterable[Tuple[Sequence[int], Fraction]]):
        merged: List[Tuple[Weight, Fraction]] = []
        for d, dur in segments:
            d = tuple(d)
            dur = Fraction(dur)
            if dur <= 0:
                raise ValueError("segment durations must be positive")
            if merged and merged[-1][0] == d:
                merged[-1] = (d, merged[-1][1] + dur)
            else:
                merged.append((d, dur))
        if sum(dur for _, dur in merged) != 1:
            raise ValueError("segment durations must sum to 1")
        self.segments: Tuple[Tuple[Weight, Fraction], ...] = tuple(merged)
        self._hash = hash(self.segments)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, LSPath) and self._hash == other._hash and self.segments == other.segments

    def __lt__(self, other: "LSPath") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        parts = ", ".join(f"{list(d)}*{dur}" for d, dur in self.segments)
        return f"LSPath({parts})"

    def sort_key(self):
        return tuple((d, dur) for d, dur in self.segments)

    @property
    def endpoint(self) -> Weight:
        total = [Fraction(0)] * len(self.segments[0][0])
        for d, dur in self.segments:
            for k, x in enumerate(d):
                total[k] += x * dur
        if any(x.denominator != 1 for x in total):
            raise AssertionError(f"non-integral endpoint for {self!r}")
        return tuple(int(x) for x in total)

    def heights(self, i: int) -> List[Fraction]:
        """Values of ``h_i`` at the breakpoints ``0 = t_0 < ... < t_s = 1``."""
        out = [Fraction(0)]
        h = Fraction(0)
        for d, dur in self.segments:
            h += d[i - 1] * dur
            out.append(h)
        return out

    def times(self) -> List[Fraction]:
        out = [Fraction(0)]
        t = Fraction(0)
        for _, dur in self.segments:
            t += dur
            out.append(t)
        return out

    def check_integrality(self) -> None:
        """Every ``h_i`` attains an integral minimum ``<= 0``."""
        n = len(self.segments[0][0])
        for i in range(1, n + 1):
            low = min(self.heights(i))
            if low.denominator != 1:
                raise AssertionError(f"non-integral minimum of h_{i} on {self!r}")

    def to_json(self) -> list:
        return [[list(d), dur.numerator, dur.denominator] for d, dur in self.segments]

    @classmethod
    def from_json(cls, data) -> "LSPath":
        return cls((tuple(d), Fraction(num, den)) for d, num, den in data)


def _reflect_between(cd: CartanData, i: int, pi: LSPath, start: Fraction, stop: Fraction) -> List[Tuple[Weight, Fraction]]:
    """Segments of ``pi`` with directions on ``[start, stop]`` replaced by ``s_i`` of themselves."""
    out: List[Tuple[Weight, Fraction]] = []
    t = Fraction(0)
    for d, dur in pi.segments:
        a, b = t, t + dur
        t = b
        # pieces: [a, min(b,start)], [max(a,start), min(b,stop)], [max(a,stop), b]
        lo, hi = max(a, start), min(b, stop)
        if a < start:
            out.append((d, min(b, start) - a))
        if lo < hi:
            out.append((simple_reflection(cd, i, d), hi - lo))
        if b > stop:
            out.append((d, b - max(a, stop)))
    return out


class PathCrystal:
    """Root operators on LS paths for one Cartan matrix, with memoization."""

    def __init__(self, cd: CartanData):
        self.cd = cd
        self._f: Dict[Tuple[int, LSPath], Optional[LSPath]] = {}
        self._e: Dict[Tuple[int, LSPath], Optional[LSPath]] = {}
        self._stats: Dict[Tuple[int, LSPath], Tuple[int, int]] = {}

    def _check(self, i: int) -> None:
        self.cd.check_index(i)

    def stats(self, i: int, pi: LSPath) -> Tuple[int, int]:
        """``(eps_i, phi_i)`` of ``pi``."""
        key = (i, pi)
        got = self._stats.get(key)
        if got is None:
            self._check(i)
            hs = pi.heights(i)
            low = min(hs)
            got = (int(-low), int(hs[-1] - low))
            self._stats[key] = got
        return got

    def eps(self, i: int, pi: LSPath) -> int:
        return self.stats(i, pi)[0]

    def phi(self, i: int, pi: LSPath) -> int:
        return self.stats(i, pi)[1]

    def f(self, i: int, pi: LSPath) -> Optional[LSPath]:
        key = (i, pi)
        if key in self._f:
            return self._f[key]
        self._check(i)
        hs = pi.heights(i)
        ts = pi.times()
        low = min(hs)
        out = None
        if hs[-1] - low >= 1:
            k1 = max(k for k, h in enumerate(hs) if h == low)
            t1 = ts[k1]
            target = low + 1
            t0 = None
            for k in range(k1, len(pi.segments)):
                if hs[k + 1] >= target:
                    slope = pi.segments[k][0][i - 1]
                    t0 = ts[k] + (target - hs[k]) / slope
                    break
            out = LSPath(_reflect_between(self.cd, i, pi, t1, t0))
            out.check_integrality()
        self._f[key] = out
        if out is not None:
            self._e[(i, out)] = pi
        return out

    def e(self, i: int, pi: LSPath) -> Optional[LSPath]:
        key = (i, pi)
        if key in self._e:
            return self._e[key]
        self._check(i)
        hs = pi.heights(i)
        ts = pi.times()
        low = min(hs)
        out = None
        if low <= -1:
            k0 = min(k for k, h in enumerate(hs) if h == low)
            t0 = ts[k0]
            target = low + 1
            t1 = None
            for k in range(k0 - 1, -1, -1):
                if hs[k] >= target:
                    slope = pi.segments[k][0][i - 1]
                    t1 = ts[k + 1] - (hs[k + 1] - target) / slope
                    break
            out = LSPath(_reflect_between(self.cd, i, pi, t1, t0))
            out.check_integrality()
        self._e[key] = out
        if out is not None:
            self._f[(i, out)] = pi
        return out


@lru_cache(maxsize=None)
def path_crystal(cd: CartanData) -> PathCrystal:
    return PathCrystal(cd)


def highest_path(cd: CartanData, lam: Sequence[int]) -> LSPath:
    """The straight line path to ``lam``; represents the highest weight element."""
    lam = tuple(int(x) for x in lam)
    if len(lam) != cd.rank:
        raise RootSystemError("weight has wrong length")
    if not is_dominant(lam):
        raise RootSystemError(f"weight {lam} is not dominant")
    return LSPath([(lam, _ONE)])


def f(cd: CartanData, i: int, pi: LSPath) -> Optional[LSPath]:
    """Lowering root operator; ``None`` stands for 0."""
    return path_crystal(cd).f(i, pi)


def e(cd: CartanData, i: int, pi: LSPath) -> Optional[LSPath]:
    """Raising root operator; ``None`` stands for 0."""
    return path_crystal(cd).e(i, pi)


def eps(cd: CartanData, i: int, pi: LSPath) -> int:
    return path_crystal(cd).eps(i, pi)


def phi(cd: CartanData, i: int, pi: LSPath) -> int:
    return path_crystal(cd).phi(i, pi)


def wt(pi: LSPath) -> Weight:
    return pi.endpoint


def f_pow(cd: CartanData, i: int, a: int, pi: Optional[LSPath]) -> Optional[LSPath]:
    pc = path_crystal(cd)
    for _ in range(a):
        if pi is None:
            return None
        pi = pc.f(i, pi)
    return pi


def e_pow(cd: CartanData, i: int, a: int, pi: Optional[LSPath]) -> Optional[LSPath]:
    pc = path_crystal(cd)
    for _ in range(a):
        if pi is None:
            return None
        pi = pc.e(i, pi)
    return pi


def enumerate_crystal(cd: CartanData, lam: Sequence[int], cap: int = DEFAULT_CAP) -> List[LSPath]:
    """All of ``B(lam)``: the closure of the highest path under the ``f_i``.

    Returned in breadth-first order from the highest weight element.
    """
    pc = path_crystal(cd)
    top = highest_path(cd, lam)
    seen = {top}
    order = [top]
    queue = deque([top])
    while queue:
        pi = queue.popleft()
        for i in range(1, cd.rank + 1):
            nxt = pc.f(i, pi)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                if len(order) > cap:
                    raise CapExceeded(cap)
                queue.append(nxt)
    return order
