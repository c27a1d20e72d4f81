"""Tensor products ``B_1 (x) ... (x) B_r`` of path crystals.

Convention: for two factors, ``f_i`` acts on the left factor when
``phi_i(b1) > eps_i(b2)`` and on the right one otherwise; ``e_i`` acts on the
left factor when ``phi_i(b1) >= eps_i(b2)``.  Longer products are folded
left to right, ``((b1 (x) b2) (x) b3) ...``.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .crystal import LSPath, highest_path, path_crystal
from .rootsys import CartanData, Weight


class TensorElem:
    """An element ``b_1 (x) ... (x) b_r``; ``shapes[k]`` is the highest weight of factor ``k``."""

    __slots__ = ("factors", "shapes", "_hash")

    def __init__(self, factors: Iterable[LSPath], shapes: Iterable[Sequence[int]]):
        self.factors: Tuple[LSPath, ...] = tuple(factors)
        self.shapes: Tuple[Weight, ...] = tuple(tuple(s) for s in shapes)
        if len(self.factors) != len(self.shapes):
            raise ValueError("factors and shapes differ in length")
        self._hash = hash(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, TensorElem)
            and self._hash == other._hash
            and self.factors == other.factors
            and self.shapes == other.shapes
        )

    def __repr__(self) -> str:
        return "TensorElem(" + " (x) ".join(repr(p) for p in self.factors) + ")"

    @property
    def wt(self) -> Weight:
        total = [0] * len(self.shapes[0])
        for p in self.factors:
            for k, x in enumerate(p.endpoint):
                total[k] += x
        return tuple(total)

    @classmethod
    def _raw(cls, factors: Tuple[LSPath, ...], shapes: Tuple[Weight, ...]) -> "TensorElem":
        obj = object.__new__(cls)
        obj.factors = factors
        obj.shapes = shapes
        obj._hash = hash(factors)
        return obj

    def replace(self, k: int, path: LSPath) -> "TensorElem":
        fs = list(self.factors)
        fs[k] = path
        return TensorElem._raw(tuple(fs), self.shapes)

    def head(self) -> LSPath:
        return self.factors[0]

    def tail(self) -> "TensorElem":
        return TensorElem._raw(self.factors[1:], self.shapes[1:])

    def prepend(self, path: LSPath, shape: Sequence[int]) -> "TensorElem":
        return TensorElem._raw((path,) + self.factors, (tuple(shape),) + self.shapes)

    def to_json(self) -> list:
        return [p.to_json() for p in self.factors]


def highest_tensor(cd: CartanData, shapes: Sequence[Sequence[int]]) -> TensorElem:
    return TensorElem([highest_path(cd, s) for s in shapes], shapes)


def combine(left: Tuple[int, int], right: Tuple[int, int]) -> Tuple[int, int]:
    """``(eps, phi)`` of ``b1 (x) b2`` from those of ``b1`` and ``b2``."""
    e1, p1 = left
    e2, p2 = right
    # <wt b, h_i> = phi - eps
    return max(e1, e2 - (p1 - e1)), max(p2, p1 + (p2 - e2))


def _prefix_stats(cd: CartanData, i: int, x: TensorElem) -> List[Tuple[int, int]]:
    pc = path_crystal(cd)
    out: List[Tuple[int, int]] = []
    acc = None
    for p in x.factors:
        s = pc.stats(i, p)
        acc = s if acc is None else combine(acc, s)
        out.append(acc)
    return out


def t_stats(cd: CartanData, i: int, x: TensorElem) -> Tuple[int, int]:
    return _prefix_stats(cd, i, x)[-1]


def t_eps(cd: CartanData, i: int, x: TensorElem) -> int:
    return t_stats(cd, i, x)[0]


def t_phi(cd: CartanData, i: int, x: TensorElem) -> int:
    return t_stats(cd, i, x)[1]


def _target(cd: CartanData, i: int, x: TensorElem, strict: bool) -> int:
    """Index of the factor hit by ``f_i`` (strict) or ``e_i`` (non-strict)."""
    pc = path_crystal(cd)
    pre = _prefix_stats(cd, i, x)
    k = len(x) - 1
    while k > 0:
        phi_left = pre[k - 1][1]
        eps_here = pc.eps(i, x.factors[k])
        go_left = phi_left > eps_here if strict else phi_left >= eps_here
        if not go_left:
            return k
        k -= 1
    return 0


def t_f(cd: CartanData, i: int, x: TensorElem) -> Optional[TensorElem]:
    k = _target(cd, i, x, strict=True)
    p = path_crystal(cd).f(i, x.factors[k])
    return None if p is None else x.replace(k, p)


def t_e(cd: CartanData, i: int, x: TensorElem) -> Optional[TensorElem]:
    k = _target(cd, i, x, strict=False)
    p = path_crystal(cd).e(i, x.factors[k])
    return None if p is None else x.replace(k, p)


def signature(cd: CartanData, i: int, x: TensorElem) -> Tuple[List[int], List[int]]:
    """Per-factor counts of unmatched ``-`` and ``+`` in the ``i``-signature of ``x``.

    Factor ``k`` contributes ``eps`` minus signs followed by ``phi`` plus
    signs; every minus cancels the nearest unmatched plus on its left.  The
    surviving minus signs are where ``e_i`` acts (rightmost first) and the
    surviving plus signs are where ``f_i`` acts (leftmost first).
    """
    pc = path_crystal(cd)
    minus = [0] * len(x.factors)
    plus = [0] * len(x.factors)
    stack: List[List[int]] = []  # [factor, open plus signs]
    for k, p in enumerate(x.factors):
        e, ph = pc.stats(i, p)
        while e and stack:
            top = stack[-1]
            used = min(e, top[1])
            e -= used
            top[1] -= used
            if not top[1]:
                stack.pop()
        minus[k] = e
        if ph:
            stack.append([k, ph])
    for k, n in stack:
        plus[k] = n
    return minus, plus


def _apply_counts(cd: CartanData, i: int, x: TensorElem, counts: Sequence[int], raising: bool) -> Optional[TensorElem]:
    pc = path_crystal(cd)
    op = pc.e if raising else pc.f
    fs = list(x.factors)
    for k, n in enumerate(counts):
        for _ in range(n):
            fs[k] = op(i, fs[k])
            if fs[k] is None:
                raise AssertionError("signature rule disagrees with factor statistics")
    return TensorElem._raw(tuple(fs), x.shapes)


def t_f_pow(cd: CartanData, i: int, a: int, x: Optional[TensorElem]) -> Optional[TensorElem]:
    """``f_i^a x``, read off the signature in one pass."""
    if x is None or a == 0:
        return x
    _, plus = signature(cd, i, x)
    if sum(plus) < a:
        return None
    counts = [0] * len(plus)
    left = a
    for k, n in enumerate(plus):
        take = min(n, left)
        counts[k] = take
        left -= take
        if not left:
            break
    return _apply_counts(cd, i, x, counts, raising=False)


def t_e_pow(cd: CartanData, i: int, a: int, x: Optional[TensorElem]) -> Optional[TensorElem]:
    """``e_i^a x``, read off the signature in one pass."""
    if x is None or a == 0:
        return x
    minus, _ = signature(cd, i, x)
    if sum(minus) < a:
        return None
    counts = [0] * len(minus)
    left = a
    for k in range(len(minus) - 1, -1, -1):
        take = min(minus[k], left)
        counts[k] = take
        left -= take
        if not left:
            break
    return _apply_counts(cd, i, x, counts, raising=True)


def f_string(cd: CartanData, i: int, x: TensorElem) -> List[TensorElem]:
    """``[x, f_i x, f_i^2 x, ...]`` up to the end of the string."""
    pc = path_crystal(cd)
    _, plus = signature(cd, i, x)
    out = [x]
    fs = list(x.factors)
    for k, n in enumerate(plus):
        for _ in range(n):
            fs[k] = pc.f(i, fs[k])
            out.append(TensorElem._raw(tuple(fs), x.shapes))
    return out


def t_f_pow_iter(cd: CartanData, i: int, a: int, x: Optional[TensorElem]) -> Optional[TensorElem]:
    """``f_i^a x`` by repeated single steps of :func:`t_f`."""
    for _ in range(a):
        if x is None:
            return None
        x = t_f(cd, i, x)
    return x


def t_e_pow_iter(cd: CartanData, i: int, a: int, x: Optional[TensorElem]) -> Optional[TensorElem]:
    for _ in range(a):
        if x is None:
            return None
        x = t_e(cd, i, x)
    return x


# Right-nested evaluation b1 (x) (b2 (x) (... )), kept separate so the two
# bracketings can be compared against each other.

def _suffix_stats(cd: CartanData, i: int, x: TensorElem) -> List[Tuple[int, int]]:
    pc = path_crystal(cd)
    out: List[Tuple[int, int]] = [None] * len(x)  # type: ignore[list-item]
    acc = None
    for k in range(len(x) - 1, -1, -1):
        s = pc.stats(i, x.factors[k])
        acc = s if acc is None else combine(s, acc)
        out[k] = acc
    return out


def t_stats_right(cd: CartanData, i: int, x: TensorElem) -> Tuple[int, int]:
    return _suffix_stats(cd, i, x)[0]


def _target_right(cd: CartanData, i: int, x: TensorElem, strict: bool) -> int:
    pc = path_crystal(cd)
    suf = _suffix_stats(cd, i, x)
    for k in range(len(x) - 1):
        phi_here = pc.phi(i, x.factors[k])
        eps_rest = suf[k + 1][0]
        if (phi_here > eps_rest) if strict else (phi_here >= eps_rest):
            return k
    return len(x) - 1


def t_f_right(cd: CartanData, i: int, x: TensorElem) -> Optional[TensorElem]:
    k = _target_right(cd, i, x, strict=True)
    p = path_crystal(cd).f(i, x.factors[k])
    return None if p is None else x.replace(k, p)


def t_e_right(cd: CartanData, i: int, x: TensorElem) -> Optional[TensorElem]:
    k = _target_right(cd, i, x, strict=False)
    p = path_crystal(cd).e(i, x.factors[k])
    return None if p is None else x.replace(k, p)
