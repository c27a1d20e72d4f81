"""Piecewise-linear description of generalized string polytopes.

Membership in the cone ``S_i`` is decided by the ``Psi^{j,k}`` recursion
below; together with the upper bounds (ii) it cuts out ``Delta_{i,m}``.
Everything runs over :class:`~fractions.Fraction`, so rational points such
as ``(0, 1, 1/2)`` are handled exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .rootsys import CartanData, RootSystemError, primitive

RationalPoint = Tuple[Fraction, ...]

MAX_HULL_DIM = 8


def as_point(xs: Iterable) -> RationalPoint:
    return tuple(Fraction(x) for x in xs)


def rat(x) -> str:
    """``"p/q"`` text form used in JSON output."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass
class PLReport:
    """Values of the ``Psi`` recursion at one point."""

    psi: Dict[Tuple[int, int], Fraction]
    a_levels: Dict[int, RationalPoint]
    verdict_S: bool
    verdict_ii: Optional[List[bool]] = None
    verdict_Delta: Optional[bool] = None

    def to_json(self) -> dict:
        return {
            "psi": [[j, k, rat(v)] for (j, k), v in sorted(self.psi.items())],
            "a_levels": {str(j): [rat(x) for x in lev] for j, lev in sorted(self.a_levels.items())},
            "verdict_S": self.verdict_S,
            "verdict_ii": self.verdict_ii,
            "verdict_Delta": self.verdict_Delta,
        }


def _check_dims(word: Sequence[int], m: Sequence, a: Sequence) -> None:
    r = len(word)
    if len(a) != r:
        raise RootSystemError(f"point has length {len(a)}, expected {r}")
    if len(m) not in (r - 1, r):
        raise RootSystemError(f"multidegree has length {len(m)}, expected {r - 1} or {r}")


def _num(x):
    """Keep ints as ints (fast path); everything else becomes a Fraction."""
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return x
    return Fraction(x)


@lru_cache(maxsize=None)
def _plan(cd: CartanData, word: Tuple[int, ...]):
    """For each ``j`` (r down to 2) and ``k < j``: ``None`` when ``i_k != i_j``,
    else a list of candidates ``(l, [(s, coeff)], [s with m_s])`` for the max."""
    r = len(word)
    out = []
    for j in range(r, 1, -1):
        ij = word[j - 1]
        row = []
        for k in range(1, j):
            if word[k - 1] != ij:
                row.append(None)
                continue
            cands = []
            for l in range(k + 1, j + 1):
                if word[l - 1] != ij:
                    continue
                terms = {l - 1: 1}
                for s in range(k + 1, l + 1):
                    c = cd.c(ij, word[s - 1])
                    if c:
                        terms[s - 1] = terms.get(s - 1, 0) - c
                ms = tuple(s - 1 for s in range(k, l) if word[s - 1] == ij)
                cands.append((tuple((t, v) for t, v in terms.items() if v), ms))
            row.append(cands)
        out.append((j, row))
    return out


# Linear forms are tuples (coeff of a_1, ..., coeff of a_r, constant).

def _psi_core(cd: CartanData, word: Sequence[int], m: Sequence, a: Sequence, track: bool):
    r = len(word)
    vals = [_num(x) for x in a]
    m = [_num(x) for x in m]
    forms = [tuple(int(t == k) for t in range(r)) + (0,) for k in range(r)] if track else None
    psi: Dict[Tuple[int, int], Fraction] = {}
    psi_forms: Dict[Tuple[int, int], tuple] = {}
    levels: Dict[int, RationalPoint] = {r: tuple(vals)}
    for j, row in _plan(cd, tuple(word)):
        new_vals = vals[: j - 1]
        new_forms = list(forms[: j - 1]) if track else None
        for k, cands in enumerate(row, start=1):
            if cands is None:
                psi[(j, k)] = vals[k - 1]
                if track:
                    psi_forms[(j, k)] = forms[k - 1]
                continue
            v = None
            best = None
            for terms, ms in cands:
                cand = sum(coef * vals[t] for t, coef in terms) + sum(m[t] for t in ms)
                if v is None or cand > v:
                    v = cand
                    best = (terms, ms)
            psi[(j, k)] = v
            fm = None
            if track:
                terms, ms = best
                f = [0] * (r + 1)
                for t, coef in terms:
                    f = [x + coef * y for x, y in zip(f, forms[t])]
                f[-1] += sum(m[t] for t in ms)
                fm = tuple(f)
                psi_forms[(j, k)] = fm
            if v < vals[k - 1]:
                new_vals[k - 1] = v
                if track:
                    new_forms[k - 1] = fm
        vals = new_vals
        forms = new_forms
        levels[j - 1] = tuple(vals)
    return psi, levels, psi_forms


def ii_bound(cd: CartanData, word: Sequence[int], m: Sequence, a: Sequence, j: int, k=1):
    """Right hand side of condition (ii) at position ``j`` (0-based); uses only ``a_s, s > j``."""
    ij = word[j]
    out = k * m[j]
    for s in range(j + 1, len(word)):
        if word[s] == ij:
            out += k * m[s]
        out -= cd.c(ij, word[s]) * a[s]
    return out


def psi_eval(cd: CartanData, word: Sequence[int], m: Sequence, a: Sequence) -> PLReport:
    """Evaluate every ``Psi^{j,k}(m~, a)`` and the levels ``a^{(j)}``.

    ``m`` may have length ``r - 1`` (just ``m~``) or ``r``; in the latter
    case condition (ii) and the verdict for ``Delta_{i,m}`` are filled in.
    """
    _check_dims(word, m, a)
    a = as_point(a)
    m = as_point(m)
    psi, levels, _ = _psi_core(cd, word, m, a, False)
    rep = PLReport(psi, levels, all(v >= 0 for v in psi.values()))
    if len(m) == len(word):
        rep.verdict_ii = [a[j] <= ii_bound(cd, word, m, a, j) for j in range(len(word))]
        rep.verdict_Delta = rep.verdict_S and all(rep.verdict_ii) and all(x >= 0 for x in a)
    return rep


def in_S(cd: CartanData, word: Sequence[int], m_tilde: Sequence, a: Sequence) -> bool:
    _check_dims(word, m_tilde, a)
    psi, _, _ = _psi_core(cd, word, m_tilde, a, False)
    return all(v >= 0 for v in psi.values())


def in_S_im(cd: CartanData, word: Sequence[int], m: Sequence, k, a: Sequence) -> bool:
    """Conditions (i) and (ii) at dilation ``k``."""
    if len(m) != len(word):
        raise RootSystemError("multidegree and word differ in length")
    a = [_num(x) for x in a]
    km = tuple(_num(k) * _num(x) for x in m)
    if any(x < 0 for x in a):
        return False
    if any(a[j] > ii_bound(cd, word, km, a, j) for j in range(len(word))):
        return False
    return in_S(cd, word, km[:-1], a)


def in_Delta(cd: CartanData, word: Sequence[int], m: Sequence, a: Sequence) -> bool:
    return in_S_im(cd, word, m, 1, a)


def ii_box(cd: CartanData, word: Sequence[int], m: Sequence[int], k: int = 1) -> Iterator[Tuple[int, ...]]:
    """Integer points ``a >= 0`` obeying (ii) at dilation ``k``, generated from ``a_r`` down to ``a_1``."""
    r = len(word)
    km = tuple(k * int(x) for x in m)
    a = [0] * r

    def rec(j):
        if j < 0:
            yield tuple(a)
            return
        top = ii_bound(cd, word, km, a, j)
        for v in range(0, top + 1):
            a[j] = v
            yield from rec(j - 1)
        a[j] = 0

    yield from rec(r - 1)


def lattice_points(cd: CartanData, word: Sequence[int], m: Sequence[int], k: int = 1) -> List[Tuple[int, ...]]:
    """``Delta_{i,km} ∩ Z^r`` in lexicographic order."""
    if len(m) != len(word):
        raise RootSystemError("multidegree and word differ in length")
    mt = tuple(k * int(x) for x in m[:-1])
    return sorted(a for a in ii_box(cd, word, m, k) if in_S(cd, word, mt, a))


def tight_forms(cd: CartanData, word: Sequence[int], m: Sequence, a: Sequence) -> List[Tuple[Fraction, ...]]:
    """Gradients of the constraints of the evaluated system that are tight at ``a``.

    For ``Psi`` one active linear piece is used.
    """
    r = len(word)
    a = as_point(a)
    m = as_point(m)
    _, _, pforms = _psi_core(cd, word, m, a, True)
    out = []
    for f in pforms.values():
        if sum(x * y for x, y in zip(f[:r], a)) + f[r] == 0:
            out.append(f[:r])
    for j in range(r):
        if a[j] == 0:
            out.append(tuple(Fraction(int(t == j)) for t in range(r)))
        if a[j] == ii_bound(cd, word, m, a, j):
            g = [Fraction(0)] * r
            g[j] = Fraction(1)
            for s in range(j + 1, r):
                g[s] += cd.c(word[j], word[s])
            out.append(tuple(g))
    return out


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(_rref([list(map(Fraction, r)) for r in rows])[1])


def _rref(rows: List[List[Fraction]]):
    """Row reduce in place; returns (rows, pivot columns)."""
    pivots: List[int] = []
    if not rows:
        return rows, pivots
    ncol = len(rows[0])
    rix = 0
    for c in range(ncol):
        piv = next((t for t in range(rix, len(rows)) if rows[t][c] != 0), None)
        if piv is None:
            continue
        rows[rix], rows[piv] = rows[piv], rows[rix]
        p = rows[rix][c]
        rows[rix] = [x / p for x in rows[rix]]
        for t in range(len(rows)):
            if t != rix and rows[t][c] != 0:
                q = rows[t][c]
                rows[t] = [x - q * y for x, y in zip(rows[t], rows[rix])]
        pivots.append(c)
        rix += 1
        if rix == len(rows):
            break
    return rows, pivots


def certify_vertex(cd: CartanData, word: Sequence[int], m: Sequence, a: Sequence) -> bool:
    """``a`` lies in ``Delta_{i,m}`` and ``r`` independent constraints are tight there."""
    if not in_Delta(cd, word, m, a):
        return False
    return _rank(tight_forms(cd, word, m, a)) == len(word)


# ---------------------------------------------------------------- convex hulls

@dataclass
class HullResult:
    """V- and H-description of a polytope.

    Facets are pairs ``(normal, offset)`` meaning ``normal . x <= offset``;
    equations ``(normal, offset)`` mean equality and describe the affine hull.
    """

    vertices: List[RationalPoint]
    facets: List[Tuple[Tuple[int, ...], Fraction]]
    dim: int
    ambient_dim: int
    equations: List[Tuple[Tuple[int, ...], Fraction]] = field(default_factory=list)

    def contains(self, x: Sequence) -> bool:
        x = as_point(x)
        return all(_dot(n, x) <= o for n, o in self.facets) and all(_dot(n, x) == o for n, o in self.equations)

    def slacks(self, x: Sequence) -> List[Fraction]:
        x = as_point(x)
        return [o - _dot(n, x) for n, o in self.facets]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "ambient_dim": self.ambient_dim,
            "vertices": [[rat(c) for c in v] for v in self.vertices],
            "facets": [{"normal": list(n), "offset": rat(o)} for n, o in self.facets],
            "equations": [{"normal": list(n), "offset": rat(o)} for n, o in self.equations],
        }


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def _prim_int(vec: Sequence[int]) -> Tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def _solve(mat: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    n = len(mat)
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    rows, piv = _rref(aug)
    if piv != list(range(n)):
        raise ValueError("singular system")
    return [rows[t][n] for t in range(n)]


def _dd_full(pts: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Facets ``(n, o)`` with ``n.p <= o`` of the full dimensional hull of integer points.

    Double description on the cone of valid inequalities, inserting one
    point constraint at a time.
    """
    k = len(pts[0])
    # initial simplex
    basis: List[int] = []
    acc: List[List[Fraction]] = []
    for q, p in enumerate(pts):
        trial = acc + [[Fraction(x) for x in p] + [Fraction(1)]]
        if _rank(trial) == len(trial):
            acc = trial
            basis.append(q)
            if len(basis) == k + 1:
                break
    rows = [list(pts[q]) + [-1] for q in basis]
    mat = [[Fraction(x) for x in row] for row in rows]
    rays: List[Tuple[int, ...]] = []
    tight: List[frozenset] = []
    for j in range(k + 1):
        rhs = [Fraction(-1 if t == j else 0) for t in range(k + 1)]
        sol = _solve(mat, rhs)
        rays.append(primitive(sol))
        tight.append(frozenset(basis[t] for t in range(k + 1) if t != j))
    in_basis = set(basis)
    for q, p in enumerate(pts):
        if q in in_basis:
            continue
        row = tuple(p) + (-1,)
        s = [_dot(row, y) for y in rays]
        plus = [t for t, v in enumerate(s) if v > 0]
        if not plus:
            for t, v in enumerate(s):
                if v == 0:
                    tight[t] = tight[t] | {q}
            continue
        minus = [t for t, v in enumerate(s) if v < 0]
        new_rays = []
        new_tight = []
        for t, v in enumerate(s):
            if v < 0:
                new_rays.append(rays[t])
                new_tight.append(tight[t])
            elif v == 0:
                new_rays.append(rays[t])
                new_tight.append(tight[t] | {q})
        for u in plus:
            for w in minus:
                common = tight[u] & tight[w]
                if len(common) < k - 1:
                    continue
                if any(z != u and z != w and common <= tight[z] for z in range(len(rays))):
                    continue
                y = tuple(s[u] * b - s[w] * c for b, c in zip(rays[w], rays[u]))
                new_rays.append(_prim_int(y))
                new_tight.append(common | {q})
        rays, tight = new_rays, new_tight
    return [y for y in rays if any(y[:k])]


def convex_hull(points: Iterable[Sequence]) -> HullResult:
    """Exact convex hull of a finite set of rational points (ambient dimension at most 8)."""
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise ValueError("convex hull of an empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    if d > MAX_HULL_DIM:
        raise ValueError(f"ambient dimension {d} exceeds the cap of {MAX_HULL_DIM}")
    p0 = pts[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in pts[1:]]
    red, piv = _rref([list(r) for r in diffs]) if diffs else ([], [])
    kdim = len(piv)
    # equations: null space of the difference rows
    equations = []
    free = [c for c in range(d) if c not in piv]
    for fcol in free:
        vec = [Fraction(0)] * d
        vec[fcol] = Fraction(1)
        for t, pc in enumerate(piv):
            vec[pc] = -red[t][fcol]
        n = primitive(vec)
        equations.append((n, _dot(n, p0)))
    if kdim == 0:
        return HullResult([p0], [], 0, d, equations)
    den = 1
    for p in pts:
        for x in p:
            den = den * x.denominator // gcd(den, x.denominator)
    proj = [tuple(int(p[c] * den) for c in piv) for p in pts]
    if kdim == 1:
        lo, hi = min(proj), max(proj)
        raw = [((-1,), -lo[0]), ((1,), hi[0])]
    else:
        raw = [(y[:kdim], y[kdim]) for y in _dd_full(proj)]
    facets = []
    for n, o in raw:
        full = [0] * d
        for t, c in enumerate(piv):
            full[c] = n[t]
        facets.append((tuple(full), Fraction(o, den)))
    facets.sort()
    vertices = []
    for p, q in zip(pts, proj):
        tight = [n for n, o in raw if _dot(n, q) == o]
        if _rank(tight) == kdim:
            vertices.append(p)
    return HullResult(vertices, facets, kdim, d, equations)


def dilation_sample(cd: CartanData, word: Sequence[int], m: Sequence[int], depth: int) -> List[RationalPoint]:
    """Points ``a / k`` for ``a`` in ``Delta_{i,km} ∩ Z^r`` and ``k = 1..depth``."""
    out = set()
    for k in range(1, depth + 1):
        for a in lattice_points(cd, word, m, k):
            out.add(tuple(Fraction(x, k) for x in a))
    return sorted(out)


# ---------------------------------------------------------------- verification

@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: Optional[dict] = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample}


@dataclass
class VerifyReport:
    word: Tuple[int, ...]
    m: Tuple[int, ...]
    depth: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"word": list(self.word), "m": list(self.m), "depth": self.depth,
                "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def cutting_weight_scale(cd: CartanData, word: Sequence[int], m: Sequence[int], k: int) -> int:
    """``M`` with ``lam = M * (sum of fundamental weights)`` for the cutting check."""
    top = 0
    for a in ii_box(cd, word, m, k):
        top = max(top, max(a))
    return top + 1


def verify(cd: CartanData, word: Sequence[int], m: Sequence[int], depth: int = 2, cap: Optional[int] = None) -> VerifyReport:
    """Cross-check the crystal side against the polytope side for ``k = 1..depth``.

    (a) Omega-image of ``B_{i,km}`` equals ``Delta_{i,km} ∩ Z^r``;
    (b) level-1 sums land in level 2;
    (c) ``Omega = A Omega' + B m``;
    (d) eps from ``Psi~`` equals the tensor-rule eps;
    (e) ``(m~, a)`` in ``S_i`` iff ``Omega(T_lam(m~, a)) = a``.
    """
    from .crystal import DEFAULT_CAP
    from .gendem import (
        apply_transform,
        check_word_m,
        enumerate_gendem,
        eps_via_psi_tilde,
        omega,
        omega_prime,
        t_lambda,
        transform_matrices,
    )
    from .tensor import t_eps

    word, m = check_word_m(cd, word, m)
    if depth < 1:
        raise RootSystemError("depth must be at least 1")
    cap = DEFAULT_CAP if cap is None else cap
    A, B = transform_matrices(cd, word)
    checks = {name: CheckResult(name, True) for name in ("a_image", "b_semigroup", "c_transform", "d_eps", "e_cutting")}

    def fail(name, payload):
        c = checks[name]
        if c.passed:
            c.passed = False
            c.counterexample = payload

    levels = {}
    for k in range(1, depth + 1):
        km = tuple(k * x for x in m)
        crystal = enumerate_gendem(cd, word, km, cap=cap)
        image = crystal.omega_image()
        pts = lattice_points(cd, word, m, k)
        levels[k] = set(pts)
        checks["a_image"].checked += 1
        if image != pts:
            fail("a_image", {"k": k, "only_crystal": [list(x) for x in sorted(set(image) - set(pts))][:10],
                             "only_polytope": [list(x) for x in sorted(set(pts) - set(image))][:10]})
        for a, b in crystal.by_omega.items():
            checks["c_transform"].checked += 1
            ap = omega_prime(cd, word, b)
            if apply_transform(A, B, ap, km) != a:
                fail("c_transform", {"k": k, "omega": list(a), "omega_prime": list(ap)})
            for i in range(1, cd.rank + 1):
                checks["d_eps"].checked += 1
                want = t_eps(cd, i, b)
                got = eps_via_psi_tilde(cd, word, km, a, i)
                if want != got:
                    fail("d_eps", {"k": k, "omega": list(a), "i": i, "tensor": want, "formula": got})
        M = cutting_weight_scale(cd, word, m, k)
        lam = (M,) * cd.rank
        for a in ii_box(cd, word, m, k):
            checks["e_cutting"].checked += 1
            left = in_S(cd, word, km[:-1], a)
            x = t_lambda(cd, word, km[:-1], a, lam)
            right = x is not None and omega(cd, word, x, strict=False) == a
            if left != right:
                fail("e_cutting", {"k": k, "a": list(a), "in_S": left, "omega_matches": right, "M": M})
    if depth >= 2:
        one, two = sorted(levels[1]), levels[2]
        for x, y in itertools.combinations_with_replacement(one, 2):
            checks["b_semigroup"].checked += 1
            s = tuple(u + v for u, v in zip(x, y))
            if s not in two:
                fail("b_semigroup", {"x": list(x), "y": list(y)})
    return VerifyReport(word, m, depth, list(checks.values()))
