"""Generalized Demazure crystals ``B_{i,m}`` and their string parameterizations.

``B_{i,m}`` lives in ``B(m_1 w_{i_1}) (x) ... (x) B(m_r w_{i_r})`` and is
built from the right: the last level is the ``f_{i_r}``-string through the
highest element, and level ``s`` collects every ``f_{i_s}^a`` applied to
``b_{m_s w_{i_s}} (x) x`` for ``x`` in level ``s+1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .crystal import DEFAULT_CAP, CapExceeded, LSPath, highest_path, path_crystal
from .rootsys import (
    CartanData,
    Multidegree,
    RootSystemError,
    Word,
    fundamental,
    is_dominant,
    is_reduced,
)
from .tensor import TensorElem, f_string, signature, t_e_pow, t_f_pow

StringVector = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


class ConsistencyError(AssertionError):
    """Raised when peeling an element does not leave a highest weight first factor."""


def check_word_m(cd: CartanData, word: Sequence[int], m: Sequence[int]) -> Tuple[Word, Multidegree]:
    word = tuple(int(x) for x in word)
    m = tuple(int(x) for x in m)
    if len(word) == 0:
        raise RootSystemError("word must be non-empty")
    if len(word) != len(m):
        raise RootSystemError(f"word has length {len(word)} but multidegree has length {len(m)}")
    for i in word:
        cd.check_index(i)
    if any(x < 0 for x in m):
        raise RootSystemError("multidegree entries must be non-negative")
    return word, m


def shapes_for(cd: CartanData, word: Sequence[int], m: Sequence[int]) -> List[Tuple[int, ...]]:
    return [fundamental(cd, i, mk) for i, mk in zip(word, m)]


@dataclass
class GenDemCrystal:
    cd: CartanData
    word: Word
    multidegree: Multidegree
    elements: List[TensorElem] = field(default_factory=list)
    by_omega: Dict[StringVector, TensorElem] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __post_init__(self):
        self._members = set(self.elements)

    @property
    def shapes(self) -> List[Tuple[int, ...]]:
        return shapes_for(self.cd, self.word, self.multidegree)

    def omega_image(self) -> List[StringVector]:
        return sorted(self.by_omega)


def _string(cd: CartanData, i: int, x: TensorElem, out: List[TensorElem], cap: int) -> None:
    out.extend(f_string(cd, i, x))
    if len(out) > cap:
        raise CapExceeded(cap)


def enumerate_gendem(cd: CartanData, word: Sequence[int], m: Sequence[int], cap: int = DEFAULT_CAP) -> GenDemCrystal:
    """Build ``B_{i,m}`` level by level and index it by ``Omega_i``."""
    word, m = check_word_m(cd, word, m)
    shapes = shapes_for(cd, word, m)
    r = len(word)
    level: List[TensorElem] = []
    _string(cd, word[-1], TensorElem([highest_path(cd, shapes[-1])], [shapes[-1]]), level, cap)
    for s in range(r - 2, -1, -1):
        top = highest_path(cd, shapes[s])
        seen = set()
        nxt: List[TensorElem] = []
        for x in level:
            start = x.prepend(top, shapes[s])
            string: List[TensorElem] = []
            _string(cd, word[s], start, string, cap)
            for y in string:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(nxt) > cap:
                        raise CapExceeded(cap)
        level = nxt
    by_omega: Dict[StringVector, TensorElem] = {}
    for x in level:
        a = omega(cd, word, x)
        if a in by_omega:
            raise ConsistencyError(f"string parameterization {a} is not injective")
        by_omega[a] = x
    elements = [by_omega[a] for a in sorted(by_omega)]
    return GenDemCrystal(cd, word, m, elements, by_omega)


def _is_highest(cd: CartanData, p: LSPath, shape) -> bool:
    return p.segments == ((tuple(shape), Fraction(1)),)


def peel(cd: CartanData, word: Sequence[int], b: TensorElem, strict: bool = True):
    """Peel ``b`` factor by factor.

    Yields ``(s, b(s), a_s, phi_s)`` where ``b(s)`` is the element before
    the ``e_{i_s}``-string of length ``a_s = eps_{i_s}(b(s))`` is removed and
    ``phi_s = phi_{i_s}(b(s))``.  With ``strict`` a first
    factor that is not highest raises :class:`ConsistencyError`; otherwise
    the generator stops early (the caller sees fewer than ``r`` entries).
    """
    if len(word) != len(b):
        raise RootSystemError("element and word differ in length")
    x = b
    for s, i in enumerate(word):
        minus, plus = signature(cd, i, x)
        a = sum(minus)
        yield s, x, a, sum(plus)
        y = t_e_pow(cd, i, a, x)
        if s == len(word) - 1:
            # the last factor only has to be highest for genuine elements of B_{i,m}
            if strict and not _is_highest(cd, y.head(), y.shapes[0]):
                raise ConsistencyError(f"factor {s + 1} is not highest after peeling {b!r}")
            return
        if not _is_highest(cd, y.head(), y.shapes[0]):
            if strict:
                raise ConsistencyError(f"factor {s + 1} is not highest after peeling {b!r}")
            return
        x = y.tail()


def omega(cd: CartanData, word: Sequence[int], b: TensorElem, strict: bool = True) -> Optional[StringVector]:
    """``Omega_i(b)``: lengths of the maximal ``e``-strings met while peeling.

    Returns ``None`` in non-strict mode when peeling breaks down.
    """
    out = [a for _, _, a, _ in peel(cd, word, b, strict)]
    if len(out) != len(word):
        return None
    return tuple(out)


def omega_prime(cd: CartanData, word: Sequence[int], b: TensorElem) -> StringVector:
    """Same peeling as :func:`omega` but records ``phi_{i_k}(b(k))``."""
    return tuple(ph for _, _, _, ph in peel(cd, word, b, True))


def reconstruct(cd: CartanData, word: Sequence[int], m: Sequence[int], a: Sequence[int],
                last_shape=None) -> Optional[TensorElem]:
    """``f_{i_1}^{a_1}(b_1 (x) f_{i_2}^{a_2}(b_2 (x) ... f_{i_r}^{a_r} b_r))``.

    ``last_shape`` replaces the highest weight of the final factor, which
    is how the elements ``T_lam(m~, a)`` are formed.  ``None`` means 0.
    """
    word, m = check_word_m(cd, word, m)
    shapes = shapes_for(cd, word, m)
    if last_shape is not None:
        shapes[-1] = tuple(last_shape)
    x: Optional[TensorElem] = TensorElem([highest_path(cd, shapes[-1])], [shapes[-1]])
    x = t_f_pow(cd, word[-1], a[-1], x)
    for s in range(len(word) - 2, -1, -1):
        if x is None:
            return None
        x = t_f_pow(cd, word[s], a[s], x.prepend(highest_path(cd, shapes[s]), shapes[s]))
    return x


def t_lambda(cd: CartanData, word: Sequence[int], m_tilde: Sequence[int], a: Sequence[int],
             lam: Sequence[int]) -> Optional[TensorElem]:
    """``T_lam(m~, a)``: the nested expression with ``b_lam`` as the last factor."""
    if not is_dominant(lam):
        raise RootSystemError("test weight must be dominant")
    m = tuple(m_tilde[: len(word) - 1]) + (0,)
    return reconstruct(cd, word, m, a, last_shape=lam)


def _det_int(mat: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in row] for row in mat]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            q = rows[r][c] / rows[c][c]
            if q:
                rows[r] = [x - q * y for x, y in zip(rows[r], rows[c])]
    return int(det)


def transform_matrices(cd: CartanData, word: Sequence[int]) -> Tuple[Matrix, Matrix]:
    """Integer matrices ``(A, B)`` with ``Omega(b) = A Omega'(b) + B m``.

    Obtained by back substitution in
    ``a_k = m_k - a'_k + sum_{j>k} (delta_{i_k,i_j} m_j - c_{i_k,i_j} a_j)``.
    """
    word = tuple(word)
    r = len(word)
    A = [[0] * r for _ in range(r)]
    B = [[0] * r for _ in range(r)]
    for k in range(r - 1, -1, -1):
        A[k][k] -= 1
        B[k][k] += 1
        for j in range(k + 1, r):
            if word[j] == word[k]:
                B[k][j] += 1
            c = cd.c(word[k], word[j])
            if c:
                for t in range(r):
                    A[k][t] -= c * A[j][t]
                    B[k][t] -= c * B[j][t]
    A_t = tuple(tuple(row) for row in A)
    B_t = tuple(tuple(row) for row in B)
    if abs(_det_int(A_t)) != 1 or abs(_det_int(B_t)) != 1:
        raise ConsistencyError("transform matrices are not unimodular")
    return A_t, B_t


def apply_transform(A: Matrix, B: Matrix, a_prime: Sequence[int], m: Sequence[int]) -> StringVector:
    return tuple(
        sum(x * y for x, y in zip(ra, a_prime)) + sum(x * y for x, y in zip(rb, m))
        for ra, rb in zip(A, B)
    )


def psi_tilde(cd: CartanData, word: Sequence[int], m: Sequence[int], a: Sequence[int], i: int) -> Dict[int, Fraction]:
    """The values ``Psi~_i^{(j)}`` for every position ``j`` (1-based) with ``i_j = i``.

    Uses the levels ``a^{(j)}`` of the ``Psi`` recursion evaluated at ``(m~, a)``.
    """
    from .polytope import psi_eval

    rep = psi_eval(cd, word, m, a)
    out: Dict[int, Fraction] = {}
    for j in range(1, len(word) + 1):
        if word[j - 1] != i:
            continue
        lev = rep.a_levels[j]
        best = None
        for l in range(1, j + 1):
            if word[l - 1] != i:
                continue
            val = Fraction(lev[l - 1])
            val -= sum(cd.c(i, word[s - 1]) * lev[s - 1] for s in range(1, l + 1))
            val += sum(m[s - 1] for s in range(1, l) if word[s - 1] == i)
            best = val if best is None else max(best, val)
        out[j] = best
    return out


def eps_via_psi_tilde(cd: CartanData, word: Sequence[int], m: Sequence[int], a: Sequence[int], i: int) -> int:
    """``eps_i`` of the element with string parameters ``a``, from ``a`` alone.

    ``eps_i`` is the least ``n >= 0`` with ``n + Psi~_i^{(j)} >= 0`` for all
    ``j``; that is ``max(0, -min_j Psi~_i^{(j)})``, and 0 if ``i`` does not
    occur in the word.
    """
    vals = psi_tilde(cd, word, m, a, i)
    if not vals:
        return 0
    need = max(-v for v in vals.values())
    if need <= 0:
        return 0
    if need.denominator != 1:
        raise ConsistencyError("non-integral eps from integral parameters")
    return int(need)


def eps_literal_formula(cd: CartanData, word: Sequence[int], m: Sequence[int], a: Sequence[int], i: int) -> int:
    """The max-of-``Psi~`` expression read with the opposite sign, kept for comparison only."""
    vals = psi_tilde(cd, word, m, a, i)
    if not vals:
        return 0
    top = max(vals.values())
    return int(top) if top >= 0 else 0


def demazure_reduction(cd: CartanData, lam: Sequence[int], word: Sequence[int]) -> Tuple[Tuple[int, ...], Multidegree]:
    """Multidegree ``m`` and leftover weight ``lam'`` attached to ``lam`` and a reduced word.

    ``m_k = lam_{i_k}`` when ``i_k`` does not occur again later in the word
    and 0 otherwise; ``lam'`` keeps the coordinates of letters absent from
    the word.
    """
    lam = tuple(int(x) for x in lam)
    word = tuple(int(x) for x in word)
    if len(lam) != cd.rank or not is_dominant(lam):
        raise RootSystemError(f"weight {lam} is not dominant of rank {cd.rank}")
    for i in word:
        cd.check_index(i)
    if not is_reduced(cd, word):
        raise RootSystemError(f"word {word} is not reduced")
    m = tuple(lam[i - 1] if i not in word[k + 1:] else 0 for k, i in enumerate(word))
    letters = set(word)
    lam_prime = tuple(0 if (j + 1) in letters else lam[j] for j in range(cd.rank))
    return lam_prime, m
