"""Finite root systems in the fundamental-weight basis.

Weights are plain integer tuples ``(l_1, ..., l_n)`` meaning
``l_1 w_1 + ... + l_n w_n``.  Simple roots are recovered from the Cartan
matrix: ``alpha_j`` has coordinates ``c[i][j]`` for ``i = 1..n``, so the
pairing of a weight with the coroot ``h_i`` is just its ``i``-th coordinate.

Indices are 1-based in every public function, as in the usual labelling of
Dynkin diagrams.  Internally everything is stored 0-based.

The ``G2`` matrix is oriented so that node 1 is the short root
(``c[1][2] = -3``), ``C_n`` has the long root at node ``n`` and ``B_n`` the
short root at node ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence, Tuple, Union

Weight = Tuple[int, ...]
RationalWeight = Tuple[Fraction, ...]
Word = Tuple[int, ...]
Multidegree = Tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid root-system data or an index out of range."""


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix ``cartan[i][j] = <alpha_j, h_i>`` with symmetrizers ``sym``.

    ``sym[i] * cartan[i][j] == sym[j] * cartan[j][i]``; the smallest entries of
    ``sym`` are 1 (short roots have squared length 2).
    """

    cartan: Tuple[Tuple[int, ...], ...]
    sym: Tuple[int, ...]
    name: str = ""

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def c(self, i: int, j: int) -> int:
        """Cartan entry for 1-based indices."""
        return self.cartan[i - 1][j - 1]

    def check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.rank):
            raise RootSystemError(f"index {i!r} out of range 1..{self.rank}")

    def __str__(self) -> str:
        return self.name or f"Cartan{[list(r) for r in self.cartan]}"


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                for k in range(col, n):
                    m[r][k] -= factor * m[col][k]
    return det


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    n = len(cartan)
    d: list = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or cartan[i][j] == 0:
                    continue
                dj = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise RootSystemError("Cartan matrix is not symmetrizable")
    # normalize each connected component so its smallest entry is 1
    out = [Fraction(0)] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and i != j and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        low = min(d[i] for i in comp)
        for i in comp:
            out[i] = d[i] / low
    for x in out:
        if x.denominator != 1:
            raise RootSystemError("symmetrizer is not integral")
    return tuple(int(x) for x in out)


def cartan_from_matrix(matrix: Sequence[Sequence[int]], name: str = "") -> CartanData:
    """Validate a user-supplied Cartan matrix of finite type."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise RootSystemError("Cartan matrix must be a non-empty square matrix")
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if not isinstance(v, int) or isinstance(v, bool):
                raise RootSystemError(f"entry ({i + 1},{j + 1}) is not an integer")
            if i == j and v != 2:
                raise RootSystemError(f"diagonal entry ({i + 1},{i + 1}) must be 2")
            if i != j and v > 0:
                raise RootSystemError(f"off-diagonal entry ({i + 1},{j + 1}) must be <= 0")
            if i != j and (v == 0) != (rows[j][i] == 0):
                raise RootSystemError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) must vanish together")
    sym = _symmetrizer(rows)
    symmetrized = [[sym[i] * rows[i][j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _det([r[:k] for r in symmetrized[:k]]) <= 0:
            raise RootSystemError("Cartan matrix is not of finite type (symmetrization not positive definite)")
    return CartanData(tuple(tuple(r) for r in rows), sym, name)


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@lru_cache(maxsize=None)
def cartan_from_type(family: str, rank: int) -> CartanData:
    """Standard Cartan matrix of type ``family`` and rank ``rank``.

    >>> cartan_from_type("A", 2).cartan
    ((2, -1), (-1, 2))
    """
    family = family.upper()
    if family not in _VALID_RANKS or not isinstance(rank, int) or not _VALID_RANKS[family](rank):
        raise RootSystemError(f"no finite root system of type {family}{rank}")
    n = rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j], c[j][i] = cij, cji

    if family in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif family == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        # Bourbaki labelling: 1-3-4-5-6(-7-8), 2 attached to 4
        link(0, 2)
        link(2, 3)
        link(1, 3)
        for i in range(3, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    else:
        # node 1 short; pinned by the G2 string-cone inequality 3a_2 - a_3 + m_1 >= 0
        link(0, 1, -3, -1)
    return cartan_from_matrix(c, name=f"{family}{n}")


def parse_type(spec: str) -> CartanData:
    """Parse strings like ``"A2"`` or ``"G2"``."""
    spec = spec.strip()
    if len(spec) < 2 or not spec[1:].isdigit():
        raise RootSystemError(f"cannot parse root-system type {spec!r}")
    return cartan_from_type(spec[0], int(spec[1:]))


def rootsystem_from_json(obj: dict) -> CartanData:
    """Accept ``{"type": "A", "rank": 2}`` or ``{"cartan": [[...]]}``."""
    if "cartan" in obj:
        return cartan_from_matrix(obj["cartan"], name=obj.get("name", ""))
    if "type" in obj:
        t = str(obj["type"])
        if "rank" in obj:
            return cartan_from_type(t, int(obj["rank"]))
        return parse_type(t)
    raise RootSystemError("root-system object needs 'type' or 'cartan'")


def rootsystem_to_json(cd: CartanData) -> dict:
    return {"cartan": [list(r) for r in cd.cartan], "sym": list(cd.sym), "name": cd.name}


def fundamental(cd: CartanData, i: int, mult: int = 1) -> Weight:
    cd.check_index(i)
    return tuple(mult if k == i - 1 else 0 for k in range(cd.rank))


def simple_root(cd: CartanData, j: int) -> Weight:
    cd.check_index(j)
    return tuple(cd.cartan[i][j - 1] for i in range(cd.rank))


def pairing(cd: CartanData, lam: Sequence, i: int) -> int:
    """``<lam, h_i>``."""
    cd.check_index(i)
    if len(lam) != cd.rank:
        raise RootSystemError(f"weight {tuple(lam)} has wrong length for rank {cd.rank}")
    return lam[i - 1]


def simple_reflection(cd: CartanData, i: int, lam: Sequence) -> tuple:
    """``s_i(lam) = lam - <lam, h_i> alpha_i``; works for integer or rational weights."""
    k = pairing(cd, lam, i)
    if not k:
        return tuple(lam)
    col = i - 1
    return tuple(x - k * cd.cartan[row][col] for row, x in enumerate(lam))


def is_dominant(lam: Sequence) -> bool:
    return all(x >= 0 for x in lam)


def _root_pair(cd: CartanData, beta: Sequence[int], i: int) -> int:
    # <beta, h_i> for beta in simple-root coordinates
    return sum(b * cd.cartan[i][j] for j, b in enumerate(beta))


def _reflect_root(cd: CartanData, i: int, beta: Sequence[int]) -> Tuple[int, ...]:
    k = _root_pair(cd, beta, i)
    out = list(beta)
    out[i] -= k
    return tuple(out)


def is_reduced(cd: CartanData, word: Sequence[int]) -> bool:
    """True iff ``s_{i_1} ... s_{i_r}`` has length ``r``.

    Uses the exchange criterion: the word is reduced iff every root
    ``s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`` is positive.
    """
    n = cd.rank
    for i in word:
        cd.check_index(i)
    for k, ik in enumerate(word):
        beta = tuple(1 if t == ik - 1 else 0 for t in range(n))
        for j in reversed(word[:k]):
            beta = _reflect_root(cd, j - 1, beta)
        if any(b < 0 for b in beta):
            return False
    return True


@lru_cache(maxsize=None)
def positive_roots(cd: CartanData) -> Tuple[Tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, sorted by height."""
    n = cd.rank
    simple = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                gamma = _reflect_root(cd, i, beta)
                if all(g >= 0 for g in gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return tuple(sorted(found, key=lambda b: (sum(b), b)))


def weyl_dim(cd: CartanData, lam: Sequence[int]) -> int:
    """Dimension of the irreducible module of highest weight ``lam``.

    Weyl dimension formula, product over positive roots of
    ``<lam + rho, beta^v> / <rho, beta^v>``.
    """
    if len(lam) != cd.rank:
        raise RootSystemError("weight has wrong length")
    if not is_dominant(lam):
        raise RootSystemError(f"weight {tuple(lam)} is not dominant")
    d = cd.sym
    num = Fraction(1)
    for beta in positive_roots(cd):
        # beta^v = sum_j beta_j (d_j / d_beta) h_j; d_beta cancels in the ratio
        rho = sum(b * d[j] for j, b in enumerate(beta))
        shifted = sum(b * d[j] * (lam[j] + 1) for j, b in enumerate(beta))
        num *= Fraction(shifted, rho)
    assert num.denominator == 1
    return int(num)


def primitive(vec: Sequence[Fraction]) -> Tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    den = 1
    for x in vec:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def as_word(cd: CartanData, word: Union[Sequence[int], str]) -> Word:
    if isinstance(word, str):
        word = [int(t) for t in word.replace(" ", "").split(",") if t]
    word = tuple(int(x) for x in word)
    if not word:
        raise RootSystemError("word must be non-empty")
    for i in word:
        cd.check_index(i)
    return word
