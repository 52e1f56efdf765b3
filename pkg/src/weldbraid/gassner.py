"""Generalized Gassner matrices of the McCool group PW_n and their iteration.

Conventions for the iteration: level ``r`` uses the parameter family
``T(r, .)`` (level 1 prints as ``t``, level 2 as ``s``).  Inside the level-r
formulas the free-generator block xi^{(r-1)}_{n+1,j} is the level-(r-1)
identity with its last diagonal entry replaced by ``T(r-1, j)``; at r = 1 it
is the scalar 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Union

from .galgebra import (
    AMAP,
    AlgebraElement,
    RepMatrix,
    SemidirectAmbient,
    delete_rows_cols,
    identity,
    kron,
)
from .laurent import ONE, ZERO, LaurentPoly, T
from .words import GenSymbol, parse_word

AUG = "aug"
SYMBOLIC = "symbolic"
EVALUATED = "evaluated"

__all__ = [
    "gassner_symbolic",
    "gassner_evaluated",
    "gassner_word_matrix",
    "iterate",
    "iterated_word_matrix",
    "iteration_size",
    "kron",
    "delete_rows_cols",
]


def _check_pair(i: int, j: int, n: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"invalid generator indices ({i}, {j}) for PW_{n}")


@lru_cache(maxsize=None)
def _symbolic(i: int, j: int, n: int, inverse: bool) -> RepMatrix:
    amb = SemidirectAmbient(n)
    zero = AlgebraElement.zero(amb)

    def el(word):
        return AlgebraElement.of(amb.element(word))

    g = el(f"q{i}.{j}")
    if not inverse:
        diag = g
        ii = el(f"q{i}.{j} x{j}")
        ij = g - el(f"q{i}.{j} x{j} x{i} X{j}")
    else:
        # M = g N with N unipotent off row i, so M^-1 = N^-1 g^-1
        g_inv = g.inverse()
        diag = g_inv
        ii = el(f"X{j} Q{i}.{j}")
        ij = el(f"x{i} X{j} Q{i}.{j}") - el(f"X{j} Q{i}.{j}")
    rows = [[diag if r == c else zero for c in range(n)] for r in range(n)]
    rows[i - 1][i - 1] = ii
    rows[i - 1][j - 1] = ij
    return RepMatrix(rows, AUG, amb)


def gassner_symbolic(i: int, j: int, n: int, inverse: bool = False) -> RepMatrix:
    """C(xi_{i,j}) over Z[F_n x| PW_n] (or its inverse)."""
    _check_pair(i, j, n)
    return _symbolic(i, j, n, inverse)


@lru_cache(maxsize=None)
def _evaluated(i: int, j: int, n: int, level: int, inverse: bool) -> RepMatrix:
    tj, ti = LaurentPoly.var(T(level, j)), LaurentPoly.var(T(level, i))
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    if not inverse:
        rows[i - 1][i - 1] = tj
        rows[i - 1][j - 1] = ONE - ti
    else:
        rows[i - 1][i - 1] = tj.inverse()
        rows[i - 1][j - 1] = -(ONE - ti) * tj.inverse()
    return RepMatrix(rows, AUG)


def gassner_evaluated(i: int, j: int, n: int, level: int = 1, inverse: bool = False) -> RepMatrix:
    """Image of C(xi_{i,j}) under x_k -> t_k, PW_n -> 1: identity except (i,i)=t_j, (i,j)=1-t_i."""
    _check_pair(i, j, n)
    return _evaluated(i, j, n, level, inverse)


def gassner_word_matrix(w: Union[str, Sequence[GenSymbol]], n: int, mode: str = EVALUATED) -> RepMatrix:
    if isinstance(w, str):
        w = parse_word(w)
    if mode == SYMBOLIC:
        out = identity(n, AUG, SemidirectAmbient(n))
    elif mode == EVALUATED:
        out = identity(n, AUG)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for g in w:
        if g.kind != "q":
            raise ValueError(f"Gassner word matrices take xi letters, got {g}")
        if mode == SYMBOLIC:
            out = out @ gassner_symbolic(g.i, g.j, n, g.sign < 0)
        else:
            out = out @ gassner_evaluated(g.i, g.j, n, 1, g.sign < 0)
    return out


# iteration -------------------------------------------------------------------

Block = List[List[LaurentPoly]]


def iteration_size(n: int, r: int) -> int:
    size = 1
    for s in range(1, r + 1):
        size *= n + 1 - s
    return size


def _eye(m: int) -> Block:
    return [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]


def _free_block(n: int, level: int, k: int, power: int = 1) -> Block:
    """xi^{(level)}_{n+1,k}: identity with last diagonal entry T(level, k)^power."""
    m = iteration_size(n, level)
    out = _eye(m)
    if level >= 1:
        out[m - 1][m - 1] = LaurentPoly.var(T(level, k), power)
    return out


def _mul(a: Block, b: Block) -> Block:
    m = len(a)
    return [
        [sum((a[r][k] * b[k][c] for k in range(m) if not a[r][k].is_zero()), ZERO) for c in range(m)]
        for r in range(m)
    ]


def _scale(a: Block, s: LaurentPoly) -> Block:
    return [[e * s for e in row] for row in a]


def _sub(a: Block, b: Block) -> Block:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _assemble(blocks, m: int, p: int) -> Block:
    out = [[ZERO] * (m * p) for _ in range(m * p)]
    for (br, bc), blk in blocks.items():
        for r in range(p):
            for c in range(p):
                out[br * p + r][bc * p + c] = blk[r][c]
    return out


@lru_cache(maxsize=None)
def _level(n: int, r: int, i: int, j: int, inverse: bool):
    if r == 0:
        return ((ONE,),)
    m = n + 1 - r
    prev = [list(row) for row in _level(n, r - 1, i, j, inverse)]
    p = len(prev)
    f_j = _free_block(n, r - 1, j)
    f_j_inv = _free_block(n, r - 1, j, -1)
    f_i = _free_block(n, r - 1, i)
    tj, ti = LaurentPoly.var(T(r, j)), LaurentPoly.var(T(r, i))
    # I - t_i F_j F_i F_j^-1 and t_j F_j are diagonal, hence commute with each other
    corr = _sub(_eye(p), _scale(_mul(_mul(f_j, f_i), f_j_inv), ti))
    diag_ii = _scale(f_j, tj)
    blocks = {(b, b): prev for b in range(m)}
    if not inverse:
        blocks[(i - 1, i - 1)] = _mul(prev, diag_ii)
        blocks[(i - 1, j - 1)] = _mul(prev, corr)
    else:
        # (D N)^-1 = N^-1 D^-1, prev already holds the inverse of the previous level
        d_inv = [[e.inverse() if rr == cc else ZERO for cc, e in enumerate(row)] for rr, row in enumerate(diag_ii)]
        blocks[(i - 1, i - 1)] = _mul(d_inv, prev)
        blocks[(i - 1, j - 1)] = _mul(_scale(_mul(d_inv, corr), -ONE), prev)
    return tuple(tuple(row) for row in _assemble(blocks, m, p))


def iterate(n: int, r: int, i: int, j: int, inverse: bool = False) -> RepMatrix:
    """xi^{(r)}_{i,j}: the depth-r iterated matrix of PW_{n+1-r} starting from the
    trivial representation of PW_{n+1}; size n(n-1)...(n+1-r)."""
    if not 1 <= r <= n:
        raise ValueError(f"iteration depth {r} out of range 1..{n}")
    _check_pair(i, j, n + 1 - r)
    return RepMatrix(_level(n, r, i, j, inverse), f"iter{r}")


def iterated_word_matrix(w: Union[str, Sequence[GenSymbol]], n: int, r: int) -> RepMatrix:
    if isinstance(w, str):
        w = parse_word(w)
    out = identity(iteration_size(n, r), f"iter{r}")
    for g in w:
        if g.kind != "q":
            raise ValueError(f"iterated word matrices take xi letters, got {g}")
        out = out @ iterate(n, r, g.i, g.j, g.sign < 0)
    return out


def augmented(m: RepMatrix, level: int = 1) -> RepMatrix:
    return m.augment(AMAP, level)
