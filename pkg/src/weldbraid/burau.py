"""Burau-type matrices of VB_n over Z[WB_{n+1}] and their evaluated Laurent forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Union

from .galgebra import HTILDE, AlgebraElement, RepMatrix, WeldedAmbient, identity
from .laurent import ONE, ZERO, LaurentPoly, alpha, beta
from .words import GenSymbol, parse_word

DELTA = "delta"
SYMBOLIC = "symbolic"
EVALUATED = "evaluated"


@dataclass(frozen=True)
class BurauParams:
    n: int
    alpha: LaurentPoly = field(default_factory=alpha)
    beta: LaurentPoly = field(default_factory=beta)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"Burau matrices need n >= 2, got {self.n}")
        for name in ("alpha", "beta"):
            if not getattr(self, name).is_unit():
                raise ValueError(f"{name} must be an invertible monomial, got {getattr(self, name)}")


def _check_letter(g: GenSymbol, n: int) -> None:
    if g.kind not in ("s", "t"):
        raise ValueError(f"Burau matrices are defined on sigma/tau letters, got {g}")
    if not 1 <= g.i <= n - 1:
        raise ValueError(f"generator index {g.i} out of range 1..{n - 1}")


def _with_block(n: int, diag, block, i: int, zero):
    rows = [[diag if r == c else zero for c in range(n)] for r in range(n)]
    for (dr, dc), v in block.items():
        rows[i - 1 + dr][i - 1 + dc] = v
    return rows


@lru_cache(maxsize=None)
def _symbolic(g: GenSymbol, p: BurauParams) -> RepMatrix:
    n, i = p.n, g.i
    amb = WeldedAmbient(n + 1)
    zero = AlgebraElement.zero(amb)

    def el(word, coeff=ONE):
        return AlgebraElement.of(amb.element(word), coeff)

    if g.kind == "s":
        s = f"s{i}"
        a = el(s) - el(f"{s} x{i} x{i + 1} X{i}", p.alpha)
        b = el(f"{s} x{i}", p.alpha)
        c = el(s)
        if g.sign > 0:
            block = {(0, 0): a, (0, 1): b, (1, 0): c, (1, 1): zero}
            diag = c
        else:
            # inverse of [[a, b], [c, 0]] is [[0, c^-1], [b^-1, -b^-1 a c^-1]]
            b_inv, c_inv = b.inverse(), c.inverse()
            block = {(0, 0): zero, (0, 1): c_inv, (1, 0): b_inv, (1, 1): -(b_inv * a * c_inv)}
            diag = c_inv
    else:
        tw = f"t{i}" if g.sign > 0 else f"T{i}"
        diag = el(tw)
        block = {(0, 0): zero, (0, 1): el(tw, p.beta.inverse()), (1, 0): el(tw, p.beta), (1, 1): zero}
    return RepMatrix(_with_block(n, diag, block, i, zero), DELTA, amb)


@lru_cache(maxsize=None)
def _evaluated(g: GenSymbol, p: BurauParams) -> RepMatrix:
    a, b = p.alpha, p.beta
    if g.kind == "s":
        if g.sign > 0:
            block = {(0, 0): ONE - a, (0, 1): a, (1, 0): ONE, (1, 1): ZERO}
        else:
            a_inv = a.inverse()
            block = {(0, 0): ZERO, (0, 1): ONE, (1, 0): a_inv, (1, 1): ONE - a_inv}
    else:
        block = {(0, 0): ZERO, (0, 1): b.inverse(), (1, 0): b, (1, 1): ZERO}
    return RepMatrix(_with_block(p.n, ONE, block, g.i, ZERO), DELTA)


def _params(n_or_params, n=None) -> BurauParams:
    if isinstance(n_or_params, BurauParams):
        return n_or_params
    return BurauParams(int(n_or_params))


def burau_symbolic(g: GenSymbol, params: Union[BurauParams, int]) -> RepMatrix:
    """V(g) with entries in Z[WB_{n+1}]; inverse letters give the exact inverse matrix."""
    p = _params(params)
    _check_letter(g, p.n)
    return _symbolic(g, p)


def burau_evaluated(g: GenSymbol, params: Union[BurauParams, int]) -> RepMatrix:
    """Closed-form image of V(g) under the map sending every group element to 1."""
    p = _params(params)
    _check_letter(g, p.n)
    return _evaluated(g, p)


def word_matrix(w: Union[str, Sequence[GenSymbol]], params: Union[BurauParams, int], mode: str = EVALUATED) -> RepMatrix:
    p = _params(params)
    if isinstance(w, str):
        w = parse_word(w)
    if mode == SYMBOLIC:
        out = identity(p.n, DELTA, WeldedAmbient(p.n + 1))
        gen = burau_symbolic
    elif mode == EVALUATED:
        out = identity(p.n, DELTA)
        gen = burau_evaluated
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for g in w:
        out = out @ gen(g, p)
    return out


def evaluate(m: RepMatrix) -> RepMatrix:
    """Entrywise augmentation of a symbolic Burau matrix."""
    return m.augment(HTILDE)
