"""Sparse multivariate Laurent polynomials with integer coefficients.

Parameters are formal invertible variables: ``alpha``, ``beta`` and the
leveled families ``T(r, i)``.  A polynomial is stored as a mapping from
exponent vectors (sorted tuples of ``(Param, exp)`` pairs, zero exponents
dropped) to nonzero integers, so equal polynomials have identical storage.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple, Union


class Param(NamedTuple):
    """A formal parameter; tuple order is the canonical printing order."""

    kind: int  # 0 = alpha, 1 = beta, 2 = leveled T
    level: int = 0
    index: int = 0

    @property
    def name(self) -> str:
        if self.kind == 0:
            return "a"
        if self.kind == 1:
            return "b"
        if self.level == 1:
            return f"t{self.index}"
        if self.level == 2:
            return f"s{self.index}"
        return f"t[{self.level}]{self.index}"

    def __repr__(self) -> str:
        return self.name


ALPHA = Param(0)
BETA = Param(1)


def T(level: int, index: int) -> Param:
    if level < 1 or index < 1:
        raise ValueError(f"T parameters need level >= 1 and index >= 1, got ({level}, {index})")
    return Param(2, level, index)


_NAME_RE = re.compile(r"^(?:(a|alpha)|(b|beta)|t(\d+)|s(\d+)|t\[(\d+)\](\d+))$")


def param_from_name(name: str) -> Param:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"unknown parameter name {name!r}")
    if m.group(1):
        return ALPHA
    if m.group(2):
        return BETA
    if m.group(3):
        return T(1, int(m.group(3)))
    if m.group(4):
        return T(2, int(m.group(4)))
    return T(int(m.group(5)), int(m.group(6)))


Monomial = Tuple[Tuple[Param, int], ...]
_ONE_MONO: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for p, e in m2:
        e2 = d.get(p, 0) + e
        if e2:
            d[p] = e2
        else:
            del d[p]
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class LaurentPoly:
    """Immutable integer Laurent polynomial in named parameters."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        self._terms: Dict[Monomial, int] = {m: c for m, c in items if c}
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({_ONE_MONO: int(c)})

    @classmethod
    def var(cls, p: Union[Param, str], exp: int = 1) -> "LaurentPoly":
        if isinstance(p, str):
            p = param_from_name(p)
        if exp == 0:
            return cls.const(1)
        return cls({((p, exp),): 1})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # inspection -----------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {_ONE_MONO: 1}

    def is_unit(self) -> bool:
        """True iff this is a single monomial with coefficient +-1."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def params(self) -> set:
        return {p for m in self._terms for p, _ in m}

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit of the Laurent ring")
        ((m, c),) = self._terms.items()
        return LaurentPoly({tuple((p, -e) for p, e in m): c})

    # arithmetic -----------------------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        d = dict(self._terms)
        for m, c in other._terms.items():
            d[m] = d.get(m, 0) + c
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        d: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution ---------------------------------------------------------
    def substitute(self, bindings: Mapping[Param, "LaurentPoly"]) -> "LaurentPoly":
        """Replace bound parameters; a parameter seen with a negative exponent
        must be bound to a unit."""
        if not bindings:
            return self
        bindings = {p: LaurentPoly.coerce(v) for p, v in bindings.items()}
        out = LaurentPoly()
        for m, c in self._terms.items():
            term = LaurentPoly({tuple((p, e) for p, e in m if p not in bindings): c})
            for p, e in m:
                if p not in bindings:
                    continue
                v = bindings[p]
                if e < 0 and not v.is_unit():
                    raise ValueError(
                        f"cannot substitute non-unit {v} for {p.name}, which occurs with exponent {e}"
                    )
                term = term * (v ** e)
            out = out + term
        return out

    # rendering ------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: (_mono_degree(mc[0]) != 0, sum(abs(e) for _, e in mc[0]), mc[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [p.name if e == 1 else f"{p.name}^{e}" for p, e in m]
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = str(a) + "*" + "*".join(factors)
            if idx == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    # JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": c, "exps": {p.name: e for p, e in m}} for m, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        out = cls()
        for term in obj["terms"]:
            mono = tuple(sorted((param_from_name(k), int(v)) for k, v in term["exps"].items() if v))
            out = out + cls({mono: int(term["coeff"])})
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def alpha(exp: int = 1) -> LaurentPoly:
    return LaurentPoly.var(ALPHA, exp)


def beta(exp: int = 1) -> LaurentPoly:
    return LaurentPoly.var(BETA, exp)


def t(index: int, level: int = 1, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.var(T(level, index), exp)


def substitute(p: LaurentPoly, bindings: Mapping[Param, LaurentPoly]) -> LaurentPoly:
    return p.substitute(bindings)


def rename_level(p: LaurentPoly, old: int, new: int) -> LaurentPoly:
    """Move every T(old, i) to T(new, i)."""
    d = {}
    for m, c in p.items():
        m2 = tuple(sorted((T(new, q.index) if q.kind == 2 and q.level == old else q, e) for q, e in m))
        d[m2] = d.get(m2, 0) + c
    return LaurentPoly(d)


# parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(t\[\d+\]\d+|[A-Za-z]+\d*)|(\^)|([-+*()]))")


def parse_poly(text: str) -> LaurentPoly:
    """Parse the text rendering (``1 - a``, ``t2*s2``, ``b^-1``, ``(1-t1)*(1-s1)``)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        pos = m.end()
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        elif m.group(3):
            tokens.append(("op", "^"))
        else:
            tokens.append(("op", m.group(4)))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        val = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while True:
            if peek() == ("op", "*"):
                take()
                val = val * factor()
            elif peek()[0] in ("int", "name") or peek() == ("op", "("):
                val = val * factor()
            else:
                return val

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            sign = 1
            if peek() == ("op", "-"):
                take()
                sign = -1
            kind, k = take()
            if kind != "int":
                raise ValueError(f"expected integer exponent in {text!r}")
            return base ** (sign * k)
        return base

    def atom():
        kind, val = take()
        if kind == "int":
            return LaurentPoly.const(val)
        if kind == "name":
            return LaurentPoly.var(param_from_name(val))
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result


def parse_bindings(assignments: Iterable[str]) -> Dict[Param, LaurentPoly]:
    """``["b=1", "a=t1"]`` -> substitution mapping."""
    out: Dict[Param, LaurentPoly] = {}
    for item in assignments:
        if "=" not in item:
            raise ValueError(f"substitution {item!r} must look like name=value")
        lhs, rhs = item.split("=", 1)
        out[param_from_name(lhs.strip())] = parse_poly(rhs)
    return out
