"""Points and divisors on the base curve, and the genus-2 class calculus.

On a genus-2 curve with Weierstrass points W(1..6) and hyperelliptic involution
iota, the calculus uses only the relations

    2 W(i) ~ K,    G(l,+) + G(l,-) ~ K,    W(1) + ... + W(6) ~ 3K.

Writing e_i = [W(i) - W(6)] (2-torsion), every class reduces to

    n K + p W(6) + sum eps_i e_i + (unpaired generic points),   p in {0, 1},

where eps is taken modulo (1,1,1,1,1) and stored with weight <= 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .invariants import H0Value


@dataclass(frozen=True, order=True)
class W:
    i: int

    def __post_init__(self):
        if not 1 <= self.i <= 6:
            raise ValueError(f"Weierstrass index must be in 1..6, got {self.i}")

    def iota(self) -> "W":
        return self

    def __str__(self):
        return f"W{self.i}"


@dataclass(frozen=True, order=True)
class G:
    label: str
    sheet: str = "+"

    def __post_init__(self):
        if self.sheet not in "+-" or len(self.sheet) != 1:
            raise ValueError(f"sheet must be '+' or '-', got {self.sheet!r}")

    def iota(self) -> "G":
        return G(self.label, "-" if self.sheet == "+" else "+")

    def __str__(self):
        return f"G({self.label},{self.sheet})"


@dataclass(frozen=True, order=True)
class Pt:
    """Opaque point on a base curve of genus other than 2."""

    label: str

    def __str__(self):
        return f"pt:{self.label}"


def is_genus2_point(p) -> bool:
    return isinstance(p, (W, G))


def _key(p):
    return (type(p).__name__, str(p))


class Divisor:
    """Finite Z-linear combination of points."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict | None = None):
        self._c = {p: int(n) for p, n in (coeffs or {}).items() if n}

    @classmethod
    def of(cls, *points) -> "Divisor":
        d: dict = {}
        for p in points:
            d[p] = d.get(p, 0) + 1
        return cls(d)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: _key(kv[0]))

    def __getitem__(self, p) -> int:
        return self._c.get(p, 0)

    def __add__(self, o):
        out = dict(self._c)
        for p, n in o._c.items():
            out[p] = out.get(p, 0) + n
        return Divisor(out)

    def __neg__(self):
        return Divisor({p: -n for p, n in self._c.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, k: int):
        return Divisor({p: k * n for p, n in self._c.items()})

    __rmul__ = __mul__

    def degree(self) -> int:
        return sum(self._c.values())

    def is_effective(self) -> bool:
        return all(n > 0 for n in self._c.values())

    def is_reduced(self) -> bool:
        return all(n == 1 for n in self._c.values())

    def support(self) -> list:
        return [p for p, _ in self.items()]

    def iota(self) -> "Divisor":
        return Divisor({p.iota(): n for p, n in self._c.items()})

    def __eq__(self, o):
        return isinstance(o, Divisor) and self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return "Divisor(" + " + ".join(f"{n}*{p}" for p, n in self.items()) + ")"


def divisor_sum(parts: Iterable[Divisor]) -> Divisor:
    out = Divisor()
    for d in parts:
        out = out + d
    return out


def is_pullback_from_line(D: Divisor) -> bool:
    """Whether D is a sum of hyperelliptic fibres p + iota(p) (2 W(i) counts as one).

    For an effective D of degree 2n with n <= 2 this is exactly D in |nK|, since
    h^0(nK) = n + 1 means every member of |nK| is pulled back from P^1.
    """
    for p, n in D.items():
        if isinstance(p, W):
            if n % 2:
                return False
        elif isinstance(p, G):
            if D[p.iota()] != n:
                return False
        else:
            return False
    return True


@dataclass(frozen=True)
class PicClassG2:
    degree: int
    eps: tuple
    canonical_multiple: int
    residual: tuple  # ((label, coefficient on G(label,+)), ...)

    @property
    def parity(self) -> int:
        """Coefficient (0 or 1) of W(6) in the reduced form."""
        return self.degree - 2 * self.canonical_multiple - sum(n for _, n in self.residual)

    def is_trivial(self) -> bool | None:
        """None when unpaired generic points block the test."""
        if self.residual:
            return None
        return self.degree == 0 and self.canonical_multiple == 0 and not any(self.eps)


CANONICAL = None  # filled below


def _canonical_eps(eps) -> tuple:
    eps = tuple(x % 2 for x in eps)
    if sum(eps) > 2:
        eps = tuple(1 - x for x in eps)
    return eps


def g2_class_reduce(D: Divisor) -> PicClassG2:
    cm = 0
    eps = [0] * 5
    wsum = 0
    residual = {}
    for p, n in D.items():
        if isinstance(p, W):
            wsum += n
            if p.i != 6:
                eps[p.i - 1] += n
        elif isinstance(p, G):
            plus = n if p.sheet == "+" else 0
            minus = n if p.sheet == "-" else 0
            # n G(l,-) ~ n K - n G(l,+)
            cm += minus
            residual[p.label] = residual.get(p.label, 0) + plus - minus
        else:
            raise ValueError(f"{p} is not a genus-2 point")
    # wsum * W(6) = (wsum // 2) K + (wsum % 2) W(6)
    cm += wsum // 2
    res = tuple(sorted((lab, n) for lab, n in residual.items() if n))
    return PicClassG2(D.degree(), _canonical_eps(eps), cm, res)


K_DIVISOR = Divisor.of(W(6), W(6))
CANONICAL = g2_class_reduce(K_DIVISOR)


def class_of_K(n: int = 1) -> PicClassG2:
    return g2_class_reduce(K_DIVISOR * n)


def h0_genus2(c: PicClassG2) -> H0Value:
    deg = c.degree
    if deg < 0:
        return H0Value.exact(0)
    if deg >= 3:
        return H0Value.exact(deg - 1)
    if deg == 0:
        t = c.is_trivial()
        return H0Value.undecidable() if t is None else H0Value.exact(1 if t else 0)
    if deg == 1:
        eff = _degree_one_effective(c)
        return H0Value.undecidable() if eff is None else H0Value.exact(1 if eff else 0)
    # deg == 2: h0 = 2 iff the class is K, and h0 >= 1 by Riemann-Roch
    if c.residual:
        return H0Value.interval(1, 2)
    return H0Value.exact(2 if c == CANONICAL else 1)


def _degree_one_effective(c: PicClassG2) -> bool | None:
    """O(D) of degree 1 is effective iff D ~ a single point."""
    if not c.residual:
        # c = W(6) + (2-torsion): a point only for W(6) + e_i = W(i)
        return c.parity == 1 and c.canonical_multiple == 0 and sum(c.eps) <= 1
    if len(c.residual) == 1 and c.parity == 0:
        (_, n), = c.residual
        # c = T + G(l,+) or T + G(l,-) with T 2-torsion; a generic point is not
        # Weierstrass, so T + G ~ q forces T = 0
        if (n, c.canonical_multiple) in ((1, 0), (-1, 1)):
            return not any(c.eps)
    return None
