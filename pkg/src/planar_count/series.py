"""Exact truncated power series and the Bessel-determinant generating functions.

A :class:`TruncatedSeries` is a finite map from exponent vectors to
:class:`~fractions.Fraction` coefficients.  Every series carries a table of
variable names; variables flagged ``half`` store doubled exponents so that
square roots such as ``y**(1/2)`` stay exact.  Products drop every term whose
degree in ``x`` exceeds ``xmax``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Literal, Mapping, Sequence, Union

Number = Union[int, Fraction]
Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Var:
    name: str
    half: bool = False

    @property
    def unit(self) -> int:
        return 2 if self.half else 1


def _as_vars(variables: Iterable[str | Var | tuple[str, bool]]) -> tuple[Var, ...]:
    out = []
    for v in variables:
        if isinstance(v, Var):
            out.append(v)
        elif isinstance(v, str):
            out.append(Var(v))
        else:
            out.append(Var(v[0], bool(v[1])))
    names = [v.name for v in out]
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    if "x" not in names:
        raise ValueError("the truncation variable 'x' must be present")
    return tuple(out)


class TruncatedSeries:
    """Multivariate polynomial in exact rationals, truncated in ``x``."""

    __slots__ = ("vars", "xmax", "terms", "_index", "_x")

    def __init__(
        self,
        variables: Iterable[str | Var | tuple[str, bool]],
        xmax: int,
        terms: Mapping[Exponents, Number] | None = None,
    ) -> None:
        self.vars = _as_vars(variables)
        self.xmax = int(xmax)
        self._index = {v.name: i for i, v in enumerate(self.vars)}
        self._x = self._index["x"]
        self.terms: dict[Exponents, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(self.vars):
                raise ValueError("exponent vector length does not match variable table")
            if exp[self._x] > self.xmax or not c:
                continue
            self.terms[tuple(exp)] = self.terms.get(tuple(exp), Fraction(0)) + Fraction(c)
        self.terms = {e: c for e, c in self.terms.items() if c}

    # -- construction ----------------------------------------------------------

    def _new(self, terms: Mapping[Exponents, Number]) -> TruncatedSeries:
        return TruncatedSeries(self.vars, self.xmax, terms)

    def zero(self) -> TruncatedSeries:
        return self._new({})

    def monomial(self, coefficient: Number = 1, **exponents: Number) -> TruncatedSeries:
        """``coefficient * prod(var**e)``; exponents of half variables may be multiples of 1/2."""
        exp = [0] * len(self.vars)
        for name, e in exponents.items():
            var = self.vars[self._index[name]]
            stored = Fraction(e) * var.unit
            if stored.denominator != 1:
                raise ValueError(f"exponent {e} not representable for {name}")
            exp[self._index[name]] = int(stored)
        return self._new({tuple(exp): coefficient})

    def one(self) -> TruncatedSeries:
        return self.monomial(1)

    # -- inspection ---------------------------------------------------------------

    def _compatible(self, other: TruncatedSeries) -> None:
        if self.vars != other.vars:
            raise ValueError("variable tables differ")

    def exponent(self, exp: Exponents, name: str) -> Fraction:
        """Actual (possibly half-integer) exponent of ``name`` in a stored exponent vector."""
        i = self._index[name]
        return Fraction(exp[i], self.vars[i].unit)

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of ``x**power`` in a series whose other exponents are all zero."""
        total = Fraction(0)
        for exp, c in self.terms.items():
            if any(e for i, e in enumerate(exp) if i != self._x):
                raise ValueError("series still depends on variables other than x")
            if exp[self._x] == power:
                total += c
        return total

    def coefficients(self) -> list[Fraction]:
        """Dense list of ``x`` coefficients ``0..xmax`` for a series in ``x`` only."""
        return [self.coefficient(e) for e in range(self.xmax + 1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.vars == other.vars and self.xmax == other.xmax and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "TruncatedSeries(0)"
        parts = []
        for exp, c in sorted(self.terms.items()):
            mono = "*".join(
                f"{v.name}^{Fraction(e, v.unit)}" if Fraction(e, v.unit) != 1 else v.name
                for v, e in zip(self.vars, exp)
                if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return "TruncatedSeries(" + " + ".join(parts) + ")"

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: TruncatedSeries | Number) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            other = self.monomial(other)
        self._compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return self.scale(-1)

    def __sub__(self, other: TruncatedSeries | Number) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other: Number) -> TruncatedSeries:
        return (-self) + other

    def scale(self, c: Number) -> TruncatedSeries:
        c = Fraction(c)
        return self._new({e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: TruncatedSeries | Number) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._compatible(other)
        x = self._x
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if e1[x] + e2[x] > self.xmax:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return self._new(terms)

    __rmul__ = __mul__

    # -- calculus -------------------------------------------------------------------

    def diff(self, name: str, times: int = 1) -> TruncatedSeries:
        i = self._index[name]
        unit = self.vars[i].unit
        terms = dict(self.terms)
        for _ in range(times):
            nxt: dict[Exponents, Fraction] = {}
            for exp, c in terms.items():
                if exp[i] == 0:
                    continue
                e = list(exp)
                e[i] -= unit
                nxt[tuple(e)] = nxt.get(tuple(e), Fraction(0)) + c * Fraction(exp[i], unit)
            terms = nxt
        return self._new(terms)

    def antidiff(self, name: str, times: int = 1) -> TruncatedSeries:
        """Primitive in ``name`` with zero constant of integration."""
        i = self._index[name]
        unit = self.vars[i].unit
        terms = dict(self.terms)
        for _ in range(times):
            nxt: dict[Exponents, Fraction] = {}
            for exp, c in terms.items():
                power = Fraction(exp[i], unit) + 1
                if power == 0:
                    raise ValueError(f"cannot integrate {name}^-1")
                e = list(exp)
                e[i] += unit
                nxt[tuple(e)] = nxt.get(tuple(e), Fraction(0)) + c / power
            terms = nxt
        return self._new(terms)

    def subst_square(self, y: str, z: str) -> TruncatedSeries:
        """Substitute ``y = z**2``."""
        iy, iz = self._index[y], self._index[z]
        if self.vars[iz].half:
            raise ValueError(f"target variable {z} must have integer exponents")
        scale = 2 // self.vars[iy].unit
        terms: dict[Exponents, Fraction] = {}
        for exp, c in self.terms.items():
            e = list(exp)
            e[iz] += e[iy] * scale
            e[iy] = 0
            terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + c
        return self._new(terms)

    def eval_one(self, *names: str) -> TruncatedSeries:
        """Set each named variable to 1."""
        idx = [self._index[n] for n in names]
        terms: dict[Exponents, Fraction] = {}
        for exp, c in self.terms.items():
            e = list(exp)
            for i in idx:
                e[i] = 0
            terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + c
        return self._new(terms)

    def restrict(self, names: Sequence[str]) -> TruncatedSeries:
        """Re-express over a smaller variable table; dropped variables must not occur."""
        keep = [self._index[n] for n in names]
        dropped = set(range(len(self.vars))) - set(keep)
        terms: dict[Exponents, Fraction] = {}
        for exp, c in self.terms.items():
            if any(exp[i] for i in dropped):
                raise ValueError("cannot drop a variable that still occurs")
            e = tuple(exp[i] for i in keep)
            terms[e] = terms.get(e, Fraction(0)) + c
        return TruncatedSeries([self.vars[i] for i in keep], self.xmax, terms)

    # -- serialisation ------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vars": [{"name": v.name, "half": v.half} for v in self.vars],
            "xmax": self.xmax,
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> TruncatedSeries:
        variables = [Var(v["name"], bool(v["half"])) for v in data["vars"]]
        terms = {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]}
        return cls(variables, data["xmax"], terms)


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    return s + t


def series_multiply(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    return s * t


def series_scale(s: TruncatedSeries, c: Number) -> TruncatedSeries:
    return s.scale(c)


def falling_factorial(a: Number, b: int) -> Fraction:
    """``a (a-1) ... (a-b+1)``; equals 1 for ``b = 0`` and 0 when ``a`` is an integer below ``b``."""
    out = Fraction(1)
    for i in range(b):
        out *= Fraction(a) - i
    return out


def determinant(matrix: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    """Laplace expansion along the first row."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    if size == 1:
        return matrix[0][0]
    total = matrix[0][0].zero()
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = matrix[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- Bessel series and Gessel's identity ------------------------------------


def bessel_series(nu: int, x_bound: int) -> TruncatedSeries:
    """``I_nu(2x) = sum_m x^(2m+nu) / (m! (m+nu)!)`` truncated at ``x^x_bound``."""
    if nu < 0:
        raise ValueError("nu must be non-negative")
    terms = {}
    m = 0
    while 2 * m + nu <= x_bound:
        terms[(2 * m + nu,)] = Fraction(1, factorial(m) * factorial(m + nu))
        m += 1
    return TruncatedSeries(["x"], x_bound, terms)


def gessel_determinant(d: int, x_bound: int) -> TruncatedSeries:
    """``det(I_|i-j|(2x))`` for a ``d x d`` matrix; coefficient of ``x^(2m)`` is ``u_m(d) / m!^2``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    cache = {nu: bessel_series(nu, x_bound) for nu in range(d)}
    matrix = [[cache[abs(i - j)] for j in range(d)] for i in range(d)]
    return determinant(matrix)


def _i0_in(variables: Sequence[str | Var], x_bound: int, root: Mapping[str, Fraction]) -> TruncatedSeries:
    # I_0(2x sqrt(R)) = sum_s x^(2s) R^s / s!^2 where R is the monomial ``root``.
    proto = TruncatedSeries(variables, x_bound)
    out = proto.zero()
    s = 0
    while 2 * s <= x_bound:
        exps = {name: e * s for name, e in root.items()}
        out = out + proto.monomial(Fraction(1, factorial(s) ** 2), x=2 * s, **exps)
        s += 1
    return out


def gessel_determinant_alt(x_bound: int) -> TruncatedSeries:
    """The ``d = 2`` determinant written with primitives of ``I_0(2x sqrt(ab))`` in ``a`` and ``b``.

    Off-diagonal entries are ``x * primitive``; without that factor of ``x``
    the entries would not be ``I_1(2x)`` at ``a = b = 1``.
    """
    names = ["x", "a", "b"]
    i0 = _i0_in(names, x_bound, {"a": Fraction(1), "b": Fraction(1)})
    x = i0.monomial(1, x=1)
    upper = x * i0.antidiff("a")
    lower = x * i0.antidiff("b")
    det = determinant([[i0, upper], [lower, i0]])
    return det.eval_one("a", "b").restrict(["x"])


# -- the d = r = 2 apparatus ---------------------------------------------------

OPERATOR_VARS = (
    Var("x"),
    Var("yp", half=True),
    Var("ym", half=True),
    Var("zp"),
    Var("zm"),
    Var("a1"),
    Var("a2"),
    Var("b1"),
    Var("b2"),
)


def w1_prime(m_plus: int, m_minus: int, p: int) -> int:
    """One-dimensional representative walks: exactly one when ``m+ - m- = p``."""
    return 1 if m_plus - m_minus == p else 0


def w1_doubleprime(m_plus: int, m_minus: int, p: int) -> int:
    return comb(m_plus + m_minus, m_plus) * w1_prime(m_plus, m_minus, p)


def corollary2_rhs(
    p: Sequence[int],
    m_plus: int,
    m_minus: int,
    flavor: Literal["prime", "doubleprime"] = "prime",
) -> Fraction:
    """Inclusion-exclusion over forced increasing pairs, factored through 1-D walks.

    For ``flavor="prime"`` the value equals the number of 2-D representative
    walks to ``p`` with non-increasing pairs, divided by ``m+! m-!``.  The
    ``"doubleprime"`` flavor substitutes the interleaved 1-D counts.
    """
    if m_plus % 2 or m_minus % 2 or m_plus < 0 or m_minus < 0:
        raise ValueError("m+ and m- must be even and non-negative")
    w1 = {"prime": w1_prime, "doubleprime": w1_doubleprime}[flavor]
    p1, p2 = p
    total = Fraction(0)
    for k in range(m_plus // 2 + 1):
        for l in range(m_minus // 2 + 1):
            weight = Fraction((-1) ** (k + l), factorial(k) * factorial(l))
            weight *= falling_factorial(Fraction(m_plus, 2), k) * falling_factorial(Fraction(m_minus, 2), l)
            weight /= falling_factorial(m_plus, 2 * k) * falling_factorial(m_minus, 2 * l)
            inner = Fraction(0)
            for m1p in range(k, m_plus - k + 1):
                m2p = m_plus - m1p
                for m1m in range(l, m_minus - l + 1):
                    m2m = m_minus - m1m
                    first = w1(m1p, m1m, p1)
                    second = w1(m2p, m2m, p2)
                    if first and second:
                        inner += Fraction(
                            first * second,
                            factorial(m1p - k) * factorial(m1m - l) * factorial(m2p - k) * factorial(m2m - l),
                        )
            total += weight * inner
    return total


def walk_series(p: int, a: str, b: str, x_bound: int) -> TruncatedSeries:
    """``B(p; a, b) = sum w1'(s+, s-; p) / (s+! s-!) (yp^(1/2) x a)^s+ (ym^(1/2) x b)^s-``."""
    proto = TruncatedSeries(OPERATOR_VARS, x_bound)
    out = proto.zero()
    s = 0
    while True:
        s_plus, s_minus = (s + p, s) if p >= 0 else (s, s - p)
        if s_plus + s_minus > x_bound:
            break
        out = out + proto.monomial(
            Fraction(1, factorial(s_plus) * factorial(s_minus)),
            x=s_plus + s_minus,
            yp=Fraction(s_plus, 2),
            ym=Fraction(s_minus, 2),
            **{a: s_plus, b: s_minus},
        )
        s += 1
    return out


def a_kl_series(k: int, l: int, p: int, x_bound: int) -> TruncatedSeries:
    """``A^{k,l}(p) = sum_{s+>=k, s->=l} w1'(s+, s-; p) / ((s+-k)! (s--l)!) (yp^(1/2) x)^s+ (ym^(1/2) x)^s-``."""
    proto = TruncatedSeries(OPERATOR_VARS, x_bound)
    out = proto.zero()
    for s_plus in range(k, x_bound + 1):
        s_minus = s_plus - p
        if s_minus < l or s_plus + s_minus > x_bound:
            continue
        out = out + proto.monomial(
            Fraction(1, factorial(s_plus - k) * factorial(s_minus - l)),
            x=s_plus + s_minus,
            yp=Fraction(s_plus, 2),
            ym=Fraction(s_minus, 2),
        )
    return out


def _i0_walk(a: str, b: str, x_bound: int) -> TruncatedSeries:
    # I_0(2x sqrt(yp^(1/2) ym^(1/2) a b))
    return _i0_in(OPERATOR_VARS, x_bound, {"yp": Fraction(1, 2), "ym": Fraction(1, 2), a: Fraction(1), b: Fraction(1)})


def primitive_matrix(x_bound: int) -> list[list[TruncatedSeries]]:
    """Entries ``B(0)``, ``B(-1)`` / ``B(1)``, ``B(0)`` built from ``I_0`` and its primitives.

    ``B(-1; a, b) = x ym^(1/2) * primitive_b I_0`` and
    ``B(1; a, b) = x yp^(1/2) * primitive_a I_0``.
    """
    i01 = _i0_walk("a1", "b1", x_bound)
    i02 = _i0_walk("a2", "b2", x_bound)
    proto = i01.zero()
    upper = proto.monomial(1, x=1, ym=Fraction(1, 2)) * i01.antidiff("b1")
    lower = proto.monomial(1, x=1, yp=Fraction(1, 2)) * i02.antidiff("a2")
    return [[i01, upper], [lower, i02]]


def apply_D(f: TruncatedSeries) -> TruncatedSeries:
    """The operator turning products of ``B`` series into the planar-matching generating function.

    Expanded as the finite double sum over ``k, l``: differentiate ``k`` times
    in ``a1, a2`` and ``l`` times in ``b1, b2``, set ``a = b = 1``,
    differentiate ``k`` / ``l`` times in ``yp`` / ``ym``, put ``y = z^2``,
    integrate ``2k`` / ``2l`` times in ``zp`` / ``zm``, set ``z = 1`` and
    weight by ``(-1)^(k+l) / (k! l!)``.
    """
    half = f.xmax // 2
    total = f.zero()
    for k in range(half + 1):
        for l in range(half + 1 - k):
            g = f.diff("a1", k).diff("a2", k).diff("b1", l).diff("b2", l)
            if not g.terms:
                continue
            g = g.eval_one("a1", "a2", "b1", "b2")
            g = g.diff("yp", k).diff("ym", l)
            g = g.subst_square("yp", "zp").subst_square("ym", "zm")
            g = g.antidiff("zp", 2 * k).antidiff("zm", 2 * l)
            g = g.eval_one("zp", "zm")
            total = total + g.scale(Fraction((-1) ** (k + l), factorial(k) * factorial(l)))
    return total.restrict(["x"])


def theorem8_generating_function(x_bound: int) -> TruncatedSeries:
    """Generating function whose ``x^(4n)`` coefficient is ``g_2(n; 2) / (2n)!^2``."""
    if x_bound < 0:
        raise ValueError("x_bound must be non-negative")
    return apply_D(determinant(primitive_matrix(x_bound)))


def factorised_walk_series(p: Sequence[int], x_bound: int) -> TruncatedSeries:
    """The operator sum applied to ``A^{k,l}(p1) A^{k,l}(p2)`` directly."""
    half = x_bound // 2
    proto = TruncatedSeries(OPERATOR_VARS, x_bound)
    total = proto.zero()
    for k in range(half + 1):
        for l in range(half + 1 - k):
            g = a_kl_series(k, l, p[0], x_bound) * a_kl_series(k, l, p[1], x_bound)
            if not g.terms:
                continue
            g = g.diff("yp", k).diff("ym", l)
            g = g.subst_square("yp", "zp").subst_square("ym", "zm")
            g = g.antidiff("zp", 2 * k).antidiff("zm", 2 * l)
            g = g.eval_one("zp", "zm")
            total = total + g.scale(Fraction((-1) ** (k + l), factorial(k) * factorial(l)))
    return total.restrict(["x"])
