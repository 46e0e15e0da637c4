"""Exact truncated multivariate series over the rationals.

A TruncatedSeries is a sparse dict of exponent vectors with Fraction
coefficients.  Truncation is single-graded: one designated grade variable,
and every operation discards terms whose grade exponent exceeds the order.
Variables listed as Laurent may carry negative exponents; all others must
stay nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import (
    NoContraction,
    NotInvertible,
    Unstable,
    UnsoundSubstitution,
    VariableMismatch,
)

Exponents = tuple[int, ...]
Coeff = Fraction
Scalar = int | Fraction


def _frac(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


@dataclass(frozen=True)
class TruncatedSeries:
    vars: tuple[str, ...]
    grade: str
    order: int
    laurent: frozenset[str] = frozenset()
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.grade not in self.vars:
            raise VariableMismatch(f"grade {self.grade!r} not among vars {self.vars}")

    # -- ring plumbing ------------------------------------------------------

    def _gi(self) -> int:
        return self.vars.index(self.grade)

    def _compat(self, other: "TruncatedSeries") -> None:
        if (
            self.vars != other.vars
            or self.grade != other.grade
            or self.laurent != other.laurent
        ):
            raise VariableMismatch(
                f"incompatible series: {self.vars}/{self.grade} vs {other.vars}/{other.grade}"
            )

    def _build(self, terms: dict, order: int | None = None) -> "TruncatedSeries":
        order = self.order if order is None else order
        gi = self._gi()
        clean: dict[Exponents, Fraction] = {}
        for e, c in terms.items():
            if c == 0 or e[gi] > order:
                continue
            for name, exp in zip(self.vars, e):
                if exp < 0 and name not in self.laurent:
                    raise NotInvertible(
                        f"negative exponent on non-Laurent variable {name!r}"
                    )
            clean[e] = c
        return TruncatedSeries(self.vars, self.grade, order, self.laurent, clean)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring().constant(other)
        self._compat(other)
        order = min(self.order, other.order)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return self._build(terms, order)

    __radd__ = __add__

    def __neg__(self):
        return self._build({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring().constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return self._build({e: v * c for e, v in self.terms.items()})
        self._compat(other)
        order = min(self.order, other.order)
        gi = self._gi()
        out: dict[Exponents, Fraction] = {}
        # iterate over the smaller operand outside
        a, b = (self.terms, other.terms)
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            ga = ea[gi]
            for eb, cb in b.items():
                if ga + eb[gi] > order:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return self._build(out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise NotInvertible("negative powers: use invert")
        out = self.ring().one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- views ---------------------------------------------------------------

    def ring(self) -> "SeriesRing":
        return SeriesRing(self.vars, self.grade, self.order, tuple(sorted(self.laurent)))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Mapping[str, int]) -> Fraction:
        e = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(e, Fraction(0))

    def grade_coeffs(self) -> dict[int, dict[Exponents, Fraction]]:
        gi = self._gi()
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            out.setdefault(e[gi], {})[e] = c
        return out

    def cofactor(self, var: str, k: int) -> "TruncatedSeries":
        """Terms with var-exponent exactly k, with that exponent zeroed out."""
        vi = self.vars.index(var)
        terms = {
            e[:vi] + (0,) + e[vi + 1 :]: c
            for e, c in self.terms.items()
            if e[vi] == k
        }
        return self._build(terms)

    def restrict(self, var: str, max_exp: int) -> "TruncatedSeries":
        vi = self.vars.index(var)
        return self._build({e: c for e, c in self.terms.items() if e[vi] <= max_exp})

    def truncate(self, order: int) -> "TruncatedSeries":
        return self._build(dict(self.terms), min(order, self.order))

    def valuation(self) -> int | None:
        gi = self._gi()
        return min((e[gi] for e in self.terms), default=None)

    def min_exponent(self, var: str) -> int | None:
        vi = self.vars.index(var)
        return min((e[vi] for e in self.terms), default=None)

    def assert_no_negative_exponents(self, err=NotInvertible, what: str = "series"):
        for e in self.terms:
            if any(x < 0 for x in e):
                raise err(f"{what} kept a negative exponent: {dict(zip(self.vars, e))}")
        return self

    def assert_integer_coefficients(self, err=NotInvertible, what: str = "series"):
        for e, c in self.terms.items():
            if c.denominator != 1:
                raise err(f"{what} has non-integer coefficient {c} at {e}")
        return self


class SeriesRing:
    """Factory for series sharing one variable tuple, grade, and order."""

    def __init__(self, names: Iterable[str], grade: str, order: int, laurent: Iterable[str] = ()):
        self.names = tuple(names)
        self.grade = grade
        self.order = order
        self.laurent = frozenset(laurent)
        if self.grade not in self.names:
            raise VariableMismatch(f"grade {grade!r} not among {self.names}")
        unknown = self.laurent - set(self.names)
        if unknown:
            raise VariableMismatch(f"Laurent variables {sorted(unknown)} not among vars")

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries(self.names, self.grade, self.order, self.laurent, {})

    def constant(self, c: Scalar) -> TruncatedSeries:
        return self.monomial(c)

    def one(self) -> TruncatedSeries:
        return self.constant(1)

    def monomial(self, coeff: Scalar = 1, **exps: int) -> TruncatedSeries:
        unknown = set(exps) - set(self.names)
        if unknown:
            raise VariableMismatch(f"unknown variables {sorted(unknown)}")
        e = tuple(exps.get(v, 0) for v in self.names)
        c = _frac(coeff)
        s = self.zero()
        return s._build({e: c})

    def var(self, name: str) -> TruncatedSeries:
        return self.monomial(1, **{name: 1})

    def gens(self) -> tuple[TruncatedSeries, ...]:
        return tuple(self.var(n) for n in self.names)

    def from_terms(self, terms: Mapping[Exponents, Scalar]) -> TruncatedSeries:
        return self.zero()._build({e: _frac(c) for e, c in terms.items()})


# -- operations ---------------------------------------------------------------

def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse.

    The grade-constant part must be a single monomial supported only on
    Laurent variables; the rest is expanded geometrically in the grade.
    """
    gi = a._gi()
    const = {e: c for e, c in a.terms.items() if e[gi] == 0}
    if len(const) != 1:
        raise NotInvertible(
            f"grade-constant part has {len(const)} terms; need exactly one monomial"
        )
    (e0, c0), = const.items()
    for name, exp in zip(a.vars, e0):
        if exp != 0 and name not in a.laurent:
            raise NotInvertible(
                f"constant monomial uses non-Laurent variable {name!r}"
            )
    ring = a.ring()
    inv_mono = TruncatedSeries(
        a.vars, a.grade, a.order, a.laurent, {tuple(-x for x in e0): 1 / c0}
    )
    u = a * inv_mono  # now 1 + t with t of positive grade valuation
    one = ring.one()
    t = u - one
    if not t.is_zero() and t.valuation() == 0:
        raise NotInvertible("normalized series still has grade-constant terms")
    out = one
    power = one
    for _ in range(a.order):
        power = power * (-t)
        if power.is_zero():
            break
        out = out + power
    return out * inv_mono


def substitute_monomial(
    a: TruncatedSeries, var: str, coeff: Scalar, exps: Mapping[str, int] | None = None
) -> TruncatedSeries:
    """Replace var by coeff * prod(vars**exps).  Also evaluates at constants.

    Unsound if any term's grade exponent would decrease (it would pull
    unknown truncated terms below the order).
    """
    exps = dict(exps or {})
    if var not in a.vars:
        raise VariableMismatch(f"{var!r} not a series variable")
    unknown = set(exps) - set(a.vars)
    if unknown:
        raise VariableMismatch(f"unknown target variables {sorted(unknown)}")
    c0 = _frac(coeff)
    vi = a.vars.index(var)
    gi = a._gi()
    mono = tuple(exps.get(v, 0) for v in a.vars)
    out: dict[Exponents, Fraction] = {}
    for e, c in a.terms.items():
        k = e[vi]
        if k == 0:
            out[e] = out.get(e, Fraction(0)) + c
            continue
        if c0 == 0:
            if k > 0:
                continue
            raise UnsoundSubstitution("negative power of a variable sent to zero")
        new_e = list(e)
        new_e[vi] = 0
        for i, m in enumerate(mono):
            new_e[i] += k * m
        delta = new_e[gi] - e[gi]
        if delta < 0:
            raise UnsoundSubstitution(
                f"substitution lowers grade degree by {-delta} on {dict(zip(a.vars, e))}"
            )
        for name, exp in zip(a.vars, new_e):
            if exp < 0 and name not in a.laurent:
                raise UnsoundSubstitution(
                    f"substitution makes {name!r} exponent negative"
                )
        ne = tuple(new_e)
        out[ne] = out.get(ne, Fraction(0)) + c * c0**k
    return a._build(out)


def derivative(a: TruncatedSeries, var: str) -> TruncatedSeries:
    if var not in a.vars:
        raise VariableMismatch(f"{var!r} not a series variable")
    vi = a.vars.index(var)
    out: dict[Exponents, Fraction] = {}
    for e, c in a.terms.items():
        k = e[vi]
        if k == 0:
            continue
        ne = e[:vi] + (k - 1,) + e[vi + 1 :]
        out[ne] = out.get(ne, Fraction(0)) + c * k
    return a._build(out)


def div_monomial(a: TruncatedSeries, coeff: Scalar, exps: Mapping[str, int]) -> TruncatedSeries:
    """Exact division by a monomial; exponents must stay in range."""
    c0 = _frac(coeff)
    if c0 == 0:
        raise NotInvertible("division by zero monomial")
    shift = tuple(exps.get(v, 0) for v in a.vars)
    out: dict[Exponents, Fraction] = {}
    for e, c in a.terms.items():
        ne = tuple(x - s for x, s in zip(e, shift))
        for name, exp in zip(a.vars, ne):
            if exp < 0 and name not in a.laurent:
                raise NotInvertible(
                    f"monomial division not exact: {name!r} exponent {exp}"
                )
        out[ne] = c / c0
    return a._build(out)


def collapse(
    a: TruncatedSeries,
    weights: Mapping[str, int],
    new_var: str,
    new_order: int | None = None,
) -> TruncatedSeries:
    """Map every term to new_var**(weighted exponent sum).

    With a positive weight on the grade variable the result is complete
    through the input's order; with weight 0 the caller must pass new_order
    and guarantee completeness from the model (e.g. a statistic dominating
    the grade).
    """
    unknown = set(weights) - set(a.vars)
    if unknown:
        raise VariableMismatch(f"unknown collapse variables {sorted(unknown)}")
    w = tuple(weights.get(v, 0) for v in a.vars)
    if any(x < 0 for x in w):
        raise UnsoundSubstitution("collapse weights must be nonnegative")
    if new_order is None:
        if weights.get(a.grade, 0) < 1:
            raise UnsoundSubstitution(
                "collapse needs weight >= 1 on the grade variable or an explicit order"
            )
        new_order = a.order
    out: dict[tuple[int], Fraction] = {}
    for e, c in a.terms.items():
        n = sum(x * y for x, y in zip(e, w))
        if n < 0:
            raise UnsoundSubstitution("collapse produced a negative exponent")
        if n > new_order:
            continue
        out[(n,)] = out.get((n,), Fraction(0)) + c
    res = TruncatedSeries((new_var,), new_var, new_order, frozenset(), {})
    return res._build(out, new_order)


def same_coefficients(a: TruncatedSeries, b: TruncatedSeries) -> bool:
    """Term-by-term equality up to variable renaming by position."""
    if len(a.vars) != len(b.vars):
        return False
    lo = min(a.order, b.order)
    ga, gb = a._gi(), b._gi()
    ta = {e: c for e, c in a.terms.items() if e[ga] <= lo}
    tb = {e: c for e, c in b.terms.items() if e[gb] <= lo}
    return ta == tb


def solve_fixed_point(
    phi: Callable[[TruncatedSeries], TruncatedSeries],
    seed: TruncatedSeries,
    max_rounds: int | None = None,
) -> TruncatedSeries:
    """Iterate phi until two successive series agree exactly."""
    rounds = (seed.order + 2) if max_rounds is None else max_rounds
    cur = seed
    for _ in range(rounds):
        nxt = phi(cur)
        if nxt.terms == cur.terms and nxt.order == cur.order:
            return cur
        cur = nxt
    raise NoContraction(f"no fixed point after {rounds} rounds")


def pochhammer(a: TruncatedSeries, b: TruncatedSeries, k: int) -> TruncatedSeries:
    """prod_{j=0}^{k-1} (1 - a * b**j)."""
    ring = a.ring()
    out = ring.one()
    bj = ring.one()
    for _ in range(k):
        out = out * (ring.one() - a * bj)
        bj = bj * b
    return out


def continued_fraction(
    level: Callable[[int], TruncatedSeries],
    numerator: TruncatedSeries,
    depth: int,
    check_depth: bool = True,
) -> TruncatedSeries:
    """Evaluate -1 + numerator / (L_1 - numerator / (L_2 - ...)).

    The tail below the deepest level is replaced by the branch the infinite
    fraction actually selects: the deepest denominator is L_depth minus 1,
    which keeps every partial denominator a unit multiple of the numerator.
    Evaluating at depth and depth+1 must give identical series through the
    truncation order, else Unstable is raised.
    """
    if depth < 1:
        raise Unstable(f"continued fraction needs depth >= 1, got {depth}")
    first = _cf_eval(level, numerator, depth)
    if check_depth:
        second = _cf_eval(level, numerator, depth + 1)
        if first.terms != second.terms:
            raise Unstable(
                f"depth {depth} and {depth + 1} disagree; increase depth"
            )
    return first


def _cf_eval(level, numerator, depth) -> TruncatedSeries:
    nu_terms = list(numerator.terms.items())
    if len(nu_terms) != 1:
        raise NotInvertible("continued-fraction numerator must be a monomial")
    (nu_e, nu_c), = nu_terms
    nu_exps = dict(zip(numerator.vars, nu_e))
    ring = numerator.ring()
    one = ring.one()
    # E_k = S_k / numerator - 1 where S_k is the k-th tail denominator
    ek = div_monomial(level(depth) - one - numerator, nu_c, nu_exps)
    for k in range(depth - 1, 0, -1):
        s_minus_nu = level(k) - one - numerator + (one - invert(one + ek))
        ek = div_monomial(s_minus_nu, nu_c, nu_exps)
    return invert(one + ek) - one


# -- serialization -------------------------------------------------------------

def series_json(a: TruncatedSeries) -> dict:
    # integer coefficients stay JSON numbers; true fractions become strings
    terms = [
        {"e": list(e), "c": int(c) if c.denominator == 1 else str(c)}
        for e, c in sorted(a.terms.items())
    ]
    return {
        "vars": list(a.vars),
        "grade": a.grade,
        "order": a.order,
        "terms": terms,
    }
