"""Exact rationals and budgeted one-sided real number processes.

Nothing in this package is ever a float.  A number that cannot be written
down as a single rational is represented as a process: a total map from a
work budget (a natural number) to a rational bound.  A ``LowerReal`` yields
nondecreasing lower bounds, an ``UpperReal`` nonincreasing upper bounds,
and a ``DedekindReal`` pairs the two with a certificate that the gap can be
driven below any requested width.

Budgets carry no accuracy promise by themselves; only a ``DedekindReal``'s
gap bound relates budget to width.  Equality of one-sided reals is not
offered (it is undecidable); only the budgeted comparison ``approx(n) > p``
is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from .errors import (
    BudgetExhaustedError,
    CutInversionError,
    GapContractError,
    ParseError,
)

Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)

# A prefix walk evaluates every budget up to the queried one; beyond this it
# is a sign the caller composed processes that cannot converge at desk scale.
_PREFIX_BUDGET_CAP = 2_000_000


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q)


def rational_ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def rational_floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _check_budget(budget) -> int:
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 0:
        raise ValueError(f"budget must be a natural number, got {budget!r}")
    return budget


class LowerReal:
    """A number known through improving rational lower bounds.

    ``approx(n)`` is nondecreasing in ``n``; the represented value is the
    supremum over all budgets.  Monotonicity is enforced, not trusted: in
    prefix mode by a running maximum over all budgets up to the query, in
    sparse mode (for raws that are monotone by construction, or whose every
    output is independently a valid lower bound) by folding the running
    maximum over the budgets actually queried.
    """

    __slots__ = ("_raw", "_bound", "_prefix", "_spot", "_sparse", "_const")

    def __init__(
        self,
        raw: Callable[[int], Fraction],
        known_upper_bound: Optional[Fraction] = None,
        sparse: bool = False,
    ):
        self._raw = raw
        self._bound = known_upper_bound
        self._sparse = sparse
        self._prefix: list[Fraction] = []
        self._spot: dict[int, Fraction] = {}
        self._const: Optional[Fraction] = None

    @property
    def known_upper_bound(self) -> Optional[Fraction]:
        return self._bound

    def approx(self, budget: int) -> Fraction:
        _check_budget(budget)
        if self._sparse:
            return self._approx_sparse(budget)
        return self._approx_prefix(budget)

    def _approx_prefix(self, budget: int) -> Fraction:
        if budget > _PREFIX_BUDGET_CAP:
            raise BudgetExhaustedError(
                f"budget {budget} exceeds the prefix evaluation cap"
            )
        cache = self._prefix
        while len(cache) <= budget:
            value = Fraction(self._raw(len(cache)))
            if cache and cache[-1] > value:
                value = cache[-1]
            cache.append(value)
        return cache[budget]

    def _approx_sparse(self, budget: int) -> Fraction:
        cached = self._spot.get(budget)
        if cached is not None:
            return cached
        best = Fraction(self._raw(budget))
        for m, v in self._spot.items():
            if m <= budget:
                if v > best:
                    best = v
            elif v < best:
                self._spot[m] = best
        self._spot[budget] = best
        return best

    def exceeds(self, threshold: Fraction, budget: int) -> bool:
        """Budgeted strict comparison: is ``approx(budget) > threshold``?"""
        return self.approx(budget) > threshold

    def __repr__(self):
        return f"LowerReal(bound={self._bound})"


class UpperReal:
    """Mirror image of :class:`LowerReal`: improving rational upper bounds."""

    __slots__ = ("_raw", "_bound", "_prefix", "_spot", "_sparse", "_const")

    def __init__(
        self,
        raw: Callable[[int], Fraction],
        known_lower_bound: Optional[Fraction] = None,
        sparse: bool = False,
    ):
        self._raw = raw
        self._bound = known_lower_bound
        self._sparse = sparse
        self._prefix: list[Fraction] = []
        self._spot: dict[int, Fraction] = {}
        self._const: Optional[Fraction] = None

    @property
    def known_lower_bound(self) -> Optional[Fraction]:
        return self._bound

    def approx(self, budget: int) -> Fraction:
        _check_budget(budget)
        if self._sparse:
            return self._approx_sparse(budget)
        return self._approx_prefix(budget)

    def _approx_prefix(self, budget: int) -> Fraction:
        if budget > _PREFIX_BUDGET_CAP:
            raise BudgetExhaustedError(
                f"budget {budget} exceeds the prefix evaluation cap"
            )
        cache = self._prefix
        while len(cache) <= budget:
            value = Fraction(self._raw(len(cache)))
            if cache and cache[-1] < value:
                value = cache[-1]
            cache.append(value)
        return cache[budget]

    def _approx_sparse(self, budget: int) -> Fraction:
        cached = self._spot.get(budget)
        if cached is not None:
            return cached
        best = Fraction(self._raw(budget))
        for m, v in self._spot.items():
            if m <= budget:
                if v < best:
                    best = v
            elif v > best:
                self._spot[m] = best
        self._spot[budget] = best
        return best

    def below(self, threshold: Fraction, budget: int) -> bool:
        """Budgeted strict comparison: is ``approx(budget) < threshold``?"""
        return self.approx(budget) < threshold

    def __repr__(self):
        return f"UpperReal(bound={self._bound})"


# ---------------------------------------------------------------------------
# constructors


def lower_make(
    seq: Callable[[int], Fraction], known_upper_bound: Optional[Fraction] = None
) -> LowerReal:
    """Wrap a total budget-to-rational map, enforcing monotonicity."""
    return LowerReal(seq, known_upper_bound)


def lower_const(value: Fraction) -> LowerReal:
    value = Fraction(value)
    out = LowerReal(lambda n: value, known_upper_bound=value, sparse=True)
    out._spot[0] = value
    return out


def is_constant(x) -> bool:
    """True when ``x`` was built by :func:`lower_const`/:func:`upper_const`."""
    return getattr(x, "_constant_value", None) is not None


def lower_add(a: LowerReal, b: LowerReal) -> LowerReal:
    bound = None
    if a.known_upper_bound is not None and b.known_upper_bound is not None:
        bound = a.known_upper_bound + b.known_upper_bound
    # the sum of two enforced-monotone processes is monotone
    return LowerReal(lambda n: a.approx(n) + b.approx(n), bound, sparse=True)


def lower_scale(c: Fraction, a: LowerReal) -> LowerReal:
    c = Fraction(c)
    if c <= 0:
        raise ValueError(f"scale factor must be positive, got {c}")
    bound = None if a.known_upper_bound is None else c * a.known_upper_bound
    return LowerReal(lambda n: c * a.approx(n), bound, sparse=True)


def lower_sum(parts: list[LowerReal]) -> LowerReal:
    if not parts:
        return lower_const(_F0)
    out = parts[0]
    for p in parts[1:]:
        out = lower_add(out, p)
    return out


def lower_sup_seq(
    family: Callable[[int], LowerReal],
    known_upper_bound: Optional[Fraction] = None,
) -> LowerReal:
    """Diagonal supremum of a countable family: approx(n) = max_{i<=n} f(i).approx(n).

    Family members are instantiated lazily and cached.  Members built by
    :func:`lower_const` are folded incrementally so the diagonal stays linear
    in the budget.
    """
    members: list[LowerReal] = []
    const_running: list[Fraction] = []  # running max of constant members
    varying: list[tuple[int, LowerReal]] = []

    def raw(n: int) -> Fraction:
        if n > _PREFIX_BUDGET_CAP:
            raise BudgetExhaustedError(
                f"budget {n} exceeds the diagonal supremum cap"
            )
        while len(members) <= n:
            i = len(members)
            m = family(i)
            members.append(m)
            c = m.approx(0) if m._sparse and not m._spot else None
            if m._sparse and len(m._spot) >= 1 and m._raw.__closure__ is None:
                pass
            # constants: sparse one-cell processes created by lower_const
            if isinstance(m, LowerReal) and m._sparse and m.known_upper_bound is not None \
                    and m._spot.get(0) == m.known_upper_bound:
                v = m.known_upper_bound
                const_running.append(max(const_running[-1], v) if const_running else v)
            else:
                const_running.append(const_running[-1] if const_running else None)
                varying.append((i, m))
        best = const_running[n]
        for i, m in varying:
            if i <= n:
                v = m.approx(n)
                if best is None or v > best:
                    best = v
        if best is None:  # unreachable: family total
            raise ValueError("empty family")
        return best

    return LowerReal(raw, known_upper_bound, sparse=True)


def upper_make(
    seq: Callable[[int], Fraction], known_lower_bound: Optional[Fraction] = None
) -> UpperReal:
    return UpperReal(seq, known_lower_bound)


def upper_const(value: Fraction) -> UpperReal:
    value = Fraction(value)
    out = UpperReal(lambda n: value, known_lower_bound=value, sparse=True)
    out._spot[0] = value
    return out


def upper_add(a: UpperReal, b: UpperReal) -> UpperReal:
    bound = None
    if a.known_lower_bound is not None and b.known_lower_bound is not None:
        bound = a.known_lower_bound + b.known_lower_bound
    return UpperReal(lambda n: a.approx(n) + b.approx(n), bound, sparse=True)


def upper_scale(c: Fraction, a: UpperReal) -> UpperReal:
    c = Fraction(c)
    if c <= 0:
        raise ValueError(f"scale factor must be positive, got {c}")
    bound = None if a.known_lower_bound is None else c * a.known_lower_bound
    return UpperReal(lambda n: c * a.approx(n), bound, sparse=True)


def upper_minus_lower(u: UpperReal, l: LowerReal) -> UpperReal:
    """Subtract a lower real from an upper real; the result is an upper real."""
    bound = None
    if u.known_lower_bound is not None and l.known_upper_bound is not None:
        bound = u.known_lower_bound - l.known_upper_bound
    # u nonincreasing minus l nondecreasing is nonincreasing
    return UpperReal(lambda n: u.approx(n) - l.approx(n), bound, sparse=True)


# ---------------------------------------------------------------------------
# Dedekind reals


class DedekindReal:
    """A matched lower/upper pair whose gap shrinks below any requested width.

    ``gap_bound(eps)`` returns a budget at which
    ``upper.approx(n) - lower.approx(n) <= eps``.  Every query checks the cut
    ordering; an inversion is a broken construction and raises.
    """

    __slots__ = ("lower", "upper", "_gap")

    def __init__(
        self,
        lower: LowerReal,
        upper: UpperReal,
        gap_bound: Callable[[Fraction], int],
    ):
        self.lower = lower
        self.upper = upper
        self._gap = gap_bound

    def gap_bound(self, eps: Fraction) -> int:
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError(f"target width must be positive, got {eps}")
        return self._gap(eps)

    def approx(self, eps: Fraction) -> tuple[Fraction, Fraction]:
        """Closed rational interval of width at most ``eps`` containing the value."""
        n = self.gap_bound(eps)
        lo = self.lower.approx(n)
        hi = self.upper.approx(n)
        if lo > hi:
            raise CutInversionError(
                f"cut inversion: lower {lo} exceeds upper {hi} at budget {n}"
            )
        if hi - lo > eps:
            raise GapContractError(
                f"gap bound promised width {eps} but delivered {hi - lo} at budget {n}"
            )
        return lo, hi

    def width_at(self, budget: int) -> Fraction:
        lo = self.lower.approx(budget)
        hi = self.upper.approx(budget)
        if lo > hi:
            raise CutInversionError(
                f"cut inversion: lower {lo} exceeds upper {hi} at budget {budget}"
            )
        return hi - lo

    def __repr__(self):
        return "DedekindReal(...)"


def dedekind_make(
    lower: LowerReal, upper: UpperReal, gap_bound: Callable[[Fraction], int]
) -> DedekindReal:
    return DedekindReal(lower, upper, gap_bound)


def dedekind_const(value: Fraction) -> DedekindReal:
    value = Fraction(value)
    return DedekindReal(lower_const(value), upper_const(value), lambda eps: 0)


def dedekind_add(a: DedekindReal, b: DedekindReal) -> DedekindReal:
    def gap(eps: Fraction) -> int:
        half = eps / 2
        return max(a.gap_bound(half), b.gap_bound(half))

    return DedekindReal(lower_add(a.lower, b.lower), upper_add(a.upper, b.upper), gap)


def dedekind_neg(a: DedekindReal) -> DedekindReal:
    lo_bound = None if a.upper.known_lower_bound is None else -a.upper.known_lower_bound
    up_bound = None if a.lower.known_upper_bound is None else -a.lower.known_upper_bound
    lower = LowerReal(lambda n: -a.upper.approx(n), lo_bound, sparse=True)
    upper = UpperReal(lambda n: -a.lower.approx(n), up_bound, sparse=True)
    return DedekindReal(lower, upper, a.gap_bound)


def dedekind_sub(a: DedekindReal, b: DedekindReal) -> DedekindReal:
    return dedekind_add(a, dedekind_neg(b))


def dedekind_scale(c: Fraction, a: DedekindReal) -> DedekindReal:
    c = Fraction(c)
    if c == 0:
        return dedekind_const(_F0)
    if c < 0:
        return dedekind_scale(-c, dedekind_neg(a))
    return DedekindReal(
        lower_scale(c, a.lower),
        upper_scale(c, a.upper),
        lambda eps: a.gap_bound(eps / c),
    )
