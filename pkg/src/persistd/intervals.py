"""Exact decorated-interval arithmetic.

Every value is built from exact rationals (``fractions.Fraction``); there is
no floating point anywhere.  An interval carries a decoration (open/closed)
on each endpoint, which is what decides morphism existence at exact
thresholds, so all comparisons are made through two total orders on
(value, decoration) pairs:

* the *lower-bound order*, where at equal values a closed endpoint precedes
  an open one (``[0`` starts before ``(0``), and
* the *upper-bound order*, where at equal values an open endpoint precedes
  a closed one (``2)`` ends before ``2]``).

Infinite endpoints are always open: intervals are subsets of the real line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class MalformedIntervalError(ValueError):
    """An endpoint combination that cannot describe a real interval."""


class IntervalParseError(ValueError):
    """Interval text that does not match the accepted grammar."""


class OrderingError(ValueError):
    """A relation precondition (such as J <= I) does not hold."""


Rational = Fraction | int


def _as_fraction(x: Rational | str) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass Fraction, int or 'p/q'")
    return Fraction(x)


class ExtRational:
    """A point of the extended rational line: -inf < every p/q < +inf.

    Finite values are reduced fractions; the infinities are singleton-like
    values that compare outside every fraction.  Adding or subtracting a
    finite rational leaves an infinity unchanged.
    """

    __slots__ = ("sign", "value")

    def __init__(self, value: Rational | str | "ExtRational" = 0):
        if isinstance(value, ExtRational):
            sign, val = value.sign, value.value
        elif isinstance(value, str):
            text = value.strip()
            if text in ("inf", "+inf"):
                sign, val = 1, Fraction(0)
            elif text == "-inf":
                sign, val = -1, Fraction(0)
            else:
                try:
                    sign, val = 0, Fraction(text)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"not an extended rational: {value!r}") from exc
        else:
            sign, val = 0, _as_fraction(value)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "value", val)

    @classmethod
    def _infinite(cls, sign: int) -> "ExtRational":
        out = cls(0)
        object.__setattr__(out, "sign", sign)
        return out

    def __setattr__(self, name, val):  # pragma: no cover - guard
        raise AttributeError("ExtRational is immutable")

    @property
    def is_finite(self) -> bool:
        return self.sign == 0

    @property
    def as_fraction(self) -> Fraction:
        if self.sign != 0:
            raise ValueError("infinite value has no fraction form")
        return self.value

    def _key(self) -> tuple[int, Fraction]:
        return (self.sign, self.value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtRational):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other: "ExtRational") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "ExtRational") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "ExtRational") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "ExtRational") -> bool:
        return self._key() >= other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __add__(self, other: "Rational | ExtRational") -> "ExtRational":
        if isinstance(other, ExtRational):
            if self.sign and other.sign and self.sign != other.sign:
                raise ArithmeticError("inf + -inf is undefined")
            if self.sign or other.sign:
                return self if self.sign else other
            return ExtRational(self.value + other.value)
        if self.sign:
            return self
        return ExtRational(self.value + _as_fraction(other))

    __radd__ = __add__

    def __sub__(self, other: "Rational | ExtRational") -> "ExtRational":
        if isinstance(other, ExtRational):
            return self + (-other)
        return self + (-_as_fraction(other))

    def __neg__(self) -> "ExtRational":
        if self.sign:
            return ExtRational._infinite(-self.sign)
        return ExtRational(-self.value)

    def __abs__(self) -> "ExtRational":
        return -self if self._key() < (0, Fraction(0)) else self

    def half(self) -> "ExtRational":
        if self.sign:
            return self
        return ExtRational(self.value / 2)

    def gap(self, other: "ExtRational") -> "ExtRational":
        """Endpoint displacement: |x - y|, zero between equal infinities,
        infinite when exactly one side is (or the infinities differ)."""
        if self.sign or other.sign:
            return ExtRational(0) if self.sign == other.sign else POS_INF
        return abs(ExtRational(self.value - other.value))

    def __str__(self) -> str:
        if self.sign > 0:
            return "inf"
        if self.sign < 0:
            return "-inf"
        return str(self.value)

    def __repr__(self) -> str:
        return f"ExtRational({str(self)!r})"


NEG_INF = ExtRational._infinite(-1)
POS_INF = ExtRational._infinite(1)
ZERO = ExtRational(0)


@dataclass(frozen=True)
class Endpoint:
    """An interval endpoint: an extended rational plus an open/closed flag."""

    value: ExtRational
    closed: bool

    def __post_init__(self):
        if not isinstance(self.value, ExtRational):
            object.__setattr__(self, "value", ExtRational(self.value))
        if self.closed and not self.value.is_finite:
            raise MalformedIntervalError(
                f"infinite endpoint {self.value} must be open"
            )

    def flipped(self) -> "Endpoint":
        return Endpoint(self.value, not self.closed)

    def __repr__(self) -> str:
        return f"Endpoint({self.value}, {'closed' if self.closed else 'open'})"


def lower_key(e: Endpoint) -> tuple[ExtRational, int]:
    """Sort key for endpoints used as lower bounds: closed before open."""
    return (e.value, 0 if e.closed else 1)


def upper_key(e: Endpoint) -> tuple[ExtRational, int]:
    """Sort key for endpoints used as upper bounds: open before closed."""
    return (e.value, 1 if e.closed else 0)


@dataclass(frozen=True)
class Interval:
    """A decorated interval, or the empty interval (both endpoints ``None``).

    The pair realizes ``{x : lo < x < hi}`` with strictness at an endpoint
    iff it is open.  Construct through :func:`make_interval`, which
    normalizes point-free endpoint pairs to the empty interval.
    """

    lo: Endpoint | None
    hi: Endpoint | None

    def __post_init__(self):
        if (self.lo is None) != (self.hi is None):
            raise MalformedIntervalError("both endpoints or neither")
        if self.lo is None:
            return
        if self.lo.value > self.hi.value:
            raise MalformedIntervalError(
                f"lower endpoint {self.lo.value} exceeds upper endpoint {self.hi.value}"
            )
        if self.lo.value == self.hi.value and not (self.lo.closed and self.hi.closed):
            raise MalformedIntervalError(
                "an equal-value endpoint pair is only valid when both are closed; "
                "use make_interval to normalize"
            )

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    @property
    def is_singleton(self) -> bool:
        return self.lo is not None and self.lo.value == self.hi.value

    @property
    def is_finite(self) -> bool:
        """True when the interval has finite diameter (the empty interval counts)."""
        return self.is_empty or (self.lo.value.is_finite and self.hi.value.is_finite)

    def contains(self, x: Rational | ExtRational) -> bool:
        if self.is_empty:
            return False
        x = x if isinstance(x, ExtRational) else ExtRational(x)
        lo, hi = self.lo, self.hi
        above = lo.value < x or (lo.value == x and lo.closed)
        below = x < hi.value or (x == hi.value and hi.closed)
        return above and below

    def intersect(self, other: "Interval") -> "Interval":
        if self.is_empty or other.is_empty:
            return EMPTY
        lo = max(self.lo, other.lo, key=lower_key)
        hi = min(self.hi, other.hi, key=upper_key)
        return make_interval(lo, hi)

    def is_subset_of(self, other: "Interval") -> bool:
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        return (
            lower_key(other.lo) <= lower_key(self.lo)
            and upper_key(self.hi) <= upper_key(other.hi)
        )

    def leq(self, other: "Interval") -> bool:
        """The interval partial order: A <= B iff every point of A has a
        point of B above it and every point of B has a point of A below it.

        Empty intervals follow the literal quantifier reading:
        empty <= empty, and the relation fails between empty and nonempty.
        """
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        return (
            lower_key(self.lo) <= lower_key(other.lo)
            and upper_key(self.hi) <= upper_key(other.hi)
        )

    def strictly_precedes(self, other: "Interval") -> bool:
        """True iff every point of self is <= every point of other
        (vacuously true when either side is empty)."""
        if self.is_empty or other.is_empty:
            return True
        return self.hi.value <= other.lo.value

    def diameter(self) -> ExtRational:
        """Endpoint spread, decorations ignored; 0 for empty and singletons."""
        if self.is_empty:
            return ZERO
        return self.hi.value - self.lo.value

    def shift(self, eps: Rational) -> "Interval":
        """x lies in the shift by eps iff x + eps lies in the original;
        both endpoint values decrease by eps, decorations are kept."""
        if self.is_empty:
            return self
        eps = _as_fraction(eps)
        return Interval(
            Endpoint(self.lo.value - eps, self.lo.closed),
            Endpoint(self.hi.value - eps, self.hi.closed),
        )

    def erode(self, eps: Rational) -> "Interval":
        """Shrink by eps on each side: the intersection of the two shifts."""
        eps = _as_fraction(eps)
        if eps < 0:
            raise ValueError(f"erosion needs eps >= 0, got {eps}")
        return self.shift(eps).intersect(self.shift(-eps))

    def canonical_key(self):
        """Deterministic sort key; empty sorts first."""
        if self.is_empty:
            return ((NEG_INF, -1), (NEG_INF, -1))
        return (lower_key(self.lo), upper_key(self.hi))

    def __str__(self) -> str:
        return format_interval(self)

    def __repr__(self) -> str:
        return f"Interval({format_interval(self)!r})"


EMPTY = Interval(None, None)


def make_interval(lo: Endpoint, hi: Endpoint) -> Interval:
    """Normalized construction: returns the empty interval whenever the
    endpoint pair describes no points (lo above hi, or equal values not
    both closed).  Closed infinite endpoints are rejected at
    :class:`Endpoint` construction."""
    if lo.value > hi.value:
        return EMPTY
    if lo.value == hi.value and not (lo.closed and hi.closed):
        return EMPTY
    return Interval(lo, hi)


def interval(lo: Rational | str, hi: Rational | str, bounds: str = "[)") -> Interval:
    """Convenience constructor: ``interval(0, 2, "[)")`` is ``[0,2)``."""
    if bounds[0] not in "[(" or bounds[1] not in ")]":
        raise ValueError(f"bounds must look like '[)' or '(]', got {bounds!r}")
    return make_interval(
        Endpoint(ExtRational(lo), bounds[0] == "["),
        Endpoint(ExtRational(hi), bounds[1] == "]"),
    )


def singleton(r: Rational | str) -> Interval:
    return interval(r, r, "[]")


def residuals(j: Interval, i: Interval) -> tuple[Interval, Interval]:
    """For J <= I, split off what each interval keeps outside the overlap:
    returns (J without I∩J, I without I∩J).  Both parts are intervals, and
    the first strictly precedes the overlap, which strictly precedes the
    second."""
    if j.is_empty or i.is_empty:
        raise OrderingError("residuals need nonempty intervals")
    if not j.leq(i):
        raise OrderingError(f"residuals require {j} <= {i}, which fails")
    k = i.intersect(j)
    if k.is_empty:
        return (j, i)
    j_part = EMPTY if not k.lo.value.is_finite else make_interval(j.lo, k.lo.flipped())
    i_part = EMPTY if not k.hi.value.is_finite else make_interval(k.hi.flipped(), i.hi)
    return (j_part, i_part)


def _parse_ext(token: str, text: str, what: str) -> ExtRational:
    token = token.strip()
    if token in ("inf", "+inf", "-inf"):
        return ExtRational(token)
    try:
        return ExtRational(Fraction(token))
    except (ValueError, ZeroDivisionError):
        raise IntervalParseError(
            f"bad {what} endpoint {token!r} in interval {text!r}: "
            "expected p/q, an integer, inf or -inf"
        ) from None


def parse_interval(text: str) -> Interval:
    """Parse the interval text form: ``[lo,hi)``, ``(lo,hi]``, ``[lo,hi]``,
    ``(lo,hi)``, ``[r,r]`` or ``empty``, with rational endpoints written as
    ``p/q`` or integers and the infinities as ``-inf``/``inf``.

    Rejects text whose lower endpoint exceeds the upper one, and closed
    infinite endpoints; an equal-value pair that is not closed on both
    sides parses to the empty interval.
    """
    s = text.strip()
    if s == "empty":
        return EMPTY
    if len(s) < 2 or s[0] not in "[(" or s[-1] not in ")]":
        raise IntervalParseError(
            f"interval {text!r} must be 'empty' or bracketed like [lo,hi)"
        )
    body = s[1:-1]
    parts = body.split(",")
    if len(parts) != 2:
        raise IntervalParseError(
            f"interval {text!r} must contain exactly one comma between endpoints"
        )
    lo_val = _parse_ext(parts[0], text, "lower")
    hi_val = _parse_ext(parts[1], text, "upper")
    lo_closed = s[0] == "["
    hi_closed = s[-1] == "]"
    if lo_closed and not lo_val.is_finite:
        raise MalformedIntervalError(
            f"closed infinite lower endpoint in interval {text!r}"
        )
    if hi_closed and not hi_val.is_finite:
        raise MalformedIntervalError(
            f"closed infinite upper endpoint in interval {text!r}"
        )
    if lo_val > hi_val:
        raise IntervalParseError(
            f"lower endpoint exceeds upper endpoint in interval {text!r}"
        )
    return make_interval(Endpoint(lo_val, lo_closed), Endpoint(hi_val, hi_closed))


def format_interval(i: Interval) -> str:
    if i.is_empty:
        return "empty"
    left = "[" if i.lo.closed else "("
    right = "]" if i.hi.closed else ")"
    return f"{left}{i.lo.value},{i.hi.value}{right}"
