"""Exact interval sets over the rational line with open/closed endpoints.

Intervals are carried internally as half-open spans in "cut" space: a cut is
(value, side) with side 0 meaning "at the value" and side 1 "just past it".
This turns every mix of open and closed bounds into plain half-open algebra,
so union/subtract/intersect need no endpoint case analysis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

Cut = tuple[Fraction, int]


def lo_cut(value: Fraction, closed: bool) -> Cut:
    return (value, 0 if closed else 1)


def hi_cut(value: Fraction, closed: bool) -> Cut:
    return (value, 1 if closed else 0)


class Interval:
    """One maximal piece of a FracSet, exposed with explicit closure flags."""

    __slots__ = ("lo", "hi", "lo_closed", "hi_closed")

    def __init__(self, lo: Fraction, hi: Fraction, lo_closed: bool = True, hi_closed: bool = True):
        self.lo = lo
        self.hi = hi
        self.lo_closed = lo_closed
        self.hi_closed = hi_closed

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    def pick(self) -> Fraction:
        """A point inside the interval (the midpoint unless degenerate)."""
        if self.degenerate:
            return self.lo
        return (self.lo + self.hi) / 2

    def __eq__(self, other):
        return (
            isinstance(other, Interval)
            and (self.lo, self.hi, self.lo_closed, self.hi_closed)
            == (other.lo, other.hi, other.lo_closed, other.hi_closed)
        )

    def __repr__(self):
        l = "[" if self.lo_closed else "("
        r = "]" if self.hi_closed else ")"
        return f"{l}{self.lo}, {self.hi}{r}"


class FracSet:
    """A finite union of rational intervals; immutable value semantics."""

    __slots__ = ("_spans",)

    def __init__(self, spans: Iterable[tuple[Cut, Cut]] = ()):
        self._spans = self._normalize(list(spans))

    @staticmethod
    def _normalize(spans: list[tuple[Cut, Cut]]) -> tuple[tuple[Cut, Cut], ...]:
        spans = [(s, e) for s, e in spans if s < e]
        spans.sort()
        merged: list[tuple[Cut, Cut]] = []
        for s, e in spans:
            if merged and s <= merged[-1][1]:
                if e > merged[-1][1]:
                    merged[-1] = (merged[-1][0], e)
            else:
                merged.append((s, e))
        return tuple(merged)

    @staticmethod
    def empty() -> "FracSet":
        return FracSet()

    @staticmethod
    def interval(lo, hi, lo_closed: bool = True, hi_closed: bool = True) -> "FracSet":
        lo = Fraction(lo)
        hi = Fraction(hi)
        return FracSet([(lo_cut(lo, lo_closed), hi_cut(hi, hi_closed))])

    @staticmethod
    def point(value) -> "FracSet":
        return FracSet.interval(value, value)

    @staticmethod
    def from_intervals(items: Iterable[Interval]) -> "FracSet":
        return FracSet(
            [(lo_cut(i.lo, i.lo_closed), hi_cut(i.hi, i.hi_closed)) for i in items]
        )

    def is_empty(self) -> bool:
        return not self._spans

    def intervals(self) -> list[Interval]:
        out = []
        for (lv, ls), (hv, hs) in self._spans:
            out.append(Interval(lv, hv, lo_closed=(ls == 0), hi_closed=(hs == 1)))
        return out

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals())

    def measure(self) -> Fraction:
        total = Fraction(0)
        for (lv, _), (hv, _) in self._spans:
            total += hv - lv
        return total

    def contains(self, value) -> bool:
        c = (Fraction(value), 0)
        for s, e in self._spans:
            if s <= c < e:
                return True
            if s > c:
                break
        return False

    def union(self, other: "FracSet") -> "FracSet":
        return FracSet(list(self._spans) + list(other._spans))

    def intersect(self, other: "FracSet") -> "FracSet":
        out = []
        for s1, e1 in self._spans:
            for s2, e2 in other._spans:
                s = max(s1, s2)
                e = min(e1, e2)
                if s < e:
                    out.append((s, e))
        return FracSet(out)

    def subtract(self, other: "FracSet") -> "FracSet":
        out: list[tuple[Cut, Cut]] = []
        for s, e in self._spans:
            pieces = [(s, e)]
            for cs, ce in other._spans:
                nxt: list[tuple[Cut, Cut]] = []
                for ps, pe in pieces:
                    if ce <= ps or cs >= pe:
                        nxt.append((ps, pe))
                        continue
                    if cs > ps:
                        nxt.append((ps, min(cs, pe)))
                    if ce < pe:
                        nxt.append((max(ce, ps), pe))
                pieces = nxt
            out.extend(pieces)
        return FracSet(out)

    def bounds(self) -> tuple[Fraction, Fraction] | None:
        if not self._spans:
            return None
        return (self._spans[0][0][0], self._spans[-1][1][0])

    def __eq__(self, other):
        return isinstance(other, FracSet) and self._spans == other._spans

    def __repr__(self):
        return "FracSet(" + ", ".join(repr(i) for i in self.intervals()) + ")"
