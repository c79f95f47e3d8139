"""Signature arithmetic for cocompact Fuchsian groups.

A signature ``(h; m_1, ..., m_l)`` records the orbit genus ``h`` and the
branch periods of the canonical projection.  Everything here is exact
rational arithmetic: normalized hyperbolic area, Teichmueller dimension,
Riemann-Hurwitz genus, exhaustive candidate-signature search for a given
group order and genus, and the table of dimension-preserving signature
extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantError

__all__ = [
    "Signature",
    "ExtensionRule",
    "normalized_area",
    "teich_dim",
    "rh_genus",
    "parse_signature",
    "format_signature",
    "candidate_signatures",
    "possible_extensions",
    "EXTENSION_TABLE",
]


@dataclass(frozen=True)
class Signature:
    """Orbit genus plus a non-decreasing tuple of branch periods >= 2."""

    h: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.h, int) or self.h < 0:
            raise ValueError(f"orbit genus must be a non-negative integer, got {self.h!r}")
        periods = tuple(sorted(self.periods))
        for m in periods:
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"every period must be an integer >= 2, got {m!r}")
        object.__setattr__(self, "periods", periods)

    def __str__(self) -> str:
        return format_signature(self)


def normalized_area(sig: Signature) -> Fraction:
    """Hyperbolic area of a fundamental region divided by 2*pi."""
    return Fraction(2 * sig.h - 2) + sum(
        (Fraction(m - 1, m) for m in sig.periods), Fraction(0)
    )


def teich_dim(sig: Signature) -> int:
    """Complex dimension 3h - 3 + l of the deformation space."""
    dim = 3 * sig.h - 3 + len(sig.periods)
    if dim < 0:
        raise ValueError(f"signature {sig} is degenerate (dimension {dim})")
    return dim


def rh_genus(sig: Signature, group_order: int) -> int:
    """Genus of the covering surface by the Riemann-Hurwitz formula.

    Solves ``2g - 2 = group_order * normalized_area(sig)``; raises if the
    result is not a non-negative integer.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    doubled = group_order * normalized_area(sig)
    g = 1 + doubled / 2
    if g.denominator != 1 or g < 0:
        raise ValueError(
            f"signature {sig} with group order {group_order} gives non-integral genus {g}"
        )
    return int(g)


def format_signature(sig: Signature) -> str:
    if not sig.periods:
        return f"{sig.h};-"
    return f"{sig.h};" + ",".join(str(m) for m in sig.periods)


def parse_signature(text: str) -> Signature:
    """Parse ``"h;m1,m2,..."`` (periods part ``-`` or empty for none)."""
    head, sep, tail = text.strip().partition(";")
    if not sep:
        raise ValueError(f"signature string must look like 'h;m1,m2,...', got {text!r}")
    try:
        h = int(head)
    except ValueError as exc:
        raise ValueError(f"bad orbit genus in signature {text!r}") from exc
    tail = tail.strip()
    if tail in ("", "-"):
        return Signature(h, ())
    try:
        periods = tuple(int(p) for p in tail.split(","))
    except ValueError as exc:
        raise ValueError(f"bad period list in signature {text!r}") from exc
    return Signature(h, periods)


def candidate_signatures(available_orders, group_order: int, genus: int):
    """All hyperbolic signatures a group of the given order could act with.

    Returns every signature whose normalized area equals
    ``2(genus-1)/group_order`` and whose periods all lie in
    ``available_orders`` (1 is ignored).  Exhaustive: ``h`` is bounded by
    the area and each period contributes at least 1/2, so the search tree
    is finite.  Deterministic, sorted by ``(h, periods)``.
    """
    if genus < 2:
        raise ValueError("candidate search requires genus >= 2")
    target = Fraction(2 * (genus - 1), group_order)
    pool = sorted({int(m) for m in available_orders if int(m) >= 2})
    found: list[Signature] = []

    def extend(start: int, remaining: Fraction, prefix: list[int]) -> None:
        if remaining == 0:
            found.append(Signature(h, tuple(prefix)))
            return
        for idx in range(start, len(pool)):
            m = pool[idx]
            term = Fraction(m - 1, m)
            if term > remaining:
                break  # pool is sorted, later periods only contribute more
            prefix.append(m)
            extend(idx, remaining - term, prefix)
            prefix.pop()

    h = 0
    while Fraction(2 * h - 2) <= target:
        remaining = target - (2 * h - 2)
        if remaining == 0:
            if h >= 2:  # (h;-) is hyperbolic only for h >= 2
                found.append(Signature(h, ()))
        else:
            extend(0, remaining, [])
        h += 1

    result = sorted(set(found), key=lambda s: (s.h, s.periods))
    for sig in result:
        if normalized_area(sig) != target:  # defensive: exactness of the solve
            raise InvariantError(f"candidate {sig} does not hit the target area")
    return result


@dataclass(frozen=True)
class ExtensionRule:
    """One dimension-preserving inclusion of Fuchsian groups.

    ``inner`` sits inside a group of signature ``outer`` with the given
    index; the hyperbolic areas satisfy ``area(inner) = index *
    area(outer)`` and the Teichmueller dimensions agree, both checked at
    construction.
    """

    inner: Signature
    outer: Signature
    index: int

    def __post_init__(self):
        if self.index < 2:
            raise InvariantError("extension index must be at least 2")
        if normalized_area(self.inner) != self.index * normalized_area(self.outer):
            raise InvariantError(
                f"area mismatch in extension {self.inner} < {self.outer} (index {self.index})"
            )
        if teich_dim(self.inner) != teich_dim(self.outer):
            raise InvariantError(
                f"dimension mismatch in extension {self.inner} < {self.outer}"
            )


def _rule_genus1(sig: Signature):
    if sig.h == 1 and len(sig.periods) == 1:
        t = sig.periods[0]
        return ExtensionRule(sig, Signature(0, (2, 2, 2, 2 * t)), 2)
    return None


def _rule_quad_equal(sig: Signature):
    if sig.h == 0 and len(sig.periods) == 4 and len(set(sig.periods)) == 1:
        t = sig.periods[0]
        if t >= 3:
            return ExtensionRule(sig, Signature(0, (2, 2, 2, t)), 4)
    return None


def _rule_quad_pairs(sig: Signature):
    if sig.h == 0 and len(sig.periods) == 4:
        t1, t2 = sig.periods[0], sig.periods[2]
        if sig.periods == (t1, t1, t2, t2) and (t1, t2) != (2, 2):
            return ExtensionRule(sig, Signature(0, (2, 2, t1, t2)), 2)
    return None


def _rule_genus2(sig: Signature):
    if sig.h == 2 and not sig.periods:
        return ExtensionRule(sig, Signature(0, (2, 2, 2, 2, 2, 2)), 2)
    return None


# Dimension-preserving extension rows, in fixed precedence order.  Kept as
# a named table so additional rows can be appended without code change.
EXTENSION_TABLE = (
    ("(1;t) < (0;2,2,2,2t) index 2", _rule_genus1),
    ("(0;t,t,t,t) < (0;2,2,2,t) index 4", _rule_quad_equal),
    ("(0;t1,t1,t2,t2) < (0;2,2,t1,t2) index 2", _rule_quad_pairs),
    ("(2;-) < (0;2,2,2,2,2,2) index 2", _rule_genus2),
)


def possible_extensions(sig: Signature) -> list[ExtensionRule]:
    """Direct dimension-preserving extensions of ``sig`` from the table.

    Returns the empty list when no row matches (the action is already
    maximal among same-dimension overgroups).  Requires ``sig`` to be
    hyperbolic.
    """
    if normalized_area(sig) <= 0:
        raise ValueError(f"signature {sig} is not hyperbolic")
    rules = []
    for _, row in EXTENSION_TABLE:
        rule = row(sig)
        if rule is not None:
            rules.append(rule)
    return rules
