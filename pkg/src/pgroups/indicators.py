"""Height indicators: finite strictly increasing sequences ordered by refinement.

The indicator of a nonzero element ``a`` of exponent ``n+1`` is the sequence
``(height(a), height(pa), ..., height(p^n a))`` — strictly increasing finite
naturals with an implicit terminal infinity.  The zero element gets the empty
sequence, written ``(inf)``.

Ordering: ``sigma`` precedes ``tau`` when ``sigma`` is at least as long and
is pointwise <= ``tau`` on ``tau``'s finite entries.  Shorter sequences sit
higher; the empty indicator is the top.  Under this order the set of all
bounded indicators is a lattice whose meet pads the shorter argument with
infinity and whose join truncates to the shorter length.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    IndexOutOfRangeError,
    InvalidInputError,
    NotNormalizableError,
)
from .groups import Element, GroupSpec, INF, exponent, height, smul, ulm_invariant


@dataclass(frozen=True)
class Indicator:
    """A strictly increasing tuple of nonnegative ints (possibly empty).

    The terminal infinity is implicit and not stored.

    >>> Indicator((1, 3)).length
    2
    >>> str(Indicator(()))
    '(inf)'
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        last = -1
        for e in self.entries:
            if not isinstance(e, int) or e < 0:
                raise InvalidInputError(f"indicator entries must be naturals: {e!r}")
            if e <= last:
                raise InvalidInputError(
                    f"indicator entries must strictly increase: {self.entries}"
                )
            last = e

    @property
    def length(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join([*map(str, self.entries), "inf"]) + ")"

    def __repr__(self) -> str:
        return f"Indicator{self.entries}"

    def to_json(self) -> dict:
        return {"entries": list(self.entries)}

    @classmethod
    def from_json(cls, data: dict) -> "Indicator":
        try:
            entries = tuple(int(e) for e in data["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed indicator: {exc}") from exc
        return cls(entries)


#: The empty indicator (the top of the order; indicator of the zero element).
TOP = Indicator(())


def ind_of(a: Element) -> Indicator:
    """Indicator of an element: heights of its successive p-power multiples.

    >>> from .groups import make_group
    >>> G = make_group(2, [(2, 1), (4, 1)])
    >>> ind_of(G.element([1, 0]))
    Indicator(0, 1)
    """
    n = exponent(a)
    p = a.group.p
    heights = []
    cur = a
    for _ in range(n):
        heights.append(height(cur))
        cur = smul(p, cur)
    return Indicator(tuple(heights))


def precedes(sigma: Indicator, tau: Indicator) -> bool:
    """Refinement order: longer-and-pointwise-below precedes shorter-and-above.

    >>> precedes(Indicator((1, 3)), Indicator((1,)))
    True
    >>> precedes(Indicator((1,)), Indicator((1, 3)))
    False
    """
    if sigma.length < tau.length:
        return False
    return all(s <= t for s, t in zip(sigma.entries, tau.entries))


def ind_min(sigma: Indicator, tau: Indicator) -> Indicator:
    """Greatest lower bound: pointwise min with the shorter side padded by inf.

    Strict increase of both inputs forces strict increase of the output, so
    normalization never has to intervene.

    >>> ind_min(Indicator((1,)), Indicator((0, 3)))
    Indicator(0, 3)
    """
    n = max(sigma.length, tau.length)
    merged = []
    for i in range(n):
        s = sigma.entries[i] if i < sigma.length else INF
        t = tau.entries[i] if i < tau.length else INF
        merged.append(s if s <= t else t)
    return _normalized(merged)


def ind_max(sigma: Indicator, tau: Indicator) -> Indicator:
    """Least upper bound: pointwise max truncated at the shorter length.

    >>> ind_max(Indicator((0, 1)), Indicator((1, 3)))
    Indicator(1, 3)
    """
    n = min(sigma.length, tau.length)
    merged = [max(sigma.entries[i], tau.entries[i]) for i in range(n)]
    return _normalized(merged)


def _normalized(entries: list) -> Indicator:
    # Defensive guard behind ind_min/ind_max.  Both constructions provably
    # preserve strict increase, so a violation indicates a caller bug; the
    # error type is kept because the public contract names it.
    finite = [e for e in entries if e is not INF]
    if len(finite) != len(entries):
        raise NotNormalizableError("interior infinity in pointwise combination")
    for a, b in itertools.pairwise(finite):
        if b <= a:
            raise NotNormalizableError(f"not strictly increasing: {entries}")
    return Indicator(tuple(finite))


def has_gap_at(sigma: Indicator, i: int) -> bool:
    """True when the step from entry i to entry i+1 skips at least one value.

    Requires two finite entries at positions i, i+1; the jump to the terminal
    infinity never counts as a gap.
    """
    if i < 0 or i + 1 >= sigma.length:
        raise IndexOutOfRangeError(
            f"positions {i},{i + 1} not both inside indicator of length {sigma.length}"
        )
    return sigma.entries[i] + 1 < sigma.entries[i + 1]


def is_admissible(G: GroupSpec, sigma: Indicator) -> bool:
    """Gap-condition admissibility for ``G``.

    Entries must stay below exp(G), the length may not exceed exp(G), and a
    gap after value v is allowed only when the Ulm invariant u_v is nonzero.
    The implicit terminal infinity never triggers the gap condition.
    """
    e = G.exponent
    if sigma.length > e:
        return False
    if any(v >= e for v in sigma.entries):
        return False
    for i in range(sigma.length - 1):
        if has_gap_at(sigma, i) and ulm_invariant(G, sigma.entries[i]) == 0:
            return False
    return True


def is_realizable(G: GroupSpec, sigma: Indicator) -> bool:
    """True when some element of ``G`` has exactly this indicator.

    Strictly stronger than :func:`is_admissible`: the final finite entry is
    the height of a socle element, so it must also land on a nonzero Ulm
    invariant.
    """
    if not is_admissible(G, sigma):
        return False
    if sigma.length == 0:
        return True
    return ulm_invariant(G, sigma.entries[-1]) != 0


def enumerate_admissible(G: GroupSpec) -> set[Indicator]:
    """All admissible indicators of ``G`` (always includes the empty one).

    >>> from .groups import make_group
    >>> len(enumerate_admissible(make_group(2, [(2, 1), (4, 1)])))
    13
    """
    e = G.exponent
    found: set[Indicator] = set()
    for length in range(e + 1):
        for entries in itertools.combinations(range(e), length):
            cand = Indicator(entries)
            if is_admissible(G, cand):
                found.add(cand)
    return found


def min_admissible(G: GroupSpec) -> Indicator:
    """The unique minimum admissible indicator ``(0, 1, ..., e-1)``."""
    return Indicator(tuple(range(G.exponent)))


def indicator_subgroup(G: GroupSpec, sigma: Indicator, elements=None):
    """The set of elements whose indicator dominates ``sigma``.

    Equivalently: exponent at most ``len(sigma)`` and ``height(p^i a) >=
    sigma_i`` for each finite entry.  Always a fully invariant subgroup.
    ``elements`` may supply a pre-enumerated element list to avoid rescans.

    >>> from .groups import make_group
    >>> G = make_group(2, [(2, 1), (4, 1)])
    >>> indicator_subgroup(G, Indicator((1,))).order    # the socle
    4
    """
    from .groups import enumerate_elements, subgroup_from_set

    if elements is None:
        elements = enumerate_elements(G)
    members = [a for a in elements if precedes(sigma, ind_of(a))]
    return subgroup_from_set(G, members)


def admissible_glb(
    G: GroupSpec, sigma: Indicator, tau: Indicator, universe: set[Indicator] | None = None
) -> Indicator | None:
    """Greatest lower bound of two admissible indicators *within* the
    admissible family of ``G``, or None when no unique one exists.

    This can differ from :func:`ind_min` (whose output may be inadmissible),
    and for some groups no greatest admissible lower bound exists at all.
    """
    pool = enumerate_admissible(G) if universe is None else universe
    lower = [r for r in pool if precedes(r, sigma) and precedes(r, tau)]
    greatest = [r for r in lower if all(precedes(q, r) for q in lower)]
    return greatest[0] if len(greatest) == 1 else None


def admissible_lub(
    G: GroupSpec, sigma: Indicator, tau: Indicator, universe: set[Indicator] | None = None
) -> Indicator | None:
    """Least upper bound within the admissible family, or None."""
    pool = enumerate_admissible(G) if universe is None else universe
    upper = [r for r in pool if precedes(sigma, r) and precedes(tau, r)]
    least = [r for r in upper if all(precedes(r, q) for q in upper)]
    return least[0] if len(least) == 1 else None


def indicator_universe(bound: int) -> list[Indicator]:
    """Every indicator with entries < bound and length <= bound, sorted."""
    out = []
    for length in range(bound + 1):
        for entries in itertools.combinations(range(bound), length):
            out.append(Indicator(entries))
    out.sort(key=lambda s: (s.length, s.entries))
    return out


def check_endo_monotone(G: GroupSpec, max_ring: int | None = None):
    """Exhaustively confirm that applying an endomorphism refines indicators:
    ``ind(a) precedes ind(a f)`` for every element/endomorphism pair.

    Refinement is equivalent to ``height(p^k a) <= height(p^k af)`` for every
    k below exp(G) (the length condition falls out of the infinite height of
    vanished multiples), which vectorizes over the ring's action table.
    Returns a claim report; refutation would carry the offending pair.
    """
    import numpy as np

    from .endos import get_ring
    from .groups import enumerate_elements
    from .reports import ClaimReport

    ring = get_ring(G, max_ring=max_ring)
    elements = enumerate_elements(G)
    n = ring.n_elements
    e = G.exponent
    heights = np.full((e, n), np.inf)
    by_index: list = [None] * n
    for a in elements:
        i = ring.element_index(a)
        by_index[i] = a
        cur = a
        for k in range(e):
            h = height(cur)
            heights[k, i] = np.inf if h is INF else float(h)
            cur = smul(G.p, cur)
    witnesses = []
    for start, block in ring.action_chunks():
        ok = (heights[:, block] >= heights[:, None, :]).all(axis=0)
        if ok.all():
            continue
        for f_off, x in zip(*np.nonzero(~ok)):
            a = by_index[int(x)]
            img = by_index[int(block[f_off, x])]
            f = ring.endo_of_index(start + int(f_off))
            witnesses.append(
                {
                    "element": list(a.coords),
                    "endomorphism": [list(r) for r in f.matrix],
                    "indicator": list(ind_of(a).entries),
                    "image_indicator": list(ind_of(img).entries),
                }
            )
            if len(witnesses) >= 5:
                break
        if len(witnesses) >= 5:
            break
    return ClaimReport(
        claim_id="endo-indicator-monotone",
        status="refuted" if witnesses else "verified",
        group=G.describe(),
        witnesses=witnesses,
        checked=f"{len(elements)} elements x {ring.size} endomorphisms",
    )
