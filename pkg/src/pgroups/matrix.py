"""The grid of fundamental subgroups ``p^j G [p^i]`` and rising paths over it.

Rows are indexed by the bound ``i`` (1 at the bottom up to exp(G)), columns
by the height shift ``j`` (0 through exp(G)-1), so the cell at ``(i, j)``
holds the subgroup of elements of height at least ``j`` killed by ``p^i``.
Entries weakly shrink left-to-right and weakly grow bottom-to-top.

Two distinguished column sets are tracked:

* ``display_cols`` — the first k columns (one per homocyclic component),
  the classical compact rendering of the grid;
* ``marker_cols`` — the socle heights ``n_i - 1``, the columns where new
  height values actually appear.  The alias operation resolves a non-marker
  column to the next marker column holding the same subgroup, when one
  exists.

A rising path climbs one row per step with strictly increasing columns; its
column sequence is an indicator, and the path is admissible under exactly
the indicator gap condition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    IndexOutOfRangeError,
    InvalidInputError,
    NoAliasError,
    NotAdmissibleError,
)
from .groups import (
    GroupSpec,
    Subgroup,
    fundamental_subgroup,
    subgroup_leq,
    subgroup_meet,
    subgroup_sum,
    zero_subgroup,
)
from .indicators import Indicator, is_admissible
from .reports import ClaimReport


@dataclass(frozen=True)
class FundMatrix:
    """The full e x e grid of fundamental subgroups of one group."""

    group: GroupSpec
    rows: tuple[tuple[Subgroup, ...], ...]  # rows[i-1][j] = cell (i, j)
    display_cols: tuple[int, ...]
    marker_cols: tuple[int, ...]

    @property
    def exponent(self) -> int:
        return self.group.exponent

    def entry(self, i: int, j: int) -> Subgroup:
        """Cell ``(i, j)``: row ``i`` in ``[1, e]``, column ``j`` in ``[0, e-1]``."""
        e = self.exponent
        if not (1 <= i <= e and 0 <= j < e):
            raise IndexOutOfRangeError(f"cell ({i},{j}) outside [1,{e}] x [0,{e - 1}]")
        return self.rows[i - 1][j]

    def cells(self) -> list[tuple[int, int]]:
        """All (row, column) index pairs, row-major from the bottom row."""
        e = self.exponent
        return [(i, j) for i in range(1, e + 1) for j in range(e)]


def build_matrix(G: GroupSpec) -> FundMatrix:
    """Materialize the grid.  Every cell is computed blockwise, no scans.

    >>> from .groups import make_group
    >>> M = build_matrix(make_group(2, [(2, 1), (4, 1)]))
    >>> M.entry(3, 0).order      # elements killed by p^3
    32
    """
    e = G.exponent
    rows = tuple(
        tuple(fundamental_subgroup(G, j, i) for j in range(e)) for i in range(1, e + 1)
    )
    display = tuple(range(len(G.components)))
    markers = tuple(n - 1 for n, _ in G.components)
    return FundMatrix(group=G, rows=rows, display_cols=display, marker_cols=markers)


def entry_meet(M: FundMatrix, cell_a: tuple[int, int], cell_b: tuple[int, int]):
    """Index-formula meet: cell ``(min rows, max cols)``.

    Returns ``((i, j), subgroup)``.  This formula is exact: intersecting the
    two membership conditions conjoins them.
    """
    (i, j), (k, l) = cell_a, cell_b
    target = (min(i, k), max(j, l))
    return target, M.entry(*target)


def entry_join(M: FundMatrix, cell_a: tuple[int, int], cell_b: tuple[int, int]):
    """Index-formula join candidate: cell ``(max rows, min cols)``.

    Always an upper bound of both cells, but not always the exact sum —
    compare against :func:`pgroups.groups.subgroup_sum` before trusting it.
    """
    (i, j), (k, l) = cell_a, cell_b
    target = (max(i, k), min(j, l))
    return target, M.entry(*target)


def quartering(M: FundMatrix, i: int, j: int) -> dict[str, list[tuple[int, int]]]:
    """Partition the grid relative to ``(i, j)`` by index position.

    ``se``: rows <= i and columns >= j (these are always contained in the
    cell); ``nw``: rows >= i and columns <= j (these always contain it);
    ``other``: the remaining two quadrants.  The anchor cell itself sits in
    both ``se`` and ``nw``; every other cell lands in exactly one bucket.
    """
    M.entry(i, j)  # validates indices
    buckets: dict[str, list[tuple[int, int]]] = {"se": [], "nw": [], "other": []}
    for k, l in M.cells():
        if k <= i and l >= j:
            buckets["se"].append((k, l))
        if k >= i and l <= j:
            buckets["nw"].append((k, l))
        if not (k <= i and l >= j) and not (k >= i and l <= j):
            buckets["other"].append((k, l))
    return buckets


def alias(M: FundMatrix, i: int, j: int) -> int:
    """Least marker column ``l > j`` whose cell equals cell ``(i, j)``.

    The requested column must not itself be a marker column.  Raises
    :class:`NoAliasError` when the cell is zero or when no marker column to
    the right holds the same subgroup (which does happen above the socle
    row).
    """
    cell = M.entry(i, j)
    if j in M.marker_cols:
        raise InvalidInputError(f"column {j} is already a marker column")
    if cell.order == 1:
        raise NoAliasError(f"cell ({i},{j}) is the zero subgroup")
    for l in M.marker_cols:
        if l > j and M.entry(i, l) == cell:
            return l
    raise NoAliasError(f"no marker column right of {j} matches cell ({i},{j})")


# --------------------------------------------------------------------------
# rising paths


@dataclass(frozen=True)
class RisingPath:
    """A nonempty staircase: one row up per step, columns strictly increasing."""

    cells: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.cells:
            raise InvalidInputError("a rising path needs at least one cell")
        for (i, j), (k, l) in itertools.pairwise(self.cells):
            if k != i + 1:
                raise InvalidInputError("path rows must climb by exactly one")
            if l <= j:
                raise InvalidInputError("path columns must strictly increase")

    @property
    def start_row(self) -> int:
        return self.cells[0][0]

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(j for _, j in self.cells)

    def __len__(self) -> int:
        return len(self.cells)


def path_to_indicator(path: RisingPath, group: GroupSpec | None = None) -> Indicator:
    """The column sequence of the path, read as an indicator.

    When ``group`` is given, the path must satisfy the gap condition there
    (a column jump of more than one from column ``v`` needs a nonzero Ulm
    invariant at ``v``), else :class:`NotAdmissibleError` is raised.
    """
    sigma = Indicator(path.columns)
    if group is not None and not is_admissible(group, sigma):
        raise NotAdmissibleError(
            f"path columns {path.columns} break the gap condition on {group.describe()}"
        )
    return sigma


def indicator_to_path(M: FundMatrix, sigma: Indicator, start_row: int = 1) -> RisingPath:
    """The staircase visiting ``(start_row + t, sigma_t)``.

    Requires ``sigma`` nonempty, admissible for the group, and short enough
    to fit above ``start_row``.
    """
    if sigma.length == 0:
        raise NotAdmissibleError("the empty indicator has no path")
    if not is_admissible(M.group, sigma):
        raise NotAdmissibleError(f"{sigma} is not admissible for {M.group.describe()}")
    e = M.exponent
    if start_row < 1 or start_row + sigma.length - 1 > e:
        raise NotAdmissibleError(
            f"path of length {sigma.length} does not fit starting at row {start_row}"
        )
    return RisingPath(tuple((start_row + t, v) for t, v in enumerate(sigma.entries)))


def enumerate_rising_paths(M: FundMatrix) -> list[RisingPath]:
    """Every admissible rising path over the full grid, single cells included.

    Deterministic order: by length, then start row, then columns.
    """
    from .indicators import enumerate_admissible

    e = M.exponent
    paths = []
    for sigma in enumerate_admissible(M.group):
        if sigma.length == 0:
            continue
        for start in range(1, e - sigma.length + 2):
            paths.append(indicator_to_path(M, sigma, start))
    paths.sort(key=lambda P: (len(P), P.start_row, P.columns))
    return paths


def path_tally(M: FundMatrix) -> dict[int, int]:
    """Number of admissible rising paths per length."""
    tally: dict[int, int] = {}
    for P in enumerate_rising_paths(M):
        tally[len(P)] = tally.get(len(P), 0) + 1
    return tally


# --------------------------------------------------------------------------
# the indicator row-sum


def sigma_sum(G: GroupSpec, sigma: Indicator, matrix: FundMatrix | None = None) -> Subgroup:
    """Sum of the cells selected by an indicator: row t+1 at column sigma_t.

    Entries at or beyond exp(G) would select the zero subgroup; such entries
    cannot occur in admissible indicators, so they simply contribute nothing.
    The empty indicator yields the zero subgroup.
    """
    M = matrix if matrix is not None else build_matrix(G)
    e = M.exponent
    total = zero_subgroup(M.group)
    for t, v in enumerate(sigma.entries):
        if v >= e:
            continue  # zero contribution by convention
        total = subgroup_sum(total, M.entry(t + 1, v))
    return total


def sigma_sum_verdicts(G: GroupSpec, matrix: FundMatrix | None = None, elements=None):
    """For every admissible indicator: does the cell sum equal G(sigma)?

    Returns ``{sigma: (equal, sum_contained_in_G_sigma)}`` with explicit
    set comparisons on both sides.
    """
    from .indicators import enumerate_admissible, indicator_subgroup

    M = matrix if matrix is not None else build_matrix(G)
    out = {}
    for sigma in sorted(enumerate_admissible(G), key=lambda s: (s.length, s.entries)):
        target = indicator_subgroup(G, sigma, elements=elements)
        total = sigma_sum(G, sigma, matrix=M)
        out[sigma] = (total == target, subgroup_leq(total, target))
    return out


def verify_sigma_sum(
    G: GroupSpec, matrix: FundMatrix | None = None, elements=None
) -> list[ClaimReport]:
    """Two reports: exact equality of the cell sum with G(sigma) per
    indicator, and the one-sided containment of the sum in G(sigma)."""
    from .indicators import indicator_subgroup

    M = matrix if matrix is not None else build_matrix(G)
    verdicts = sigma_sum_verdicts(G, matrix=M, elements=elements)
    name = G.describe()
    eq_witnesses = []
    cont_witnesses = []
    for sigma, (equal, contained) in verdicts.items():
        if not equal:
            target = indicator_subgroup(G, sigma, elements=elements)
            total = sigma_sum(G, sigma, matrix=M)
            missing = next(e for e in target if e not in total)
            eq_witnesses.append(
                {
                    "indicator": list(sigma.entries),
                    "sum_order": total.order,
                    "subgroup_order": target.order,
                    "element_missing_from_sum": list(missing.coords),
                }
            )
        if not contained:
            cont_witnesses.append({"indicator": list(sigma.entries)})
    checked = f"{len(verdicts)} admissible indicators"
    return [
        ClaimReport(
            claim_id="sigma-sum-equality",
            status="refuted" if eq_witnesses else "verified",
            group=name,
            witnesses=eq_witnesses,
            checked=checked,
        ),
        ClaimReport(
            claim_id="sigma-sum-containment",
            status="refuted" if cont_witnesses else "verified",
            group=name,
            witnesses=cont_witnesses,
            checked=checked,
        ),
    ]


# --------------------------------------------------------------------------
# claim checks over the grid


def check_monotone(M: FundMatrix) -> ClaimReport:
    """Rows weakly shrink left-to-right; columns weakly grow with the bound."""
    e = M.exponent
    witnesses = []
    for i in range(1, e + 1):
        for j in range(e - 1):
            if not subgroup_leq(M.entry(i, j + 1), M.entry(i, j)):
                witnesses.append({"cells": [[i, j + 1], [i, j]]})
    for i in range(1, e):
        for j in range(e):
            if not subgroup_leq(M.entry(i, j), M.entry(i + 1, j)):
                witnesses.append({"cells": [[i, j], [i + 1, j]]})
    return ClaimReport(
        claim_id="matrix-monotone",
        status="refuted" if witnesses else "verified",
        group=M.group.describe(),
        witnesses=witnesses,
        checked=f"{e * e} cells, all adjacent comparisons",
    )


def check_distinct(M: FundMatrix) -> ClaimReport:
    """Pairwise distinctness of cells over the display columns."""
    witnesses = []
    cells = [(i, j) for i in range(1, M.exponent + 1) for j in M.display_cols]
    for a, b in itertools.combinations(cells, 2):
        if M.entry(*a) == M.entry(*b):
            witnesses.append({"cells": [list(a), list(b)]})
    return ClaimReport(
        claim_id="matrix-distinct-entries",
        status="refuted" if witnesses else "verified",
        group=M.group.describe(),
        witnesses=witnesses,
        checked=f"{len(cells)} display cells, all pairs",
    )


def check_join_meet(M: FundMatrix) -> list[ClaimReport]:
    """Compare both index formulas against explicit subgroup sum/intersection
    over every unordered pair of cells in the full grid."""
    meet_witnesses = []
    join_witnesses = []
    cells = M.cells()
    for a, b in itertools.combinations(cells, 2):
        A, B = M.entry(*a), M.entry(*b)
        _, formula_meet = entry_meet(M, a, b)
        if formula_meet != subgroup_meet(A, B):
            meet_witnesses.append({"cells": [list(a), list(b)]})
        target, formula_join = entry_join(M, a, b)
        explicit = subgroup_sum(A, B)
        if formula_join != explicit:
            join_witnesses.append(
                {
                    "cells": [list(a), list(b)],
                    "formula_cell": list(target),
                    "formula_order": formula_join.order,
                    "sum_order": explicit.order,
                }
            )
    name = M.group.describe()
    checked = f"{len(cells) * (len(cells) - 1) // 2} cell pairs"
    return [
        ClaimReport(
            claim_id="matrix-meet-formula",
            status="refuted" if meet_witnesses else "verified",
            group=name,
            witnesses=meet_witnesses,
            checked=checked,
        ),
        ClaimReport(
            claim_id="matrix-join-formula",
            status="refuted" if join_witnesses else "verified",
            group=name,
            witnesses=join_witnesses,
            checked=checked,
        ),
    ]


def check_quartering(M: FundMatrix) -> list[ClaimReport]:
    """SE cells must be contained, NW cells must contain, remaining cells are
    claimed incomparable; the first two always hold, the third is checked
    honestly and can fail when distant cells coincide."""
    contain_witnesses = []
    incomp_witnesses = []
    for i, j in M.cells():
        center = M.entry(i, j)
        buckets = quartering(M, i, j)
        for k, l in buckets["se"]:
            if not subgroup_leq(M.entry(k, l), center):
                contain_witnesses.append({"center": [i, j], "cell": [k, l], "bucket": "se"})
        for k, l in buckets["nw"]:
            if not subgroup_leq(center, M.entry(k, l)):
                contain_witnesses.append({"center": [i, j], "cell": [k, l], "bucket": "nw"})
        for k, l in buckets["other"]:
            other = M.entry(k, l)
            if subgroup_leq(other, center) or subgroup_leq(center, other):
                incomp_witnesses.append({"center": [i, j], "cell": [k, l]})
    name = M.group.describe()
    e = M.exponent
    checked = f"{e * e} centers, full grid per center"
    return [
        ClaimReport(
            claim_id="quartering-containments",
            status="refuted" if contain_witnesses else "verified",
            group=name,
            witnesses=contain_witnesses[:5],
            checked=checked,
        ),
        ClaimReport(
            claim_id="quartering-incomparability",
            status="refuted" if incomp_witnesses else "verified",
            group=name,
            witnesses=incomp_witnesses[:5],
            checked=checked,
        ),
    ]


def check_alias(M: FundMatrix) -> ClaimReport:
    """Every nonzero non-marker cell should alias to a marker column on its
    right; cells where no marker column matches are witnesses."""
    witnesses = []
    total = 0
    for i, j in M.cells():
        if j in M.marker_cols:
            continue
        if M.entry(i, j).order == 1:
            continue
        total += 1
        try:
            alias(M, i, j)
        except NoAliasError:
            witnesses.append({"cell": [i, j]})
    return ClaimReport(
        claim_id="alias-to-marker",
        status="refuted" if witnesses else "verified",
        group=M.group.describe(),
        witnesses=witnesses,
        checked=f"{total} nonzero non-marker cells",
    )


def check_path_roundtrip(M: FundMatrix) -> ClaimReport:
    """indicator -> path -> indicator is the identity for every admissible
    indicator and every start row; path -> indicator -> path likewise."""
    from .indicators import enumerate_admissible

    witnesses = []
    count = 0
    for P in enumerate_rising_paths(M):
        count += 1
        sigma = path_to_indicator(P)
        back = indicator_to_path(M, sigma, start_row=P.start_row)
        if back != P:
            witnesses.append({"columns": list(P.columns), "start_row": P.start_row})
    for sigma in enumerate_admissible(M.group):
        if sigma.length == 0:
            continue
        P = indicator_to_path(M, sigma)
        if path_to_indicator(P) != sigma:
            witnesses.append({"indicator": list(sigma.entries)})
    return ClaimReport(
        claim_id="path-roundtrip",
        status="refuted" if witnesses else "verified",
        group=M.group.describe(),
        witnesses=witnesses,
        checked=f"{count} paths and all admissible indicators",
    )


def path_chain_check(
    G: GroupSpec,
    sigma: Indicator | None = None,
    matrix: FundMatrix | None = None,
    elements=None,
) -> ClaimReport:
    """Test whether G(sigma) sits inside every cell on sigma's rising path.

    That containment direction fails in general (already on the smallest
    two-block groups); the true direction is the reverse one — every path
    cell sits inside G(sigma) — which is exactly the containment half of
    :func:`verify_sigma_sum`.  With ``sigma=None`` all admissible indicators
    are swept.
    """
    from .indicators import enumerate_admissible, indicator_subgroup

    M = matrix if matrix is not None else build_matrix(G)
    targets = [sigma] if sigma is not None else [
        s for s in sorted(enumerate_admissible(G), key=lambda s: (s.length, s.entries))
    ]
    witnesses = []
    checked = 0
    for s in targets:
        if s.length == 0:
            continue  # no path, vacuous
        sub = indicator_subgroup(G, s, elements=elements)
        for t, v in enumerate(s.entries):
            checked += 1
            cell = M.entry(t + 1, v)
            if not subgroup_leq(sub, cell):
                witnesses.append(
                    {
                        "indicator": list(s.entries),
                        "cell": [t + 1, v],
                        "subgroup_order": sub.order,
                        "cell_order": cell.order,
                    }
                )
    return ClaimReport(
        claim_id="path-subgroup-chain",
        status="refuted" if witnesses else "verified",
        group=G.describe(),
        witnesses=witnesses[:5],
        checked=f"{checked} path cells",
        note="reverse containment (cells inside G(sigma)) is the verified half",
    )
