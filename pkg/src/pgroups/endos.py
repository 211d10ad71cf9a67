"""Endomorphism rings of bounded abelian p-groups, their ideals, and the
image/preimage correspondence between ideals and fully invariant subgroups.

An endomorphism is an r x r integer matrix acting on row vectors from the
right: coordinate ``t`` of ``a.f`` is ``sum_s a_s F[s][t]`` reduced mod
``p^e_t``.  Well-definedness forces entry ``(s, t)`` to be divisible by
``p^max(0, e_t - e_s)``, which also fixes the ring order at
``p^(sum min(e_s, e_t))``.

Two order-preserving maps connect ideals and subgroups:

* a subgroup ``H`` (fully invariant) pulls back to the ideal of all
  endomorphisms whose image lies inside ``H``;
* an ideal ``I`` pushes forward to the subgroup generated by the images of
  its members.

Both directions, their closure behavior, and several identities about the
power/socle ideals are checked mechanically by the ``verify_*`` helpers.

Enumeration order of the ring is fixed (matrix positions row-major, entries
ascending), so every index used here is reproducible run to run.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    InvalidInputError,
    MismatchedParentError,
    NotFullyInvariantError,
    RingTooLargeError,
)
from .groups import (
    Element,
    GroupSpec,
    Subgroup,
    fundamental_subgroup,
    subgroup_from_set,
    subgroup_leq,
)
from .reports import ClaimReport

#: Largest endomorphism ring that will be enumerated.
DEFAULT_MAX_RING_ORDER = 2**20

#: Largest ring for which full ideal enumeration is attempted.
DEFAULT_MAX_IDEAL_RING_ORDER = 2**12

_CHUNK = 4096


def ring_order(G: GroupSpec) -> int:
    """``p ** sum(min(e_s, e_t))`` over all coordinate pairs — no enumeration.

    >>> from .groups import make_group
    >>> ring_order(make_group(2, [(1, 1), (2, 1)]))
    32
    """
    exps = G.coordinate_exponents
    return G.p ** sum(min(es, et) for es in exps for et in exps)


@dataclass(frozen=True)
class Endo:
    """An endomorphism as a residue matrix (rows = source coordinates)."""

    group: GroupSpec
    matrix: tuple[tuple[int, ...], ...]

    def __repr__(self) -> str:
        return f"Endo{self.matrix}"

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix]}

    @classmethod
    def from_json(cls, G: GroupSpec, data: dict) -> "Endo":
        try:
            rows = [list(map(int, r)) for r in data["matrix"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed endomorphism: {exc}") from exc
        return make_endo(G, rows)


def make_endo(G: GroupSpec, rows) -> Endo:
    """Validate and reduce a matrix into an :class:`Endo`.

    Entry ``(s, t)`` is reduced mod ``p^e_t``; a reduced entry not divisible
    by ``p^max(0, e_t - e_s)`` does not define a homomorphism and is
    rejected.
    """
    exps = G.coordinate_exponents
    r = G.rank
    if len(rows) != r or any(len(row) != r for row in rows):
        raise InvalidInputError(f"matrix must be {r}x{r}")
    p = G.p
    out = []
    for s in range(r):
        new_row = []
        for t in range(r):
            entry = rows[s][t] % (p ** exps[t])
            need = p ** max(0, exps[t] - exps[s])
            if entry % need != 0:
                raise InvalidInputError(
                    f"entry ({s},{t}) = {entry} not divisible by {need}"
                )
            new_row.append(entry)
        out.append(tuple(new_row))
    return Endo(G, tuple(out))


def zero_endo(G: GroupSpec) -> Endo:
    return Endo(G, tuple((0,) * G.rank for _ in range(G.rank)))


def identity_endo(G: GroupSpec) -> Endo:
    return Endo(
        G,
        tuple(tuple(1 if s == t else 0 for t in range(G.rank)) for s in range(G.rank)),
    )


def scalar_endo(G: GroupSpec, c: int) -> Endo:
    """Multiplication by the integer ``c``."""
    return make_endo(
        G,
        [[c if s == t else 0 for t in range(G.rank)] for s in range(G.rank)],
    )


def apply(a: Element, f: Endo) -> Element:
    """``a.f`` — row vector times matrix, coordinatewise reduction.

    >>> from .groups import make_group
    >>> G = make_group(2, [(1, 1), (2, 1)])
    >>> apply(G.element([1, 0]), make_endo(G, [[0, 2], [0, 2]])).coords
    (0, 2)
    """
    if a.group != f.group:
        raise MismatchedParentError("element and endomorphism of different groups")
    moduli = a.group.coordinate_moduli
    coords = tuple(
        sum(a.coords[s] * f.matrix[s][t] for s in range(a.group.rank)) % moduli[t]
        for t in range(a.group.rank)
    )
    return Element(a.group, coords)


def compose(f: Endo, g: Endo) -> Endo:
    """``f`` then ``g`` (so ``a.compose(f, g) == (a.f).g``): matrix product."""
    if f.group != g.group:
        raise MismatchedParentError("endomorphisms of different groups")
    G = f.group
    r = G.rank
    moduli = G.coordinate_moduli
    rows = [
        [
            sum(f.matrix[s][k] * g.matrix[k][t] for k in range(r)) % moduli[t]
            for t in range(r)
        ]
        for s in range(r)
    ]
    return Endo(G, tuple(tuple(row) for row in rows))


def endo_add(f: Endo, g: Endo) -> Endo:
    if f.group != g.group:
        raise MismatchedParentError("endomorphisms of different groups")
    moduli = f.group.coordinate_moduli
    rows = tuple(
        tuple((x + y) % moduli[t] for t, (x, y) in enumerate(zip(fr, gr)))
        for fr, gr in zip(f.matrix, g.matrix)
    )
    return Endo(f.group, rows)


def image(f: Endo) -> Subgroup:
    """The image subgroup ``G.f`` (a plain subgroup, not fully invariant in general)."""
    ring = get_ring(f.group)
    idx = ring.endo_index(f)
    return ring.subgroup_from_indices(np.unique(ring.action_row(idx)))


def endo_rank(f: Endo) -> int:
    """Rank of the image subgroup: p-log of the size of its socle."""
    img = image(f)
    p = f.group.p
    moduli = f.group.coordinate_moduli
    socle = sum(
        1
        for e in img.elements
        if all((c * p) % q == 0 for c, q in zip(e.coords, moduli))
    )
    rank = 0
    while socle > 1:
        socle //= p
        rank += 1
    return rank


# --------------------------------------------------------------------------
# the enumerated ring with vectorized tables


class EndoRing:
    """Cached, fully enumerated endomorphism ring with numpy lookup tables.

    Elements and endomorphisms are addressed by dense indices in a fixed
    enumeration order.  The action table (endo x element -> element) is
    materialized when small enough and computed in chunks otherwise.
    """

    def __init__(self, G: GroupSpec, max_ring: int | None = None):
        cap = DEFAULT_MAX_RING_ORDER if max_ring is None else max_ring
        size = ring_order(G)
        if size > cap:
            raise RingTooLargeError(f"|End(G)| = {size} exceeds cap {cap}")
        self.group = G
        self.size = size
        p = G.p
        exps = G.coordinate_exponents
        r = G.rank
        self.rank = r
        self.moduli = np.array([p**e for e in exps], dtype=np.int64)

        # element indexing: mixed radix, first coordinate most significant
        strides = np.ones(r, dtype=np.int64)
        for i in range(r - 2, -1, -1):
            strides[i] = strides[i + 1] * self.moduli[i + 1]
        self._elem_strides = strides
        self.n_elements = int(np.prod(self.moduli))
        idx = np.arange(self.n_elements, dtype=np.int64)
        self.elem_coords = (idx[:, None] // strides[None, :]) % self.moduli[None, :]

        # endo indexing: positions (s, t) row-major; digit radix min(e_s,e_t),
        # stored entry = digit * p^max(0, e_t - e_s)
        radix = np.array(
            [[p ** min(es, et) for et in exps] for es in exps], dtype=np.int64
        )
        lift = np.array(
            [[p ** max(0, et - es) for et in exps] for es in exps], dtype=np.int64
        )
        flat_radix = radix.reshape(-1)
        estrides = np.ones(r * r, dtype=np.int64)
        for i in range(r * r - 2, -1, -1):
            estrides[i] = estrides[i + 1] * flat_radix[i + 1]
        self._endo_radix = flat_radix
        self._endo_strides = estrides
        self._endo_lift = lift.reshape(-1)
        eidx = np.arange(size, dtype=np.int64)
        digits = (eidx[:, None] // estrides[None, :]) % flat_radix[None, :]
        self.endo_matrices = (digits * self._endo_lift[None, :]).reshape(size, r, r)

        self._action: np.ndarray | None = None
        self._endo_lookup: dict[tuple[int, ...], int] | None = None

    # -- element indexing ---------------------------------------------------

    def element_index(self, a: Element) -> int:
        return int(np.dot(np.array(a.coords, dtype=np.int64), self._elem_strides))

    def pack_elements(self, coords: np.ndarray) -> np.ndarray:
        return coords @ self._elem_strides

    def element_of_index(self, idx: int) -> Element:
        return Element(self.group, tuple(int(c) for c in self.elem_coords[idx]))

    def subgroup_from_indices(self, indices) -> Subgroup:
        coords = self.elem_coords[np.asarray(indices, dtype=np.int64)]
        return subgroup_from_set(
            self.group, (Element(self.group, tuple(int(x) for x in c)) for c in coords)
        )

    def indices_of_subgroup(self, H: Subgroup) -> np.ndarray:
        arr = np.array([e.coords for e in H.elements], dtype=np.int64)
        return np.sort(arr @ self._elem_strides)

    def add_element_indices(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Vectorized index-space addition (broadcasting allowed)."""
        ca = (a[..., None] // self._elem_strides) % self.moduli
        cb = (b[..., None] // self._elem_strides) % self.moduli
        return ((ca + cb) % self.moduli) @ self._elem_strides

    # -- endo indexing ------------------------------------------------------

    def endo_index(self, f: Endo) -> int:
        flat = np.array(f.matrix, dtype=np.int64).reshape(-1)
        digits = flat // self._endo_lift
        return int(np.dot(digits, self._endo_strides))

    def pack_endos(self, mats: np.ndarray) -> np.ndarray:
        digits = mats.reshape(mats.shape[0], -1) // self._endo_lift[None, :]
        return digits @ self._endo_strides

    def endo_of_index(self, idx: int) -> Endo:
        m = self.endo_matrices[idx]
        return Endo(self.group, tuple(tuple(int(x) for x in row) for row in m))

    def add_endo_indices(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        da = (a[..., None] // self._endo_strides) % self._endo_radix
        db = (b[..., None] // self._endo_strides) % self._endo_radix
        return ((da + db) % self._endo_radix) @ self._endo_strides

    # -- the action ---------------------------------------------------------

    def _act_block(self, mats: np.ndarray) -> np.ndarray:
        """Packed images of every element under each matrix in ``mats``."""
        prod = np.einsum("xs,cst->cxt", self.elem_coords, mats) % self.moduli
        return prod @ self._elem_strides

    @property
    def action(self) -> np.ndarray:
        """Full (|E|, |G|) action table; built once when affordable."""
        if self._action is None:
            if self.size * self.n_elements > 2**26:
                raise RingTooLargeError(
                    "full action table over cap; use chunked access"
                )
            self._action = self._act_block(self.endo_matrices)
        return self._action

    def action_chunks(self, chunk: int = _CHUNK):
        """Yield ``(start, packed_block)`` covering all endomorphisms."""
        if self._action is not None:
            yield 0, self._action
            return
        for start in range(0, self.size, chunk):
            yield start, self._act_block(self.endo_matrices[start : start + chunk])

    def action_row(self, endo_idx: int) -> np.ndarray:
        if self._action is not None:
            return self._action[endo_idx]
        return self._act_block(self.endo_matrices[endo_idx : endo_idx + 1])[0]

    def action_rows(self, endo_indices) -> np.ndarray:
        """Packed image table for a selection of endomorphisms.

        Callers with very large selections should slice them; each row costs
        ``n_elements`` int64 entries.
        """
        idx = np.asarray(endo_indices, dtype=np.int64)
        if self._action is not None:
            return self._action[idx]
        return self._act_block(self.endo_matrices[idx])

    def orbit_indices(self, elem_idx: int) -> np.ndarray:
        """Sorted unique packed indices of ``{a.f : f}`` for one element.

        This set is already a subgroup (it is closed under addition because
        endomorphisms add pointwise), hence equals the smallest fully
        invariant subgroup containing ``a``.
        """
        coords = self.elem_coords[elem_idx]
        prod = np.einsum("s,cst->ct", coords, self.endo_matrices) % self.moduli
        return np.unique(prod @ self._elem_strides)

    # -- subgroup helpers ---------------------------------------------------

    def additive_closure_elements(self, seed: np.ndarray) -> np.ndarray:
        """Smallest subgroup (as sorted packed indices) containing ``seed``."""
        closed = np.unique(np.append(seed.astype(np.int64), np.int64(0)))
        gens = closed[closed != 0]
        frontier = closed
        while True:
            new = np.unique(self.add_element_indices(frontier[:, None], gens[None, :]))
            merged = np.union1d(closed, new)
            if merged.size == closed.size:
                return closed
            frontier = np.setdiff1d(new, closed, assume_unique=False)
            closed = merged

    def endo_images_subset_mask(self, member_indices: np.ndarray) -> np.ndarray:
        """Boolean mask over endos: image of G lies inside the given set."""
        target = np.sort(np.asarray(member_indices, dtype=np.int64))
        flags = np.empty(self.size, dtype=bool)
        for start, block in self.action_chunks():
            inside = np.isin(block, target).all(axis=1)
            flags[start : start + block.shape[0]] = inside
        return flags

    def is_fully_invariant(self, H: Subgroup) -> bool:
        idx = self.indices_of_subgroup(H)
        for start, block in self.action_chunks():
            if not np.isin(block[:, idx], idx).all():
                return False
        return True


@lru_cache(maxsize=32)
def _cached_ring(G: GroupSpec) -> EndoRing:
    return EndoRing(G)


def get_ring(G: GroupSpec, max_ring: int | None = None) -> EndoRing:
    """Shared ring instance under the default budget; fresh one otherwise."""
    if max_ring is None:
        return _cached_ring(G)
    return EndoRing(G, max_ring=max_ring)


def enumerate_endos(G: GroupSpec, max_ring: int | None = None) -> list[Endo]:
    """Every endomorphism, in the fixed enumeration order.

    >>> from .groups import make_group
    >>> len(enumerate_endos(make_group(2, [(1, 1), (2, 1)])))
    32
    """
    ring = get_ring(G, max_ring=max_ring)
    return [ring.endo_of_index(i) for i in range(ring.size)]


# --------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal, held as sorted endomorphism indices.

    Indices refer to the fixed enumeration order of the parent ring;
    ``generators`` records a generating set (also as indices).
    """

    group: GroupSpec
    indices: tuple[int, ...]
    generators: tuple[int, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.indices)

    def endos(self) -> list[Endo]:
        ring = get_ring(self.group)
        return [ring.endo_of_index(i) for i in self.indices]

    def generator_endos(self) -> list[Endo]:
        ring = get_ring(self.group)
        return [ring.endo_of_index(i) for i in self.generators]

    def __contains__(self, f: Endo) -> bool:
        ring = get_ring(self.group)
        i = ring.endo_index(f)
        pos = np.searchsorted(np.asarray(self.indices), i)
        return pos < len(self.indices) and self.indices[pos] == i

    def __repr__(self) -> str:
        return f"Ideal(size={self.size} of End({self.group.describe()}))"

    def to_json(self) -> dict:
        ring = get_ring(self.group)
        return {
            "size": self.size,
            "generators": [ring.endo_of_index(i).to_json() for i in self.generators],
        }


def _additive_basis(ring: EndoRing) -> np.ndarray:
    """One single-entry matrix per position, with the forced divisibility."""
    r = ring.rank
    lift = ring._endo_lift.reshape(r, r)
    mats = np.zeros((r * r, r, r), dtype=np.int64)
    for pos, (s, t) in enumerate(itertools.product(range(r), range(r))):
        mats[pos, s, t] = lift[s, t]
    return mats


def _endo_additive_closure(ring: EndoRing, seed: np.ndarray) -> np.ndarray:
    """Smallest additively closed index set containing ``seed`` (and 0)."""
    zero = np.int64(0)
    closed = np.unique(np.append(seed.astype(np.int64), zero))
    gens = closed[closed != 0]
    if gens.size == 0:
        return closed
    frontier = closed
    while True:
        new = np.unique(ring.add_endo_indices(frontier[:, None], gens[None, :]))
        merged = np.union1d(closed, new)
        if merged.size == closed.size:
            return closed
        frontier = np.setdiff1d(new, closed)
        closed = merged


def _sandwich_products(ring: EndoRing, mat: np.ndarray) -> np.ndarray:
    """Packed indices of ``A f B`` over the additive basis pairs ``(A, B)``.

    The two-sided ideal generated by ``f`` is the additive span of these
    (bilinearity reduces arbitrary ``u f v`` to basis pairs).
    """
    basis = _additive_basis(ring)
    left = np.einsum("ast,tu->asu", basis, mat)
    prods = np.einsum("asu,buv->absv", left, basis).reshape(-1, ring.rank, ring.rank)
    prods %= ring.moduli[None, None, :]
    return np.unique(ring.pack_endos(prods))


def ideal_generated(G: GroupSpec, gens, max_ring: int | None = None) -> Ideal:
    """Two-sided ideal generated by the given endomorphisms."""
    ring = get_ring(G, max_ring=max_ring)
    gen_idx = []
    seeds = [np.array([0], dtype=np.int64)]
    for f in gens:
        if f.group != G:
            raise MismatchedParentError("generator endomorphism of a different group")
        gen_idx.append(ring.endo_index(f))
        mat = np.array(f.matrix, dtype=np.int64)
        seeds.append(_sandwich_products(ring, mat))
    closure = _endo_additive_closure(ring, np.concatenate(seeds))
    return Ideal(G, tuple(int(i) for i in closure), generators=tuple(gen_idx))


def principal_ideal(G: GroupSpec, f: Endo, max_ring: int | None = None) -> Ideal:
    return ideal_generated(G, [f], max_ring=max_ring)


def _ideal_from_indices(ring: EndoRing, indices: np.ndarray, gens=()) -> Ideal:
    return Ideal(
        ring.group,
        tuple(int(i) for i in np.unique(indices)),
        generators=tuple(int(i) for i in gens),
    )


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    """Elementwise sum ``I + J`` (already an ideal, no extra closure needed)."""
    if I.group != J.group:
        raise MismatchedParentError("ideals of different groups")
    ring = get_ring(I.group)
    a = np.asarray(I.indices, dtype=np.int64)
    b = np.asarray(J.indices, dtype=np.int64)
    total = np.unique(ring.add_endo_indices(a[:, None], b[None, :]))
    return _ideal_from_indices(ring, total, gens=I.generators + J.generators)


def ideal_meet(I: Ideal, J: Ideal) -> Ideal:
    if I.group != J.group:
        raise MismatchedParentError("ideals of different groups")
    ring = get_ring(I.group)
    both = np.intersect1d(np.asarray(I.indices), np.asarray(J.indices))
    return _ideal_from_indices(ring, both)


def ideal_leq(I: Ideal, J: Ideal) -> bool:
    return set(I.indices) <= set(J.indices)


def enumerate_ideals(G: GroupSpec, max_ring: int | None = None) -> list[Ideal]:
    """All two-sided ideals: principal ideals, then pairwise-sum fixpoint.

    Budgeted separately from plain ring enumeration (default cap 2**12)
    because the principal-ideal sweep touches every ring element.
    """
    cap = DEFAULT_MAX_IDEAL_RING_ORDER if max_ring is None else max_ring
    if ring_order(G) > cap:
        raise RingTooLargeError(
            f"|End(G)| = {ring_order(G)} exceeds ideal-enumeration cap {cap}"
        )
    ring = get_ring(G)
    principal: dict[tuple[int, ...], np.ndarray] = {}
    seen_seeds: dict[tuple[int, ...], tuple[int, ...]] = {}
    for i in range(ring.size):
        prods = _sandwich_products(ring, ring.endo_matrices[i])
        seed_key = tuple(int(x) for x in prods)
        if seed_key in seen_seeds:
            key = seen_seeds[seed_key]
        else:
            closure = _endo_additive_closure(ring, prods)
            key = tuple(int(x) for x in closure)
            seen_seeds[seed_key] = key
        if key not in principal:
            principal[key] = np.asarray(key, dtype=np.int64)
    current: dict[tuple[int, ...], np.ndarray] = dict(principal)
    while True:
        fresh: dict[tuple[int, ...], np.ndarray] = {}
        items = list(current.values())
        for a, b in itertools.combinations(items, 2):
            total = np.unique(ring.add_endo_indices(a[:, None], b[None, :]))
            key = tuple(int(x) for x in total)
            if key not in current and key not in fresh:
                fresh[key] = total
        if not fresh:
            break
        current.update(fresh)
    ideals = [_ideal_from_indices(ring, arr) for arr in current.values()]
    ideals.sort(key=lambda I: (I.size, I.indices))
    return ideals


def special_ideals(G: GroupSpec, n: int) -> tuple[Ideal, Ideal]:
    """The pair ``(p^n E, E[p^n])``: scaled ring and p^n-torsion ideal."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    ring = get_ring(G)
    p = G.p
    scaled = (ring.endo_matrices * p**n) % ring.moduli[None, None, :]
    power = _ideal_from_indices(ring, ring.pack_endos(scaled))
    killed = (ring.endo_matrices * p**n % ring.moduli[None, None, :] == 0).all(
        axis=(1, 2)
    )
    torsion = _ideal_from_indices(ring, np.nonzero(killed)[0].astype(np.int64))
    return power, torsion


# --------------------------------------------------------------------------
# the two dagger maps


def dagger_subgroup(G: GroupSpec, H: Subgroup) -> Ideal:
    """The ideal of endomorphisms mapping all of G into ``H``.

    ``H`` must be fully invariant, otherwise the result would not be closed
    under right multiplication.
    """
    if H.group != G:
        raise MismatchedParentError("subgroup of a different group")
    ring = get_ring(G)
    if not ring.is_fully_invariant(H):
        raise NotFullyInvariantError(
            f"subgroup of order {H.order} is not fully invariant"
        )
    member = ring.indices_of_subgroup(H)
    flags = ring.endo_images_subset_mask(member)
    return _ideal_from_indices(ring, np.nonzero(flags)[0].astype(np.int64))


def dagger_ideal(G: GroupSpec, I: Ideal) -> Subgroup:
    """The subgroup generated by the images of the ideal's members."""
    if I.group != G:
        raise MismatchedParentError("ideal of a different group")
    ring = get_ring(G)
    idx = np.asarray(I.indices, dtype=np.int64)
    hit: list[np.ndarray] = [np.array([0], dtype=np.int64)]
    for start in range(0, idx.size, _CHUNK):
        hit.append(np.unique(ring.action_rows(idx[start : start + _CHUNK])))
    seed = np.unique(np.concatenate(hit))
    closed = ring.additive_closure_elements(seed)
    return ring.subgroup_from_indices(closed)


@dataclass(frozen=True)
class DaggerReport:
    """Closure verdict for one subgroup or ideal under the double dagger."""

    subject: str
    status: str  # "closed" | "not_closed"
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "status": self.status,
            "witnesses": self.witnesses,
        }


def is_dagger_closed(x: Subgroup | Ideal) -> DaggerReport:
    """Does the double dagger reproduce ``x``?

    For subgroups the closure can only shrink; for ideals it can only grow,
    and witnesses list sample members of the difference.
    """
    if isinstance(x, Subgroup):
        G = x.group
        back = dagger_ideal(G, dagger_subgroup(G, x))
        if back == x:
            return DaggerReport(subject=f"subgroup of order {x.order}", status="closed")
        diff = [e for e in x.elements if e not in back] + [
            e for e in back.elements if e not in x
        ]
        return DaggerReport(
            subject=f"subgroup of order {x.order}",
            status="not_closed",
            witnesses=[list(e.coords) for e in diff[:3]],
        )
    if isinstance(x, Ideal):
        G = x.group
        back = dagger_subgroup(G, dagger_ideal(G, x))
        if set(back.indices) == set(x.indices):
            return DaggerReport(subject=f"ideal of size {x.size}", status="closed")
        ring = get_ring(G)
        extra = sorted(set(back.indices) ^ set(x.indices))
        return DaggerReport(
            subject=f"ideal of size {x.size}",
            status="not_closed",
            witnesses=[ring.endo_of_index(i).to_json()["matrix"] for i in extra[:3]],
        )
    raise InvalidInputError(f"expected a Subgroup or Ideal, got {type(x).__name__}")


def dagger_inv_class(G: GroupSpec, H: Subgroup, ideals=None) -> list[Ideal]:
    """All enumerated ideals whose image subgroup is exactly ``H``."""
    pool = enumerate_ideals(G) if ideals is None else ideals
    return [I for I in pool if dagger_ideal(G, I) == H]


def find_dagger_collision(G: GroupSpec):
    """Two distinct ideals with the same image subgroup, or None.

    Construction first (needs components of two different exponents): with
    ``a`` of minimal and ``b`` of maximal exponent ``e``, the ideal generated
    by (a -> p^(e-1) b, b -> p^(e-1) b) strictly contains the one generated
    by (b -> p^(e-1) b), yet both push forward to the top power subgroup.
    Falls back to exhaustive ideal enumeration when the ring is small enough.
    """
    p = G.p
    e = G.exponent
    if len(G.components) > 1:
        r = G.rank
        low = 0  # first coordinate: minimal exponent
        high = r - 1  # last coordinate: maximal exponent
        rows_f = [[0] * r for _ in range(r)]
        rows_f[low][high] = p ** (e - 1)
        rows_f[high][high] = p ** (e - 1)
        rows_g = [[0] * r for _ in range(r)]
        rows_g[high][high] = p ** (e - 1)
        I = ideal_generated(G, [make_endo(G, rows_f)])
        J = ideal_generated(G, [make_endo(G, rows_g)])
        if I != J and dagger_ideal(G, I) == dagger_ideal(G, J):
            return I, J
    if ring_order(G) <= DEFAULT_MAX_IDEAL_RING_ORDER:
        pool = enumerate_ideals(G)
        by_image: dict[Subgroup, Ideal] = {}
        for I in pool:
            img = dagger_ideal(G, I)
            if img in by_image:
                return by_image[img], I
            by_image[img] = I
    return None


# --------------------------------------------------------------------------
# mechanical verification of the correspondence


def verify_fun_identities(G: GroupSpec) -> list[ClaimReport]:
    """Check, for every n up to exp(G), the four identities tying the power
    and torsion ideals to the power and torsion subgroups:

    * image of ``p^n E``      == ``p^n G``        (holds)
    * preimage of ``p^n G``   == ``p^n E``        (fails off homocyclic groups)
    * image of ``E[p^n]``     == ``G[p^n]``       (holds)
    * preimage of ``G[p^n]``  == ``E[p^n]``       (holds)
    """
    e = G.exponent
    name = G.describe()
    ring = get_ring(G)
    wit: dict[str, list] = {k: [] for k in (
        "power-ideal-dagger",
        "power-subgroup-dagger",
        "socle-ideal-dagger",
        "socle-subgroup-dagger",
    )}
    for n in range(e + 1):
        powerE, torsionE = special_ideals(G, n)
        powerG = fundamental_subgroup(G, n, e)  # p^n G
        torsionG = fundamental_subgroup(G, 0, n)  # G[p^n]
        if dagger_ideal(G, powerE) != powerG:
            wit["power-ideal-dagger"].append({"n": n})
        got = dagger_subgroup(G, powerG)
        if set(got.indices) != set(powerE.indices):
            extra = sorted(set(got.indices) - set(powerE.indices))
            wit["power-subgroup-dagger"].append(
                {
                    "n": n,
                    "preimage_size": got.size,
                    "scaled_ring_size": powerE.size,
                    "endo_outside_scaled_ring": ring.endo_of_index(extra[0]).to_json()[
                        "matrix"
                    ]
                    if extra
                    else None,
                }
            )
        if dagger_ideal(G, torsionE) != torsionG:
            wit["socle-ideal-dagger"].append({"n": n})
        got2 = dagger_subgroup(G, torsionG)
        if set(got2.indices) != set(torsionE.indices):
            wit["socle-subgroup-dagger"].append({"n": n})
    checked = f"all n in [0, {e}]"
    return [
        ClaimReport(
            claim_id=cid,
            status="refuted" if ws else "verified",
            group=name,
            witnesses=ws,
            checked=checked,
        )
        for cid, ws in wit.items()
    ]


def verify_galois_suite(G: GroupSpec, nodes=None, ideals=None) -> list[ClaimReport]:
    """Order/meet/join preservation, closure behavior, and class structure of
    the two dagger maps, exhaustively over the fully invariant lattice and
    the full ideal lattice."""
    from .lattice import enumerate_fi_subgroups
    from .groups import subgroup_meet, subgroup_sum

    name = G.describe()
    if nodes is None:
        nodes = enumerate_fi_subgroups(G).nodes
    if ideals is None:
        ideals = enumerate_ideals(G)
    reports: list[ClaimReport] = []
    node_list = list(nodes)
    up = {H: dagger_subgroup(G, H) for H in node_list}
    down = {I: dagger_ideal(G, I) for I in ideals}

    # the pushforward of an ideal must be fully invariant, the pullback an ideal
    ring = get_ring(G)
    wd_wit = []
    for I in ideals:
        if not ring.is_fully_invariant(down[I]):
            wd_wit.append({"ideal_size": I.size})
    sample = ring.endo_matrices[: min(ring.size, 64)]
    for H in node_list:
        ideal_idx = np.asarray(up[H].indices, dtype=np.int64)
        sums = np.unique(ring.add_endo_indices(ideal_idx[:, None], ideal_idx[None, :]))
        if not np.isin(sums, ideal_idx).all():
            wd_wit.append({"subgroup_order": H.order, "failure": "additive"})
        # Two-sided multiplicative closure against a fixed sample of ring
        # members (exhaustive would be quadratic in |E| for no extra insight).
        mats = ring.endo_matrices[ideal_idx]
        prod = np.einsum("ast,btu->absu", mats, sample) % ring.moduli
        packed = np.unique(ring.pack_endos(prod.reshape(-1, ring.rank, ring.rank)))
        if not np.isin(packed, ideal_idx).all():
            wd_wit.append({"subgroup_order": H.order, "failure": "right-mult"})
        prod = np.einsum("bst,atu->absu", sample, mats) % ring.moduli
        packed = np.unique(ring.pack_endos(prod.reshape(-1, ring.rank, ring.rank)))
        if not np.isin(packed, ideal_idx).all():
            wd_wit.append({"subgroup_order": H.order, "failure": "left-mult"})
    reports.append(
        ClaimReport(
            claim_id="dagger-well-defined",
            status="refuted" if wd_wit else "verified",
            group=name,
            witnesses=wd_wit[:5],
            checked=f"{len(node_list)} subgroups, {len(ideals)} ideals",
        )
    )

    # order preservation, both directions
    order_wit = []
    for H, K in itertools.product(node_list, repeat=2):
        if subgroup_leq(H, K) and not ideal_leq(up[H], up[K]):
            order_wit.append({"pair": [H.order, K.order], "side": "subgroup"})
    for I, J in itertools.product(ideals, repeat=2):
        if ideal_leq(I, J) and not subgroup_leq(down[I], down[J]):
            order_wit.append({"pair": [I.size, J.size], "side": "ideal"})
    reports.append(
        ClaimReport(
            claim_id="dagger-order",
            status="refuted" if order_wit else "verified",
            group=name,
            witnesses=order_wit[:5],
            checked="all ordered pairs on both sides",
        )
    )

    # meet/join preservation
    sum_wit, meet_wit = [], []
    for H, K in itertools.combinations(node_list, 2):
        HK_sum = subgroup_sum(H, K)
        HK_meet = subgroup_meet(H, K)
        # the FI lattice is closed under both, so the results are nodes
        lhs = up.get(HK_sum) or dagger_subgroup(G, HK_sum)
        if set(lhs.indices) != set(ideal_sum(up[H], up[K]).indices):
            sum_wit.append({"pair": [H.order, K.order], "side": "subgroup"})
        lhs = up.get(HK_meet) or dagger_subgroup(G, HK_meet)
        if set(lhs.indices) != set(ideal_meet(up[H], up[K]).indices):
            meet_wit.append({"pair": [H.order, K.order], "side": "subgroup"})
    down_lookup = {tuple(I.indices): down[I] for I in ideals}
    for I, J in itertools.combinations(ideals, 2):
        S = ideal_sum(I, J)
        lhs = down_lookup.get(tuple(S.indices)) or dagger_ideal(G, S)
        if lhs != subgroup_sum(down[I], down[J]):
            sum_wit.append({"pair": [I.size, J.size], "side": "ideal"})
        M = ideal_meet(I, J)
        lhs = down_lookup.get(tuple(M.indices)) or dagger_ideal(G, M)
        if lhs != subgroup_meet(down[I], down[J]):
            meet_wit.append(
                {
                    "pair": [I.size, J.size],
                    "side": "ideal",
                    "image_of_meet_order": lhs.order,
                    "meet_of_images_order": subgroup_meet(down[I], down[J]).order,
                }
            )
    reports.append(
        ClaimReport(
            claim_id="dagger-sum-preservation",
            status="refuted" if sum_wit else "verified",
            group=name,
            witnesses=sum_wit[:5],
            checked="all unordered pairs on both sides",
        )
    )
    reports.append(
        ClaimReport(
            claim_id="dagger-intersection-preservation",
            status="refuted" if meet_wit else "verified",
            group=name,
            witnesses=meet_wit[:5],
            checked="all unordered pairs on both sides",
        )
    )

    # closure behavior
    sub_defl_wit, fi_closed_wit = [], []
    for H in node_list:
        back = dagger_ideal(G, up[H])
        if not subgroup_leq(back, H):
            sub_defl_wit.append({"subgroup_order": H.order})
        if back != H:
            fi_closed_wit.append({"subgroup_order": H.order, "closure_order": back.order})
    reports.append(
        ClaimReport(
            claim_id="subgroup-double-dagger-deflation",
            status="refuted" if sub_defl_wit else "verified",
            group=name,
            witnesses=sub_defl_wit,
            checked=f"{len(node_list)} fully invariant subgroups",
        )
    )
    reports.append(
        ClaimReport(
            claim_id="fi-dagger-closed",
            status="refuted" if fi_closed_wit else "verified",
            group=name,
            witnesses=fi_closed_wit,
            checked=f"{len(node_list)} fully invariant subgroups",
        )
    )
    ideal_defl_wit, ideal_infl_wit, triple_wit = [], [], []
    for I in ideals:
        back = dagger_subgroup(G, down[I])
        if not ideal_leq(back, I):
            sample = sorted(set(back.indices) - set(I.indices))
            ring = get_ring(G)
            ideal_defl_wit.append(
                {
                    "ideal_size": I.size,
                    "closure_size": back.size,
                    "endo_in_closure_only": ring.endo_of_index(sample[0]).to_json()[
                        "matrix"
                    ],
                }
            )
        if not ideal_leq(I, back):
            ideal_infl_wit.append({"ideal_size": I.size})
        if dagger_ideal(G, back) != down[I]:
            triple_wit.append({"ideal_size": I.size, "side": "ideal"})
    for H in node_list:
        if set(dagger_subgroup(G, dagger_ideal(G, up[H])).indices) != set(
            up[H].indices
        ):
            triple_wit.append({"subgroup_order": H.order, "side": "subgroup"})
    reports.append(
        ClaimReport(
            claim_id="ideal-double-dagger-deflation",
            status="refuted" if ideal_defl_wit else "verified",
            group=name,
            witnesses=ideal_defl_wit[:5],
            checked=f"{len(ideals)} ideals",
        )
    )
    reports.append(
        ClaimReport(
            claim_id="ideal-double-dagger-inflation",
            status="refuted" if ideal_infl_wit else "verified",
            group=name,
            witnesses=ideal_infl_wit[:5],
            checked=f"{len(ideals)} ideals",
        )
    )
    reports.append(
        ClaimReport(
            claim_id="dagger-triple",
            status="refuted" if triple_wit else "verified",
            group=name,
            witnesses=triple_wit[:5],
            checked="both composites on every object",
        )
    )

    # closed-object equivalences and the lattice isomorphism between them
    equiv_wit = []
    images = {down[I] for I in ideals}
    for H in node_list:
        closed = dagger_ideal(G, up[H]) == H
        if closed != (H in images):
            equiv_wit.append({"subgroup_order": H.order})
    preimages = {tuple(up[H].indices) for H in node_list}
    for I in ideals:
        closed = set(dagger_subgroup(G, down[I]).indices) == set(I.indices)
        if closed != (tuple(I.indices) in preimages):
            equiv_wit.append({"ideal_size": I.size})
    reports.append(
        ClaimReport(
            claim_id="dagger-closed-equivalences",
            status="refuted" if equiv_wit else "verified",
            group=name,
            witnesses=equiv_wit[:5],
            checked="closedness vs membership in the opposite map's range",
        )
    )
    iso_wit = []
    closed_ideals = [I for I in ideals if set(dagger_subgroup(G, down[I]).indices) == set(I.indices)]
    for I, J in itertools.product(closed_ideals, repeat=2):
        if ideal_leq(I, J) != subgroup_leq(down[I], down[J]):
            iso_wit.append({"pair": [I.size, J.size]})
    if len(closed_ideals) != len(node_list):
        iso_wit.append(
            {
                "closed_ideals": len(closed_ideals),
                "fully_invariant_subgroups": len(node_list),
            }
        )
    reports.append(
        ClaimReport(
            claim_id="closed-lattice-isomorphism",
            status="refuted" if iso_wit else "verified",
            group=name,
            witnesses=iso_wit[:5],
            checked=f"{len(closed_ideals)} closed ideals vs {len(node_list)} subgroups",
        )
    )

    # preimage classes: closed under sums, with a unique closed maximum
    class_wit = []
    for H in node_list:
        cls = [I for I in ideals if down[I] == H]
        if not cls:
            class_wit.append({"subgroup_order": H.order, "failure": "empty class"})
            continue
        for I, J in itertools.combinations(cls, 2):
            S = ideal_sum(I, J)
            if dagger_ideal(G, S) != H:
                class_wit.append({"subgroup_order": H.order, "failure": "sum leaves class"})
        closed_members = [
            I for I in cls if set(dagger_subgroup(G, down[I]).indices) == set(I.indices)
        ]
        if len(closed_members) != 1:
            class_wit.append(
                {"subgroup_order": H.order, "closed_members": len(closed_members)}
            )
        else:
            top = max(cls, key=lambda I: I.size)
            if set(top.indices) != set(closed_members[0].indices) or not all(
                ideal_leq(I, closed_members[0]) for I in cls
            ):
                class_wit.append({"subgroup_order": H.order, "failure": "not maximum"})
    reports.append(
        ClaimReport(
            claim_id="dagger-class-structure",
            status="refuted" if class_wit else "verified",
            group=name,
            witnesses=class_wit[:5],
            checked=f"{len(ideals)} ideals grouped by image",
        )
    )

    # fundamental subgroups are closed
    fund_wit = []
    e = G.exponent
    for n in range(1, e + 1):
        for kappa in range(e):
            H = fundamental_subgroup(G, kappa, n)
            if dagger_ideal(G, dagger_subgroup(G, H)) != H:
                fund_wit.append({"cell": [n, kappa]})
    reports.append(
        ClaimReport(
            claim_id="fundamental-dagger-closed",
            status="refuted" if fund_wit else "verified",
            group=name,
            witnesses=fund_wit[:5],
            checked=f"all {e * e} fundamental subgroups",
        )
    )
    return reports
