"""Finite topological spaces over bitmask point sets.

Points of a space are the integers 0..n-1 and a subset of the space is a
plain ``int`` whose bit ``i`` records membership of point ``i``.  With n
capped at 16 every subset fits in one machine word, every class extraction
scans at most 65536 masks, and all operators reduce to a few bit operations
against the memoized minimal-neighborhood table.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Optional, TextIO

MAX_POINTS = 16

POINT_LABELS = "abcdefghijklmnop"


def full_set(n: int) -> int:
    """The subset containing every point of an n-point space."""
    return (1 << n) - 1


def complement(a: int, n: int) -> int:
    return full_set(n) & ~a


def iter_points(a: int) -> Iterator[int]:
    """Yield the points of a subset in increasing order."""
    while a:
        low = a & -a
        yield low.bit_length() - 1
        a ^= low


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def check_fits(a: int, n: int) -> None:
    if a < 0 or a & ~full_set(n):
        raise ValueError(f"subset {a:#x} has points outside 0..{n - 1}")


def set_text(a: int, n: int) -> str:
    """Human-readable form: ∅ for empty, X for the whole space, else {a,b}."""
    if a == 0:
        return "∅"
    if a == full_set(n):
        return "X"
    return "{" + ",".join(POINT_LABELS[p] for p in iter_points(a)) + "}"


def family_text(members: Iterable[int], n: int) -> str:
    return "{" + ",".join(set_text(m, n) for m in members) + "}"


class Topology:
    """An immutable finite topological space.

    ``opens`` is the duplicate-free tuple of open sets in canonical order
    (ascending bitmask value) and ``min_nbhd[x]`` is the smallest open set
    containing point x.  Both are fixed at construction time, so values can
    be shared freely across workers.
    """

    __slots__ = ("n", "opens", "min_nbhd", "_open_set", "_hash")

    def __init__(self, n: int, opens: Iterable[int]):
        if not 1 <= n <= MAX_POINTS:
            raise ValueError(f"point count must be in 1..{MAX_POINTS}, got {n}")
        family = sorted(set(opens))
        full = full_set(n)
        for a in family:
            check_fits(a, n)
        if not family or family[0] != 0 or family[-1] != full:
            raise ValueError("open family must contain the empty set and the full set")
        nbhd = _min_table(n, family)
        regenerated = _upward_closed_sets(n, nbhd)
        if regenerated != tuple(family):
            raise ValueError("open family is not closed under union/intersection")
        self._init_slots(n, tuple(family), nbhd)

    def _init_slots(self, n: int, opens: tuple[int, ...], nbhd: tuple[int, ...]) -> None:
        self.n = n
        self.opens = opens
        self.min_nbhd = nbhd
        self._open_set = frozenset(opens)
        self._hash = hash((n, opens))

    @classmethod
    def _trusted(cls, n: int, opens: tuple[int, ...], nbhd: tuple[int, ...]) -> "Topology":
        # internal fast path for families already known to be upward closed
        self = object.__new__(cls)
        self._init_slots(n, opens, nbhd)
        return self

    def is_open(self, a: int) -> bool:
        return a in self._open_set

    def is_closed(self, a: int) -> bool:
        return complement(a, self.n) in self._open_set

    def interior(self, a: int) -> int:
        """Largest open set inside a."""
        m = 0
        for x in iter_points(a):
            if self.min_nbhd[x] & ~a == 0:
                m |= 1 << x
        return m

    def closure(self, a: int) -> int:
        """Smallest closed superset: points whose every neighborhood meets a."""
        m = 0
        for x in range(self.n):
            if self.min_nbhd[x] & a:
                m |= 1 << x
        return m

    def open_hull(self, a: int) -> int:
        """Smallest open superset of a (unions of minimal neighborhoods)."""
        m = a
        for x in iter_points(a):
            m |= self.min_nbhd[x]
        return m

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Topology)
            and self.n == other.n
            and self.opens == other.opens
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Topology(n={self.n}, opens={family_text(self.opens, self.n)})"


def _min_table(n: int, family: Iterable[int]) -> tuple[int, ...]:
    # nbhd[x] = intersection of all family members containing x (X included)
    nbhd = [full_set(n)] * n
    for a in family:
        for x in iter_points(a):
            nbhd[x] &= a
    return tuple(nbhd)


def _upward_closed_sets(n: int, nbhd: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for a in range(1 << n):
        b = a
        ok = True
        while b:
            low = b & -b
            if nbhd[low.bit_length() - 1] & ~a:
                ok = False
                break
            b ^= low
        if ok:
            out.append(a)
    return tuple(out)


def build_topology(n: int, generators: Iterable[int]) -> Topology:
    """Smallest topology on n points containing every generator."""
    if not 1 <= n <= MAX_POINTS:
        raise ValueError(f"point count must be in 1..{MAX_POINTS}, got {n}")
    gens = list(generators)
    for g in gens:
        check_fits(g, n)
    nbhd = _min_table(n, gens)
    # nbhd is transitive: y in nbhd[x] means every generator through x
    # also passes through y, hence nbhd[y] subset of nbhd[x]
    return Topology._trusted(n, _upward_closed_sets(n, nbhd), nbhd)


def discrete(n: int) -> Topology:
    return build_topology(n, [1 << x for x in range(n)])


def indiscrete(n: int) -> Topology:
    return build_topology(n, [])


def minimal_nbhd(t: Topology, x: int) -> int:
    """Smallest open set containing point x."""
    if not 0 <= x < t.n:
        raise ValueError(f"point {x} out of range for an {t.n}-point space")
    return t.min_nbhd[x]


def subspace(t: Topology, a: int) -> tuple[Topology, tuple[int, ...]]:
    """Trace topology on a nonempty subset, points relabeled 0..|a|-1.

    Returns the subspace together with the relabeling map: new point i is
    the returned tuple's i-th entry in the ambient space.
    """
    check_fits(a, t.n)
    if a == 0:
        raise ValueError("subspace carrier must be nonempty")
    points = tuple(iter_points(a))
    index = {p: i for i, p in enumerate(points)}

    def restrict(mask: int) -> int:
        out = 0
        for p in iter_points(mask & a):
            out |= 1 << index[p]
        return out

    opens = tuple(sorted({restrict(u) for u in t.opens}))
    nbhd = tuple(restrict(t.min_nbhd[p]) for p in points)
    return Topology._trusted(len(points), opens, nbhd), points


def product(t1: Topology, t2: Topology) -> Topology:
    """Product space on pairs, (x, y) indexed as x * t2.n + y.

    Generated by the boxes U x V with U, V open; the minimal-neighborhood
    boxes are a subbasis for the same topology and keep the generator list
    short.
    """
    n = t1.n * t2.n
    if n > MAX_POINTS:
        raise ValueError(f"product would have {n} points, cap is {MAX_POINTS}")
    boxes = [
        _box(t1.min_nbhd[x], t2.min_nbhd[y], t2.n)
        for x in range(t1.n)
        for y in range(t2.n)
    ]
    return build_topology(n, boxes)


def _box(u: int, v: int, n2: int) -> int:
    m = 0
    for x in iter_points(u):
        for y in iter_points(v):
            m |= 1 << (x * n2 + y)
    return m


class Preorder:
    """A reflexive transitive relation stored as per-point up-set masks.

    ``up[x]`` is the mask of points y with x <= y.
    """

    __slots__ = ("n", "up")

    def __init__(self, n: int, up: Iterable[int]):
        rows = tuple(up)
        if len(rows) != n:
            raise ValueError("relation must have one row per point")
        for x, row in enumerate(rows):
            check_fits(row, n)
            if not row >> x & 1:
                raise ValueError(f"relation is not reflexive at point {x}")
            for y in iter_points(row):
                if rows[y] & ~row:
                    raise ValueError("relation is not transitive")
        self.n = n
        self.up = rows

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Preorder) and self.n == other.n and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return f"Preorder(n={self.n}, up={self.up})"


def to_preorder(t: Topology) -> Preorder:
    """Specialization preorder: x <= y iff y lies in every neighborhood of x."""
    return Preorder(t.n, t.min_nbhd)


def from_preorder(r: Preorder) -> Topology:
    """The topology whose opens are exactly the upward-closed sets."""
    return Topology._trusted(r.n, _upward_closed_sets(r.n, r.up), r.up)


def find_homeomorphism(t1: Topology, t2: Topology) -> Optional[tuple[int, ...]]:
    """A point bijection carrying opens onto opens, or None.

    Backtracking over the specialization preorders with invariant pruning:
    open-set count, open-size multiset, and per-point (up-set, down-set)
    size signatures.
    """
    if t1.n != t2.n:
        raise ValueError("spaces must have the same number of points")
    n = t1.n
    if len(t1.opens) != len(t2.opens):
        return None
    if sorted(a.bit_count() for a in t1.opens) != sorted(a.bit_count() for a in t2.opens):
        return None
    up1, up2 = t1.min_nbhd, t2.min_nbhd
    down1 = _down_sets(up1, n)
    down2 = _down_sets(up2, n)
    sig1 = [(up1[x].bit_count(), down1[x].bit_count()) for x in range(n)]
    sig2 = [(up2[x].bit_count(), down2[x].bit_count()) for x in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None

    image = [-1] * n
    used = 0

    def extend(x: int) -> bool:
        nonlocal used
        if x == n:
            return True
        for y in range(n):
            if used >> y & 1 or sig1[x] != sig2[y]:
                continue
            ok = True
            for a in range(x):
                b = image[a]
                if (up1[a] >> x & 1) != (up2[b] >> y & 1) or (
                    up1[x] >> a & 1
                ) != (up2[y] >> b & 1):
                    ok = False
                    break
            if ok:
                image[x] = y
                used |= 1 << y
                if extend(x + 1):
                    return True
                used &= ~(1 << y)
        return False

    if not extend(0):
        return None
    fn = tuple(image)
    # preorder isomorphisms are exactly the homeomorphisms; keep the
    # opens-onto-opens contract checked anyway
    mapped = {sum(1 << fn[p] for p in iter_points(u)) for u in t1.opens}
    if mapped != set(t2.opens):
        raise RuntimeError("homeomorphism witness failed the open-set check")
    return fn


def _down_sets(up: tuple[int, ...], n: int) -> list[int]:
    down = [0] * n
    for x in range(n):
        for y in iter_points(up[x]):
            down[y] |= 1 << x
    return down


def is_homeomorphic(t1: Topology, t2: Topology) -> bool:
    return find_homeomorphism(t1, t2) is not None


# --- structured text format -------------------------------------------------

def space_to_obj(t: Topology) -> dict:
    return {"n": t.n, "opens": [sorted(iter_points(u)) for u in t.opens]}


def space_to_json(t: Topology) -> str:
    return json.dumps(space_to_obj(t))


def space_from_obj(obj: dict, complete: bool = False) -> Topology:
    if not isinstance(obj, dict) or "n" not in obj or "opens" not in obj:
        raise ValueError("space object needs 'n' and 'opens' fields")
    n = obj["n"]
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    if not 1 <= n <= MAX_POINTS:
        raise ValueError(f"point count must be in 1..{MAX_POINTS}, got {n}")
    masks = []
    for entry in obj["opens"]:
        if not all(isinstance(p, int) and 0 <= p < n for p in entry):
            raise ValueError(f"open set {entry} has points outside 0..{n - 1}")
        masks.append(mask_of(entry))
    if complete:
        return build_topology(n, masks)
    return Topology(n, masks)


def space_from_json(text: str, complete: bool = False) -> Topology:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed space text: {exc}") from exc
    return space_from_obj(obj, complete=complete)


def load_space(source: TextIO, complete: bool = False) -> Topology:
    return space_from_json(source.read(), complete=complete)
