"""Exhaustive enumeration of all topologies on small point sets.

The production route enumerates reflexive transitive relations by
backtracking over per-point up-set masks (pairwise row containment checks
are exactly transitivity) and maps each relation to its topology of
upward-closed sets.  The far slower direct route — filtering every family
of subsets for closure under union and intersection — is kept as the
independent oracle that certifies the counts at small n.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, TextIO

from .spaces import Preorder, Topology, from_preorder, full_set, space_to_json
from .operators import alpha_topology, set_class
from .covers import PROPERTY_TAGS, check_property

MAX_LABELED_N = 5
MAX_HOMEO_N = 6

CENSUS_FORMAT = "finitetop-census/1"

SIZE_KEYS = ("so", "rc", "gc", "sgc", "alpha")

_SIZE_CLASS = {"so": "semi-open", "rc": "regular-closed", "gc": "g-closed", "sgc": "sg-closed"}


@dataclass
class PropertyProfile:
    """Every covering/separation property of one space plus class sizes."""

    properties: dict[str, bool]
    sizes: dict[str, int]
    gc_mismatch: bool
    so_eq_alpha: bool

    def to_obj(self) -> dict:
        return {
            "properties": {tag: self.properties[tag] for tag in PROPERTY_TAGS},
            "sizes": {key: self.sizes[key] for key in SIZE_KEYS},
            "gc_mismatch": self.gc_mismatch,
            "so_eq_alpha": self.so_eq_alpha,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "PropertyProfile":
        props = obj.get("properties")
        sizes = obj.get("sizes")
        if (
            not isinstance(props, dict)
            or sorted(props) != sorted(PROPERTY_TAGS)
            or not all(isinstance(v, bool) for v in props.values())
        ):
            raise ValueError("profile properties must cover every property tag")
        if (
            not isinstance(sizes, dict)
            or sorted(sizes) != sorted(SIZE_KEYS)
            or not all(isinstance(v, int) for v in sizes.values())
        ):
            raise ValueError("profile sizes must cover every size key")
        return cls(
            properties={tag: props[tag] for tag in PROPERTY_TAGS},
            sizes={key: sizes[key] for key in SIZE_KEYS},
            gc_mismatch=bool(obj["gc_mismatch"]),
            so_eq_alpha=bool(obj["so_eq_alpha"]),
        )


@dataclass
class CensusRecord:
    id: str
    space: Topology
    profile: PropertyProfile

    @property
    def n(self) -> int:
        return self.space.n


def space_id(t: Topology) -> str:
    """Stable record id: point count plus a hash of the canonical opens."""
    digest = hashlib.sha1(space_to_json(t).encode()).hexdigest()[:12]
    return f"n{t.n}-{digest}"


@lru_cache(maxsize=None)
def profile(t: Topology) -> PropertyProfile:
    """All property booleans, class sizes, and the shared-class flags."""
    ta = alpha_topology(t)
    so = set_class(t, "semi-open").members
    sizes = {key: len(set_class(t, kind).members) for key, kind in _SIZE_CLASS.items()}
    sizes["alpha"] = len(ta.opens)
    return PropertyProfile(
        properties={tag: check_property(t, tag) for tag in PROPERTY_TAGS},
        sizes=sizes,
        gc_mismatch=set_class(t, "g-closed").members
        != set_class(ta, "g-closed").members,
        so_eq_alpha=so == ta.opens,
    )


# --- enumeration --------------------------------------------------------------

def enumerate_preorders(n: int) -> Iterator[Preorder]:
    """Every reflexive transitive relation on n points, lexicographic order."""
    rows: list[int] = []

    def rec(i: int) -> Iterator[Preorder]:
        if i == n:
            yield Preorder(n, tuple(rows))
            return
        for r in range(1 << n):
            if not r >> i & 1:
                continue
            ok = True
            for j, rj in enumerate(rows):
                if r >> j & 1 and rj & ~r:
                    ok = False
                    break
                if rj >> i & 1 and r & ~rj:
                    ok = False
                    break
            if ok:
                rows.append(r)
                yield from rec(i + 1)
                rows.pop()

    return rec(0)


def enumerate_topologies(n: int, up_to_homeo: bool = False) -> Iterator[Topology]:
    """Every topology on n labeled points exactly once, deterministic order.

    With up_to_homeo the stream keeps the first representative of each
    homeomorphism class, filtering by backtracking isomorphism against the
    retained representatives (bucketed by cheap invariants).
    """
    cap = MAX_HOMEO_N if up_to_homeo else MAX_LABELED_N
    if not 1 <= n <= cap:
        raise ValueError(f"enumeration budget is n <= {cap} for this mode, got {n}")
    stream = (from_preorder(r) for r in enumerate_preorders(n))
    if not up_to_homeo:
        return stream
    return _dedup_by_homeomorphism(stream)


def _dedup_by_homeomorphism(stream: Iterator[Topology]) -> Iterator[Topology]:
    from .spaces import is_homeomorphic

    buckets: dict[tuple, list[Topology]] = {}
    for t in stream:
        key = _homeo_signature(t)
        reps = buckets.setdefault(key, [])
        if not any(is_homeomorphic(t, rep) for rep in reps):
            reps.append(t)
            yield t


def _homeo_signature(t: Topology) -> tuple:
    down = [0] * t.n
    for x in range(t.n):
        for y in range(t.n):
            if t.min_nbhd[x] >> y & 1:
                down[y] |= 1 << x
    return (
        len(t.opens),
        tuple(sorted(a.bit_count() for a in t.opens)),
        tuple(sorted((t.min_nbhd[x].bit_count(), down[x].bit_count()) for x in range(t.n))),
    )


@lru_cache(maxsize=None)
def labeled_census(n: int) -> tuple[Topology, ...]:
    return tuple(enumerate_topologies(n))


@lru_cache(maxsize=None)
def homeo_census(n: int) -> tuple[Topology, ...]:
    return tuple(enumerate_topologies(n, up_to_homeo=True))


def count_topologies_direct(n: int) -> int:
    """Independent oracle: filter every subset family for closure under
    union/intersection.  Doubly exponential; meant for n <= 4."""
    full = full_set(n)
    proper = list(range(1, full))
    count = 0
    for r in range(len(proper) + 1):
        for chosen in combinations(proper, r):
            fam = set(chosen)
            fam.add(0)
            fam.add(full)
            if all((a | b) in fam and (a & b) in fam for a in fam for b in fam):
                count += 1
    return count


def census_records(n: int, up_to_homeo: bool = False) -> Iterator[CensusRecord]:
    for t in enumerate_topologies(n, up_to_homeo):
        yield CensusRecord(space_id(t), t, profile(t))


# --- persistence ---------------------------------------------------------------

def record_to_obj(rec: CensusRecord) -> dict:
    return {
        "id": rec.id,
        "n": rec.n,
        "opens": [sorted_points(u) for u in rec.space.opens],
        "profile": rec.profile.to_obj(),
    }


def sorted_points(mask: int) -> list[int]:
    return [p for p in range(mask.bit_length()) if mask >> p & 1]


def write_census(records: Iterable[CensusRecord], sink: TextIO) -> int:
    """One header line plus one record per line; an empty census writes nothing.

    Returns the number of records written.
    """
    count = 0
    n = None
    for rec in records:
        if n is None:
            n = rec.n
            sink.write(json.dumps({"format": CENSUS_FORMAT, "n": n}) + "\n")
        if rec.n != n:
            raise ValueError("census files hold spaces of a single point count")
        sink.write(json.dumps(record_to_obj(rec)) + "\n")
        count += 1
    return count


def read_census(source: TextIO) -> list[CensusRecord]:
    """Parse a census file; read(write(x)) == x byte for byte."""
    records: list[CensusRecord] = []
    n = None
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"line {lineno}: malformed record: {exc}") from exc
        if n is None:
            if obj.get("format") != CENSUS_FORMAT:
                raise ValueError(
                    f"line {lineno}: unknown census format {obj.get('format')!r}"
                )
            n = obj.get("n")
            if not isinstance(n, int):
                raise ValueError(f"line {lineno}: header is missing the point count")
            continue
        try:
            records.append(_parse_record(obj, n))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return records


def _parse_record(obj: dict, n: int) -> CensusRecord:
    for key in ("id", "n", "opens", "profile"):
        if key not in obj:
            raise ValueError(f"record is missing the {key!r} field")
    if obj["n"] != n:
        raise ValueError(f"record n={obj['n']} does not match header n={n}")
    masks = []
    for entry in obj["opens"]:
        if not all(isinstance(p, int) and 0 <= p < n for p in entry):
            raise ValueError(f"open set {entry} has points outside 0..{n - 1}")
        m = 0
        for p in entry:
            m |= 1 << p
        masks.append(m)
    space = Topology(n, masks)  # rejects families not closed under union/intersection
    rec = CensusRecord(obj["id"], space, PropertyProfile.from_obj(obj["profile"]))
    if rec.id != space_id(space):
        raise ValueError(f"record id {rec.id!r} does not match the canonical opens")
    return rec
