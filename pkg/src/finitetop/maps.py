"""Point maps between finite spaces and the image law for refinement covers.

Maps are arbitrary total functions, not assumed continuous.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterator

from .spaces import Topology, iter_points, space_from_obj, space_to_obj
from .operators import alpha_topology, set_class
from .covers import check_property

MAP_KINDS = ("continuous", "open", "closed", "alpha-irresolute", "surjective", "injective")

DEFAULT_MAP_BUDGET = 1_000_000


@dataclass(frozen=True)
class SpaceMap:
    """A total function between the points of two spaces."""

    domain: Topology
    codomain: Topology
    fn: tuple[int, ...]

    def __post_init__(self):
        if len(self.fn) != self.domain.n:
            raise ValueError("map must assign every point of the domain")
        if any(not 0 <= y < self.codomain.n for y in self.fn):
            raise ValueError("map hits points outside the codomain")

    def image(self, a: int) -> int:
        out = 0
        for x in iter_points(a):
            out |= 1 << self.fn[x]
        return out

    def preimage(self, b: int) -> int:
        out = 0
        for x in range(self.domain.n):
            if b >> self.fn[x] & 1:
                out |= 1 << x
        return out


def map_predicate(f: SpaceMap, kind: str) -> bool:
    """Standard map predicates; alpha-irresolute pulls back the refined opens."""
    if kind == "continuous":
        return all(f.domain.is_open(f.preimage(v)) for v in f.codomain.opens)
    if kind == "open":
        return all(f.codomain.is_open(f.image(u)) for u in f.domain.opens)
    if kind == "closed":
        closed = set_class(f.codomain, "closed")
        return all(
            f.image(c) in closed for c in set_class(f.domain, "closed").members
        )
    if kind == "alpha-irresolute":
        dom_alpha = alpha_topology(f.domain)
        return all(
            dom_alpha.is_open(f.preimage(v)) for v in alpha_topology(f.codomain).opens
        )
    if kind == "surjective":
        return f.image((1 << f.domain.n) - 1) == (1 << f.codomain.n) - 1
    if kind == "injective":
        return len(set(f.fn)) == f.domain.n
    raise ValueError(f"unknown map predicate {kind!r}")


def enumerate_maps(
    x: Topology,
    y: Topology,
    surjective_only: bool = False,
    budget: int = DEFAULT_MAP_BUDGET,
) -> Iterator[SpaceMap]:
    """All total functions x -> y in deterministic (lexicographic) order."""
    total = y.n ** x.n
    if total > budget:
        raise ValueError(f"{total} maps exceed the budget of {budget}")
    return _iter_maps(x, y, surjective_only)


def _iter_maps(x: Topology, y: Topology, surjective_only: bool) -> Iterator[SpaceMap]:
    full_image = (1 << y.n) - 1
    for fn in iter_product(range(y.n), repeat=x.n):
        if surjective_only:
            hit = 0
            for p in fn:
                hit |= 1 << p
            if hit != full_image:
                continue
        yield SpaceMap(x, y, fn)


def verify_fm1(f: SpaceMap) -> str:
    """Check the image law for refinement covers on one map.

    Applies only to closed alpha-irresolute surjections out of a space where
    every alpha-open cover has a sigma-discrete closed refinement; then the
    codomain must have the same property.  Returns "not-applicable",
    "holds", or "VIOLATION".
    """
    if not (
        map_predicate(f, "surjective")
        and map_predicate(f, "closed")
        and map_predicate(f, "alpha-irresolute")
        and check_property(f.domain, "alpha-subparacompact")
    ):
        return "not-applicable"
    if check_property(f.codomain, "alpha-subparacompact"):
        return "holds"
    return "VIOLATION"


# --- structured text format -------------------------------------------------

def map_to_obj(f: SpaceMap) -> dict:
    return {
        "fn": list(f.fn),
        "domain": space_to_obj(f.domain),
        "codomain": space_to_obj(f.codomain),
    }


def map_to_json(f: SpaceMap) -> str:
    return json.dumps(map_to_obj(f))


def map_from_json(text: str) -> SpaceMap:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed map text: {exc}") from exc
    for key in ("fn", "domain", "codomain"):
        if key not in obj:
            raise ValueError(f"map object needs the {key!r} field")
    return SpaceMap(
        space_from_obj(obj["domain"]),
        space_from_obj(obj["codomain"]),
        tuple(obj["fn"]),
    )
