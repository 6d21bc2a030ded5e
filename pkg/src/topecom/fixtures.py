"""Bundled demo instance: five planes in 3-space and three named cycles.

The package ships a small rational arrangement (data/demo.arr) whose 22
chambers include every tope used by the demo walkthrough: three symmetric
cycles on the ground set {1,..,5}, a distinguished base tope, a target tope
with its known decomposition, and a known critical committee of the
reoriented instance. The chamber set is recomputed from the arrangement at
load time and cross-checked against the committed tope file (data/demo.topes);
any drift raises :class:`ReconstructionFailed` instead of substituting data.

The arrangement itself was found once by a deterministic grid search; see
scripts/find_demo_arrangement.py for the regeneration path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib.resources import files

from .cycles import SymmetricCycle, build_symmetric_cycle
from .errors import ReconstructionFailed, TopecomError
from .realization import Arrangement, chambers, parse_arrangement_text
from .signs import Tope
from .topesets import TopeSet, parse_topes_text

__all__ = ["DemoData", "demo_arrangement", "demo_tope_set", "demo_data"]


def _topes(*strings: str) -> tuple[Tope, ...]:
    return tuple(Tope.from_string(s) for s in strings)


# Three symmetric cycles of the demo tope set, each listed from its root.
_CYCLE_LISTINGS = (
    _topes(
        "+-+++", "+-+-+", "+---+", "++--+", "-+--+",
        "-+---", "-+-+-", "-+++-", "--++-", "+-++-",
    ),
    _topes(
        "--+++", "+-+++", "+-+-+", "+---+", "++--+",
        "++---", "-+---", "-+-+-", "-+++-", "--++-",
    ),
    _topes(
        "-++++", "--+++", "+-+++", "+-+-+", "+---+",
        "+----", "++---", "-+---", "-+-+-", "-+++-",
    ),
)

_BASE = Tope.from_string("-++++")

# Expected minimal vertex sets in the poset at the base, for the first two
# cycles; each sums to the base exactly.
_MINIMAL_AT_BASE = (
    frozenset(_topes("+-+++", "-+--+", "-+++-")),
    frozenset(_topes("--+++", "++--+", "-+++-")),
)

# Critical committee of the {1}-reoriented instance, induced by the image of
# the first cycle; sums to the all-ones vector.
_REORIENTED_COMMITTEE = frozenset(_topes("--+++", "++--+", "++++-"))

_TARGET = Tope.from_string("+-++-")

# Decomposition of the target over the third cycle.
_TARGET_MEMBERS = frozenset(_topes("+-+++", "-+++-", "+----"))


@dataclass(frozen=True)
class DemoData:
    """The demo instance and every frozen expectation about it."""

    arrangement: Arrangement
    carrier: TopeSet
    base: Tope
    cycles: tuple[SymmetricCycle, ...]
    minimal_at_base: tuple[frozenset[Tope], ...]
    reorient_elements: frozenset[int]
    reoriented_committee: frozenset[Tope]
    target: Tope
    target_members: frozenset[Tope]


def _data_text(name: str) -> str:
    return (files("topecom") / "data" / name).read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def demo_arrangement() -> Arrangement:
    """The committed five-plane arrangement."""
    return parse_arrangement_text(_data_text("demo.arr"))


@lru_cache(maxsize=1)
def demo_tope_set() -> TopeSet:
    """Chambers of the demo arrangement, cross-checked against committed data.

    Raises :class:`ReconstructionFailed` when the recomputed chamber set
    disagrees with data/demo.topes or misses a tope the walkthrough uses.
    """
    computed = chambers(demo_arrangement())
    committed = parse_topes_text(_data_text("demo.topes"))
    if computed.topes != committed.topes:
        raise ReconstructionFailed(
            "recomputed chambers disagree with the committed tope file"
        )
    mentioned = {v for listing in _CYCLE_LISTINGS for v in listing}
    missing = sorted(tp for tp in mentioned if tp not in computed.members)
    if missing:
        raise ReconstructionFailed(
            f"chambers missing demo topes: {[str(tp) for tp in missing]}"
        )
    return computed


@lru_cache(maxsize=1)
def demo_data() -> DemoData:
    """Carrier, cycles, and golden expectations, validated on first use."""
    carrier = demo_tope_set()
    try:
        cycles = tuple(
            build_symmetric_cycle(carrier, listing) for listing in _CYCLE_LISTINGS
        )
    except TopecomError as exc:
        raise ReconstructionFailed(f"demo cycle rejected: {exc}") from exc
    return DemoData(
        arrangement=demo_arrangement(),
        carrier=carrier,
        base=_BASE,
        cycles=cycles,
        minimal_at_base=_MINIMAL_AT_BASE,
        reorient_elements=frozenset({1}),
        reoriented_committee=_REORIENTED_COMMITTEE,
        target=_TARGET,
        target_members=_TARGET_MEMBERS,
    )
