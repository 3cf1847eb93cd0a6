"""Deformation adjacencies between germs and the derived strata graph.

The germ-level rule table encodes which singularities a given simple
elliptic or cusp germ of multiplicity at most two can deform to; the
relation queried by `is_adjacent` is its reflexive-transitive closure.
Targets are multisets (a germ may split into a disconnected germ), with
rational double points and smooth germs as absorbing terminals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnsupportedGermError
from .germs import (
    CUSP,
    RDP,
    SIMPLE_ELLIPTIC,
    SMOOTH,
    SingularityGerm,
    cusp,
    multiplicity,
    normalize_cusp,
    rdp,
    simple_elliptic,
    smooth,
)

Multiset = tuple[SingularityGerm, ...]


def _bare(g: SingularityGerm) -> SingularityGerm:
    """Forget the opaque j-tag; adjacency only sees the numerical type."""
    if g.j_tag is None:
        return g
    return SingularityGerm(g.kind, g.data, None)


def _classify_cusp(g: SingularityGerm) -> tuple:
    """Sort a supported cusp into one of the shape families.

    ("len1", e)       type (e), e in {1, 2}
    ("A", r)          type (3, 2^{r-1}), multiplicity 1
    ("B", r)          type (4, 2^{r-1}), multiplicity 2
    ("C", a, b)       type (3, 2^a, 3, 2^b) with a <= b, multiplicity 2
    """
    es = g.data
    if len(es) == 1:
        if es[0] in (1, 2):
            return ("len1", es[0])
        raise UnsupportedGermError(f"cusp {g} has multiplicity {es[0]} > 2")
    if multiplicity(g) > 2:
        raise UnsupportedGermError(f"cusp {g} has multiplicity > 2")
    threes = es.count(3)
    if threes == 1 and es.count(4) == 0:
        return ("A", len(es))
    if threes == 0 and es.count(4) == 1:
        return ("B", len(es))
    # two entries equal to 3: cyclic gaps between them
    pos = [i for i, e in enumerate(es) if e == 3]
    r = len(es)
    a = (pos[1] - pos[0]) - 1
    b = r - 2 - a
    return ("C", min(a, b), max(a, b))


def _family_a(r: int) -> SingularityGerm:
    return normalize_cusp((3,) + (2,) * (r - 1))


def _family_b(r: int) -> SingularityGerm:
    return normalize_cusp((4,) + (2,) * (r - 1))


def _family_c(a: int, b: int) -> SingularityGerm:
    return normalize_cusp((3,) + (2,) * a + (3,) + (2,) * b)


def _supported(g: SingularityGerm) -> bool:
    g = _bare(g)
    if g.kind in (RDP, SMOOTH):
        return True
    if g.kind == SIMPLE_ELLIPTIC:
        return g.data[0] <= 2
    if g.kind == CUSP:
        try:
            _classify_cusp(g)
        except UnsupportedGermError:
            return False
        return True
    return False


def direct_adjacencies(g: SingularityGerm) -> list[Multiset]:
    """Generator list of the deformation rules for one germ.

    Every target is a multiset of germs; all rules here produce
    singletons. The trivial deformation (the germ itself) is included.
    """
    g = _bare(g)
    if g.kind == SIMPLE_ELLIPTIC:
        if g.data[0] > 2:
            raise UnsupportedGermError(
                "adjacency rules cover multiplicity at most 2"
            )
        return [(g,), (rdp(),), (smooth(),)]
    if g.kind != CUSP:
        raise UnsupportedGermError(f"no adjacency rules for {g.kind} germ")
    shape = _classify_cusp(g)
    targets: list[SingularityGerm] = [g]
    if shape[0] == "len1":
        # not covered by the classification of cycle deformations; a
        # length-one cusp is a smoothable hypersurface germ
        targets += [rdp(), smooth()]
    elif shape[0] == "A":
        r = shape[1]
        targets += [_family_a(s) for s in range(2, r + 1)]
        targets += [simple_elliptic(1), cusp(1), rdp(), smooth()]
    elif shape[0] == "B":
        r = shape[1]
        targets += [_family_b(s) for s in range(2, r + 1)]
        if r >= 4:
            targets.append(_family_a(r - 2))
        elif r == 3:
            targets += [simple_elliptic(1), cusp(1)]
        else:  # r == 2
            targets.append(simple_elliptic(1))
    else:  # "C"
        a, b = shape[1], shape[2]
        for v, other in ((a, b), (b, a)):
            if v > 0:
                targets.append(_family_c(v - 1, other))
        if a == 0 and b >= 1:
            targets.append(_family_b(b + 1))
        if a == 0 and b == 0:
            targets += [cusp(2), simple_elliptic(2)]
    seen: dict[SingularityGerm, None] = {}
    for t in targets:
        seen.setdefault(t)
    return [(t,) for t in seen]


def _closure_step(g: SingularityGerm) -> list[Multiset]:
    if g.kind == RDP:
        return [(rdp(),), (smooth(),)]
    if g.kind == SMOOTH:
        return [(smooth(),)]
    return direct_adjacencies(g)


def reachable_germs(g: SingularityGerm) -> frozenset[SingularityGerm]:
    """All germs appearing in multisets reachable from g (g included)."""
    g = _bare(g)
    if not _supported(g):
        raise UnsupportedGermError(f"unsupported germ {g}")
    seen = {g}
    frontier = [g]
    while frontier:
        cur = frontier.pop()
        for target in _closure_step(cur):
            for member in target:
                if member not in seen:
                    seen.add(member)
                    frontier.append(member)
    return frozenset(seen)


def is_adjacent(src: SingularityGerm, dst: SingularityGerm) -> bool:
    """Reflexive-transitive closure query on the rule table."""
    src, dst = _bare(src), _bare(dst)
    if not _supported(src) or not _supported(dst):
        raise UnsupportedGermError("adjacency queries cover multiplicity <= 2")
    return dst in reachable_germs(src)


# ---------------------------------------------------------------------------
# Strata of the moduli boundary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StratumLabel:
    key: str
    name: str
    mults: tuple[int, ...]
    resolution: str
    cusps_allowed: bool

    @property
    def k(self) -> int:
        return len(self.mults)


STRATA: dict[str, StratumLabel] = {
    s.key: s
    for s in (
        StratumLabel("empty", "N_empty", (), "minimal general type", False),
        StratumLabel("1", "N_1", (1,), "properly elliptic", True),
        StratumLabel("2", "N_2", (2,), "K3 blowup", True),
        StratumLabel("1,1E", "N_11^E", (1, 1), "Enriques blowup", True),
        StratumLabel("2,2", "N_22", (2, 2), "rational", True),
        StratumLabel("2,1", "N_21", (2, 1), "rational", True),
        StratumLabel("1,1R", "N_11^R", (1, 1), "rational", True),
        StratumLabel("2,1,1", "N_211", (2, 1, 1), "elliptic ruled blowup", False),
        StratumLabel("1,1,1", "N_111", (1, 1, 1), "elliptic ruled blowup", False),
    )
}

# Curated closure-incidence claims. An entry (S, T) records that the
# closure of stratum S meets stratum T; `exotic` marks the ones that
# need a multiplicity-dropping (Brieskorn-Wahl) germ deformation.
PAPER_EDGES: tuple[tuple[str, str, str], ...] = (
    ("1", "2", "intro: closure of N_1 meets N_2 (exotic drop)"),
    ("2,1", "2,2", "Rem 6.8"),
    ("1,1R", "2,1", "Prop 6.16"),
    ("1,1E", "2,1,1", "Thm 8.3(iv)"),
    ("2,1", "2,1,1", "Thm 8.3(iv)"),
    ("1,1R", "1,1,1", "Thm 8.3(v)"),
    ("1,1E", "1,1,1", "Thm 8.3(v)"),
)


@dataclass(frozen=True)
class StrataEdge:
    src: str
    dst: str
    derivable: bool
    exotic: bool
    paper: bool
    provenance: str = ""

    @property
    def source(self) -> str:
        if self.paper:
            return "exotic" if self.exotic else "paper"
        return "rule"


def _multiset_move(dst: StratumLabel, src: StratumLabel) -> tuple[bool, bool]:
    """Can the points of `dst` deform (pointwise) to the multiset of `src`?

    Each point of `dst` may keep its multiplicity, drop 2 -> 1 (cusps
    only), or vanish into an RDP/smooth point. Returns (derivable,
    needs_drop).
    """
    if src.mults == dst.mults:
        return (False, False)
    a_t, b_t = dst.mults.count(2), dst.mults.count(1)
    a_s, b_s = src.mults.count(2), src.mults.count(1)
    if a_s > a_t or b_s > b_t + (a_t - a_s):
        return (False, False)
    drops = max(0, b_s - b_t)
    if drops > 0 and not dst.cusps_allowed:
        return (False, False)
    return (True, drops > 0)


@dataclass(frozen=True)
class StrataGraph:
    nodes: tuple[StratumLabel, ...]
    edges: tuple[StrataEdge, ...]

    def edge(self, src: str, dst: str) -> StrataEdge | None:
        for e in self.edges:
            if e.src == src and e.dst == dst:
                return e
        return None

    def paper_edges(self) -> list[StrataEdge]:
        return [e for e in self.edges if e.paper]

    def to_dot(self) -> str:
        def node_id(key: str) -> str:
            return "N_" + key.replace(",", "")

        lines = ["digraph strata {"]
        for s in self.nodes:
            mults = ",".join(str(m) for m in s.mults) or "-"
            label = f"{s.name}\\nm=({mults})\\n{s.resolution}"
            lines.append(f'  {node_id(s.key)} [label="{label}"];')
        for e in self.edges:
            attrs = f'source={e.source}'
            if e.provenance:
                attrs += f', provenance="{e.provenance}"'
            lines.append(f"  {node_id(e.src)} -> {node_id(e.dst)} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_strata_graph() -> StrataGraph:
    """Directed graph on the nine strata.

    An edge S -> T means the closure of S meets T. Edges come from two
    sources: pointwise germ deformation applied to multiplicity
    multisets (tag "rule"; candidates only), and the curated claim table
    (tag "paper", or "exotic" for the multiplicity-dropping ones). Every
    curated edge is required to be rule-derivable.
    """
    paper = {(s, t): prov for s, t, prov in PAPER_EDGES}
    edges = []
    keys = list(STRATA)
    for src_key in keys:
        for dst_key in keys:
            if src_key == dst_key:
                continue
            src, dst = STRATA[src_key], STRATA[dst_key]
            derivable, needs_drop = _multiset_move(dst, src)
            asserted = (src_key, dst_key) in paper
            if not derivable and not asserted:
                continue
            if asserted and not derivable:
                raise AssertionError(
                    f"curated edge {src_key} -> {dst_key} is not rule-derivable"
                )
            edges.append(
                StrataEdge(
                    src_key,
                    dst_key,
                    derivable,
                    needs_drop,
                    asserted,
                    paper.get((src_key, dst_key), ""),
                )
            )
    edges.sort(key=lambda e: (e.src, e.dst))
    return StrataGraph(tuple(STRATA.values()), tuple(edges))
