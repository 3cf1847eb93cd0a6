"""Acceptance suite: the exit criteria of the engine, all exact
(tolerance zero). One PASS/FAIL line per criterion (run with -s to see
them on success).
"""

import itertools
import re
from contextlib import contextmanager

from isurf.adjacency import build_strata_graph, direct_adjacencies, reachable_germs
from isurf.builders import (
    all_builder_variants,
    build_double_cover,
    build_stratum,
    c2_length_counts,
    cover_pairing,
    verify_I_surface,
)
from isurf.divisors import (
    Curve,
    SurfaceModel,
    adjunction_genus,
    basis_class,
    blowup,
    combo,
    pair,
    riemann_roch_chi,
    zero_class,
)
from isurf.germs import (
    cusp,
    enumerate_types,
    multiplicity,
    rdp,
    simple_elliptic,
    smooth,
)
from isurf.lattice import from_rows, is_negative_definite, make_named_lattice, signature


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE criterion {number} ({name}): FAIL")
        raise
    print(f"ACCEPTANCE criterion {number} ({name}): PASS")


def test_criterion_1_lattice_signatures():
    with criterion(1, "lattice signatures"):
        for n in range(1, 21):
            assert signature(make_named_lattice("Lambda0", n)).as_tuple() == (1, n, 0)
        for n in range(1, 13):
            for m in range(1, 13):
                want = (1, n + m + 1, 0)
                assert signature(make_named_lattice("Lambda1", n, m)).as_tuple() == want
                assert signature(make_named_lattice("Lambda2", n, m)).as_tuple() == want
                scaled = make_named_lattice("Lambda2", n, m, scale=2)
                assert signature(scaled).as_tuple() == want


def test_criterion_2_stratum_identity_suite():
    variants = all_builder_variants()
    with criterion(2, "stratum identity suite"):
        assert len(variants) >= 12
        assert {k for k, _ in variants} == {
            "empty", "1", "2", "1,1E", "2,2", "2,1", "1,1R", "2,1,1", "1,1,1"
        }
        for key, opts in variants:
            surf = build_stratum(key, **opts)
            k = surf.k
            ms = [multiplicity(g) for g in surf.germs]
            L = surf.L
            assert L.square == 1
            assert surf.chiO == 3 - k
            assert pair(surf.K, surf.K) == 1 - sum(ms)
            assert k <= 2 + 1  # k <= p_g + 1 with p_g = 2
            for i in range(k):
                di = surf.group_class(i)
                assert pair(L, di) == 0
                assert pair(surf.K, di) == ms[i] == -di.square
                assert is_negative_definite(surf.group_sublattice(i))
                mi = surf.M(i)
                assert mi.square == 1 - ms[i]
                assert pair(mi, surf.K) == 1 - ms[i]
                dprime = zero_class(surf.lattice)
                for j in range(k):
                    if j != i:
                        dprime = dprime + surf.group_class(j)
                assert pair(mi, dprime) == 0
                for j in range(i + 1, k):
                    assert pair(mi, surf.M(j)) == 1
            assert verify_I_surface(surf).ok


def test_criterion_3_double_cover_numerology():
    with criterion(3, "double-cover numerology"):
        for N in range(1, 6):
            for k in range(2 * N, 2 * N + 7):
                dc = build_double_cover(N, k)
                base = dc.base
                assert pair(dc.B, base.curve_class("f")) == 4
                assert pair(dc.B, base.curve_class("e")) == 4
                assert pair(dc.B, base.curve_class("sigma0")) == -4 * N + 2 * k + 2
                assert base.K + dc.half_branch() == combo(
                    base.lattice, f=k - N - 1, e=-1
                )
                assert dc.p_g == k - N - 1
                assert cover_pairing(dc.sigma_tilde(), dc.sigma_tilde(), dc) == -2 * N
                assert dc.sigma_sq == -2 * N + 1
                assert cover_pairing(dc.e_curve(1), dc.e_curve(1), dc) == -1
                assert cover_pairing(dc.e_curve(2), dc.e_curve(2), dc) == -1


def test_criterion_4_pairing_values_and_thresholds():
    with criterion(4, "vanishing-bound pairings"):
        dc13 = build_double_cover(1, 3)
        v43 = pair(dc13.B0, combo(dc13.base.lattice, sigma0=1, f=3, e=-1))
        assert v43 == 13
        assert v43 < c2_length_counts(1)[0] == 24

        dc24 = build_double_cover(2, 4)
        b0 = dc24.B0
        v45 = (
            pair(b0, dc24.base.curve_class("sigma0"))
            + 3 * pair(b0, dc24.base.curve_class("f"))
            - 2 * pair(b0, dc24.base.curve_class("e"))
        )
        assert v45 == 9
        for r in range(1, 20):
            assert (v45 < 24 - r) == (r <= 14)
        assert not v45 < 24 - 15  # boundary at r = 15

        dc12 = build_double_cover(1, 2)
        v69 = pair(dc12.B0, combo(dc12.base.lattice, sigma0=1, f=2, e=-1))
        assert v69 == 7
        assert v69 < c2_length_counts(0)[0] == 12

        v617 = pair(dc12.B0, combo(dc12.base.lattice, sigma0=1, f=3, e=-1))
        assert v617 == 11
        assert v617 < 12


def test_criterion_5_length_counts():
    with criterion(5, "c2 length counts"):
        assert c2_length_counts(1)[0] == 24
        assert c2_length_counts(0)[0] == 12
        for r in range(1, 16):
            assert c2_length_counts(1, r)[1] == 25 - r


def _oracle_orbit(seq):
    out = set()
    for s in (list(seq), list(reversed(seq))):
        for k in range(len(s)):
            out.add(tuple(s[k:] + s[:k]))
    return out


def _oracle_types(max_mult, max_length):
    found = set()
    for e in range(1, max_mult + 1):
        found.add((e,))
    for r in range(2, max_length + 1):
        for seq in itertools.product(range(2, max_mult + 3), repeat=r):
            if 1 <= sum(e - 2 for e in seq) <= max_mult:
                found.add(min(_oracle_orbit(seq)))
    return found


def test_criterion_6_enumeration_matches_oracle():
    with criterion(6, "cusp-type enumeration"):
        got = {g.data for g in enumerate_types(2, 10) if g.kind == "cusp"}
        assert got == _oracle_types(2, 10)
        got1 = {g.data for g in enumerate_types(1, 10) if g.kind == "cusp"}
        assert got1 == _oracle_types(1, 10)
        for r in range(1, 11):
            per_length = [es for es in got1 if len(es) == r]
            assert len(per_length) == 1


def test_criterion_7_adjacency_closure():
    with criterion(7, "adjacency closure vs BFS oracle"):
        universe = list(enumerate_types(2, 10)) + [rdp(), smooth()]
        index = {g: i for i, g in enumerate(universe)}
        n = len(universe)
        reach = [[i == j for j in range(n)] for i in range(n)]
        for g in universe:
            if g.kind == "rdp":
                targets = [(rdp(),), (smooth(),)]
            elif g.kind == "smooth":
                targets = [(smooth(),)]
            else:
                targets = direct_adjacencies(g)
            for target in targets:
                for member in target:
                    reach[index[g]][index[member]] = True
        for k in range(n):
            for i in range(n):
                if reach[i][k]:
                    for j in range(n):
                        if reach[k][j]:
                            reach[i][j] = True
        for a in universe:
            reachable = reachable_germs(a)
            for b in universe:
                assert (b in reachable) == reach[index[a]][index[b]], (a, b)

        assert cusp(1) not in reachable_germs(cusp(4, 2))
        assert simple_elliptic(1) in reachable_germs(cusp(4, 2))
        assert {cusp(2), simple_elliptic(2)} <= reachable_germs(cusp(3, 3))
        assert simple_elliptic(1) not in reachable_germs(simple_elliptic(2))
        for r in range(4, 11):
            src = cusp(*((4,) + (2,) * (r - 1)))
            assert cusp(*((3,) + (2,) * (r - 3))) in reachable_germs(src)


def test_criterion_8_strata_graph():
    with criterion(8, "strata closure graph"):
        g = build_strata_graph()
        paper = {(e.src, e.dst) for e in g.paper_edges()}
        assert paper == {
            ("1", "2"),
            ("2,1", "2,2"),
            ("1,1R", "2,1"),
            ("1,1E", "2,1,1"),
            ("2,1", "2,1,1"),
            ("1,1R", "1,1,1"),
            ("1,1E", "1,1,1"),
        }
        for e in g.paper_edges():
            assert e.derivable or e.source == "exotic"
            assert e.source in ("paper", "exotic")
        # DOT output parses (digraph header, node statements, edge statements)
        dot = g.to_dot()
        lines = dot.strip().splitlines()
        assert lines[0] == "digraph strata {" and lines[-1] == "}"
        node_re = re.compile(r'^  \w+ \[label="[^"]*"\];$')
        edge_re = re.compile(
            r'^  \w+ -> \w+ \[source=(rule|paper|exotic)(, provenance="[^"]*")?\];$'
        )
        seen_nodes = seen_edges = 0
        for line in lines[1:-1]:
            if node_re.match(line):
                seen_nodes += 1
            elif edge_re.match(line):
                seen_edges += 1
            else:
                raise AssertionError(f"unparsable DOT line: {line!r}")
        assert seen_nodes == 9
        assert seen_edges == len(g.edges)


def test_criterion_9_example_arithmetic_via_generic_ops():
    with criterion(9, "worked-example arithmetic"):
        # the degree-6 plane model: nine blowups of P^2
        lat = from_rows(["H"], [[1]])
        H = basis_class(lat, "H")
        surf = SurfaceModel(
            lat,
            -3 * H,
            1,
            (Curve("Gam", 6 * H, "other"), Curve("Fib", 3 * H, "other")),
        )
        for i in range(1, 10):
            surf = blowup(surf, {"Gam": 1 if i == 1 else 2, "Fib": 1}, f"E{i}")
        gam, fib = surf.curve_class("Gam"), surf.curve_class("Fib")
        assert gam.square == 36 - 1 - 32 == 3
        assert pair(gam, fib) == 18 - 1 - 16 == 1

        # chi(E + F) = (1 + 1)/2 + 1 = 2 on the rational elliptic base
        lat = from_rows(["F", "E"], [[0, 1], [1, -1]])
        base = SurfaceModel(lat, -1 * basis_class(lat, "F"), 1, ())
        assert riemann_roch_chi(combo(lat, E=1, F=1), base) == 2

        # M_1 = f - C_1 on the (2,1,1) model, built by blowing up the
        # ruled surface, not declared
        ruled = build_stratum("2,1,1")
        assert ruled.M(0) == combo(ruled.lattice, f=1, C1=-1)
        assert pair(ruled.M(0), ruled.group_class(0)) == 2

        # L^2 = 9 - 6 - 1 - 1 = 1 on the (1,1,1) model
        tri = build_stratum("1,1,1")
        L = tri.L
        sig3 = combo(tri.lattice, sig=3)
        f = combo(tri.lattice, f=1)
        c1 = combo(tri.lattice, C1=1)
        c2 = combo(tri.lattice, C2=1)
        assert L == sig3 - f - c1 - c2
        parts = (
            pair(sig3 - f, sig3 - f)
            + c1.square
            + c2.square
        )
        assert pair(sig3, sig3) + 2 * pair(sig3, -1 * f) + f.square == 9 - 6
        assert parts == 9 - 6 - 1 - 1 == L.square == 1
