"""Face/edge three-colorings and the induced two-body checks."""

from collections import Counter

import pytest

from floqtess.coloring import (
    Check,
    ColorAssignment,
    EdgeSchedule,
    checks_for_round,
    edge_three_color,
    is_color_code_tiling,
    three_color,
)
from floqtess.derive import clip_complex, incenter_complex
from floqtess.surface import SurfaceComplex, fundamental_polygon


def hex_torus_k4():
    """2x2 honeycomb on the torus: four hexagons, pairwise adjacent.

    Tri-valent with even faces and no self-adjacency, yet the face graph is
    K4, so no proper 3-coloring exists.
    """
    def u(x, y):
        return f"u{x % 2}{y % 2}"

    def w(x, y):
        return f"w{x % 2}{y % 2}"

    vertices = [f"{k}{x}{y}" for k in "uw" for x in (0, 1) for y in (0, 1)]
    edges = []
    for x in (0, 1):
        for y in (0, 1):
            edges.append((f"a{x}{y}", (u(x, y), w(x, y))))
            edges.append((f"b{x}{y}", (w(x, y), u(x + 1, y))))
            edges.append((f"c{x}{y}", (w(x, y), u(x, y + 1))))
    faces = []
    for x in (0, 1):
        for y in (0, 1):
            faces.append(
                (
                    (f"a{x}{y}", 1),
                    (f"b{x}{y}", 1),
                    (f"a{(x + 1) % 2}{y}", 1),
                    (f"c{(x + 1) % 2}{y}", 1),
                    (f"b{x}{(y + 1) % 2}", -1),
                    (f"c{x}{(y + 1) % 2}", 1),
                )
            )
    return SurfaceComplex(
        orientable=True, genus=1, vertices=vertices, edges=edges, faces=faces
    )


@pytest.fixture(scope="module")
def octagon_incenter():
    return incenter_complex(fundamental_polygon(2, True), 8, 8)


class TestIsColorCodeTiling:
    def test_incenter_octagon_accepted(self, octagon_incenter):
        verdict = is_color_code_tiling(octagon_incenter)
        assert verdict
        assert verdict.reason is None

    def test_fundamental_polygon_rejected_on_degree(self):
        verdict = is_color_code_tiling(fundamental_polygon(2, True))
        assert not verdict
        assert "degree 8" in verdict.reason

    def test_clipped_polygon_rejected_on_self_adjacency(self):
        clip = clip_complex(fundamental_polygon(3, False), 6, 6)
        verdict = is_color_code_tiling(clip)
        assert not verdict
        assert "adjacent to itself" in verdict.reason

    def test_k4_face_graph_rejected_by_search(self):
        verdict = is_color_code_tiling(hex_torus_k4())
        assert not verdict
        assert "no proper 3-coloring" in verdict.reason


class TestThreeColor:
    def test_class_coloring_on_incenter(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        # Faces are listed 2p-gons, 2q-gons, quadrilaterals; the classes pick
        # up R, G, B respectively, so class sizes are (F, V, E) = (1, 1, 4).
        assert assign.face_color == ("R", "G", "B", "B", "B", "B")
        assert Counter(assign.face_color) == {"R": 1, "G": 1, "B": 4}

    def test_lowest_index_face_is_red(self, octagon_incenter):
        assert three_color(octagon_incenter).face_color[0] == "R"

    def test_deterministic(self, octagon_incenter):
        a = three_color(octagon_incenter)
        b = three_color(octagon_incenter)
        assert a == b
        assert a.face_color == b.face_color
        assert a.edge_color == b.edge_color
        assert a.checks == b.checks

    def test_checks_partition_edges(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        total = sum(len(v) for v in assign.checks.values())
        assert total == len(octagon_incenter.edges)
        pairs = [frozenset(ch.qubits) for v in assign.checks.values() for ch in v]
        assert len(pairs) == len(set(pairs)) == 24

    def test_each_vertex_in_three_checks_one_per_color(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        by_vertex = {}
        for color, checks in assign.checks.items():
            for ch in checks:
                for qubit in ch.qubits:
                    by_vertex.setdefault(qubit, []).append(color)
        for colors in by_vertex.values():
            assert sorted(colors) == ["B", "G", "R"]

    def test_edge_coloring_proper(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        at_vertex = {}
        for e in octagon_incenter.edges:
            for v in e.ends:
                at_vertex.setdefault(v, []).append(assign.edge_color[e.id])
        for colors in at_vertex.values():
            assert sorted(colors) == ["B", "G", "R"]

    def test_face_boundary_alternates_other_colors(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        for f, face in enumerate(octagon_incenter.faces):
            own = assign.face_color[f]
            boundary = [assign.edge_color[eid] for eid, _ in face]
            assert own not in boundary
            for k in range(len(boundary)):
                assert boundary[k] != boundary[(k + 1) % len(boundary)]

    def test_pauli_binding(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        for color, pauli in (("G", "XX"), ("B", "YY"), ("R", "ZZ")):
            assert {ch.pauli for ch in assign.checks[color]} == {pauli}

    def test_rejects_uncolorable_with_diagnostic(self):
        with pytest.raises(ValueError, match="not a color-code tiling.*degree"):
            three_color(fundamental_polygon(2, True))
        with pytest.raises(ValueError, match="no proper 3-coloring"):
            three_color(hex_torus_k4())

    def test_nonorientable_instance(self):
        inc = incenter_complex(fundamental_polygon(3, False), 6, 6)
        assign = three_color(inc)
        assert Counter(assign.face_color) == {"R": 1, "G": 1, "B": 3}
        assert sum(len(v) for v in assign.checks.values()) == 18


class TestChecksForRound:
    def test_round_cycle(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        assert {ch.pauli for ch in checks_for_round(assign, 0)} == {"XX"}
        assert {ch.pauli for ch in checks_for_round(assign, 4)} == {"YY"}
        assert {ch.pauli for ch in checks_for_round(assign, 2)} == {"ZZ"}
        assert checks_for_round(assign, 0) == checks_for_round(assign, 3)

    def test_union_of_one_period_is_all_edges(self, octagon_incenter):
        assign = three_color(octagon_incenter)
        seen = set()
        for r in range(3):
            for ch in checks_for_round(assign, r):
                seen.add(frozenset(ch.qubits))
        assert len(seen) == len(octagon_incenter.edges)


class TestEdgeSchedule:
    def test_clipped_hexagon_edge_colorable(self):
        clip = clip_complex(fundamental_polygon(3, False), 6, 6)
        sched = edge_three_color(clip)
        assert Counter(sched.edge_color.values()) == {"R": 3, "G": 3, "B": 3}
        at_vertex = {}
        for e in clip.edges:
            for v in e.ends:
                at_vertex.setdefault(v, []).append(sched.edge_color[e.id])
        for colors in at_vertex.values():
            assert sorted(colors) == ["B", "G", "R"]

    def test_k4_torus_edge_colorable_despite_face_failure(self):
        sched = edge_three_color(hex_torus_k4())
        assert Counter(sched.edge_color.values()) == {"R": 4, "G": 4, "B": 4}

    def test_deterministic(self):
        clip = clip_complex(fundamental_polygon(3, False), 6, 6)
        assert edge_three_color(clip).edge_color == edge_three_color(clip).edge_color

    def test_rejects_non_trivalent(self):
        with pytest.raises(ValueError, match="degree"):
            edge_three_color(fundamental_polygon(2, True))


class TestCheckType:
    def test_pauli_must_match_color(self):
        with pytest.raises(ValueError, match="carries"):
            Check("G", "ZZ", ("a", "b"))

    def test_rejects_loops(self):
        with pytest.raises(ValueError, match="distinct"):
            Check("G", "XX", ("a", "a"))

    def test_json_shape(self):
        assert Check("R", "ZZ", (3, 7)).as_json() == {
            "color": "R",
            "pauli": "ZZ",
            "qubits": [3, 7],
        }


class TestJsonExport:
    def test_schema(self, octagon_incenter):
        docs = three_color(octagon_incenter).checks_json()
        assert len(docs) == 24
        assert all(set(d) == {"color", "pauli", "qubits"} for d in docs)
        # Grouped green, blue, red.
        assert [d["pauli"] for d in docs] == ["XX"] * 8 + ["YY"] * 8 + ["ZZ"] * 8
