# Standard library
import math

# Local application
from linkforge.energy import mobius_cross, mobius_total
from linkforge.exceptions import DivergenceError, TopologyError
from linkforge.families import (
    ChainLayout,
    ChainmailParams,
    central_vertex_count,
    expected_linkages,
    family_borromean,
    family_chain_congruent,
    family_chain_layered,
    family_chainmail,
    family_hopf_circles,
    family_hopf_polygons,
    family_link633,
    family_tambourine,
    family_torus_knot,
    layer_positions,
)
from linkforge.families.torus import torus_link_matrix
from linkforge.geometry import linked_pairs, linking_matrix, valences
from linkforge.utils import load_family

# Third party
import numpy as np
import pytest


class TestHopf:
    def test_circles(self):
        link = family_hopf_circles(1.0, math.sqrt(2.0), n=60)
        assert link.labels == ("xy-circle", "xz-circle")

    def test_unlinked(self):
        with pytest.raises(TopologyError):
            family_hopf_circles(0.5, 2.0, n=60)

    def test_touching(self):
        with pytest.raises(DivergenceError):
            family_hopf_circles(1.0, 2.0, n=60)

    def test_default_squares(self):
        link = family_hopf_polygons(4, 1.2)
        np.testing.assert_allclose(np.abs(link[0].vertices[:, :2]), 1.0, atol=1e-12)

    def test_triangles_rejected(self):
        with pytest.raises(RuntimeError, match="at least four sides"):
            load_family("hopf-polygons", n_sides=3)


class TestBorromean:
    def test_pairwise_unlinked(self):
        link = family_borromean("ellipse", n=120, aspect=1.71)
        np.testing.assert_array_equal(linking_matrix(link), np.zeros((3, 3)))

    def test_circles_rejected(self):
        with pytest.raises(RuntimeError, match="cannot be formed from three circles"):
            family_borromean("ellipse", aspect=1.0)

    def test_unknown_shape(self):
        with pytest.raises(NotImplementedError):
            family_borromean("heart", aspect=2.0)

    def test_plane_assignment(self):
        link = family_borromean("rectangle", aspect=2.0)
        for i, curve in enumerate(link):
            np.testing.assert_allclose(curve.vertices[:, i], 0.0, atol=1e-15)
            assert np.ptp(curve.vertices[:, (i + 1) % 3]) == pytest.approx(2.0)


class TestChains:
    def test_congruent(self):
        link = family_chain_congruent(4, 1.58, n=120)
        np.testing.assert_array_equal(valences(link), [1, 2, 2, 1])

    def test_spacing(self):
        with pytest.raises(RuntimeError, match="Spacing should be in"):
            family_chain_congruent(3, 2.0)

    def test_unknown_shape(self):
        with pytest.raises(NotImplementedError):
            family_chain_congruent(3, 1.5, shape="hexagon")

    def test_layered_default(self):
        layout = ChainLayout.default(2)
        link = family_chain_layered(layout)
        assert link.n_components == 5
        assert link.labels[2] == "center"
        assert linked_pairs(link) == [(0, 1), (1, 2), (2, 3), (3, 4)]

    def test_layer_positions(self):
        layout = ChainLayout(2, 1.0, [0.5, 0.25], [0.6, 0.4], [1.0, 1.0])
        np.testing.assert_allclose(layer_positions(layout), [0.0, 0.6, 1.0])


class TestChainLayout:
    def test_vector(self):
        layout = ChainLayout.default(3)
        vector = layout.to_vector()
        assert len(vector) == 10
        again = ChainLayout.from_vector(vector, 3)
        np.testing.assert_array_equal(again.to_vector(), vector)
        assert ChainLayout.param_names(1) == [
            "center_aspect",
            "area_1",
            "displacement_1",
            "aspect_1",
        ]

    def test_extended(self):
        np.testing.assert_allclose(
            ChainLayout(0, 1.2).extended().to_vector(),
            ChainLayout.default(1).to_vector(),
        )
        np.testing.assert_allclose(
            ChainLayout.default(2).extended().to_vector(),
            ChainLayout.default(3).to_vector(),
        )
        assert ChainLayout.default(1).extended(0.5).areas == pytest.approx(
            [1.6, 0.8]
        )

    def test_wrong_length(self):
        with pytest.raises(RuntimeError) as exc_info:
            ChainLayout.from_vector([1.0, 2.0], 1)
        assert str(exc_info.value) == (
            "A layout with 1 layers has 4 parameters. Got 2."
        )

    def test_non_positive(self):
        with pytest.raises(RuntimeError, match="All areas should be positive"):
            ChainLayout(1, 1.0, [0.0], [0.5], [1.0])


class TestTambourine:
    def test_default(self):
        link = family_tambourine(8, 0.01)
        assert link.n_components == 9
        np.testing.assert_array_equal(valences(link), [8] + [1] * 8)
        assert link.n_vertices[0] == central_vertex_count(360, 0.01)

    def test_overlap(self):
        with pytest.raises(RuntimeError, match="overlap"):
            family_tambourine(40, 0.2)

    def test_radius(self):
        with pytest.raises(RuntimeError, match="Small radius"):
            family_tambourine(3, 1.5)


class TestLink633:
    link = family_link633(math.sqrt(3.0), math.pi / 3, 0.5, n=360)

    def test_pairwise_linked(self):
        np.testing.assert_array_equal(
            np.abs(linking_matrix(self.link)), [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        )

    def test_minimum_energy(self):
        report = mobius_total(self.link)
        expected = 12 + 8 * math.sqrt(3.0) * math.pi**2
        assert report.total == pytest.approx(expected, abs=0.25)

    @pytest.mark.parametrize("pair", [(0, 1), (0, 2), (1, 2)])
    def test_fibre_pairs(self, pair):
        i, j = pair
        cross = mobius_cross(self.link[i], self.link[j])
        assert cross == pytest.approx(8 * math.pi**2 / math.sqrt(3.0), rel=2e-3)

    def test_small_circle_plane(self):
        small = self.link[2].vertices
        np.testing.assert_allclose(small[:, 1], 0.0, atol=1e-12)

    def test_positive(self):
        with pytest.raises(RuntimeError, match="should be positive"):
            family_link633(0.0, 1.0, 0.5)


class TestTorus:
    def test_matrix(self):
        np.testing.assert_array_equal(torus_link_matrix(2, 4), [[0, 2], [2, 0]])
        np.testing.assert_array_equal(
            torus_link_matrix(3, 3), [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        )

    def test_link(self):
        link = family_torus_knot(3, 6, 1.0, 0.4, n=240)
        assert link.n_components == 3


class TestChainmail:
    @pytest.mark.parametrize("style", ["european", "japanese"])
    def test_linkages(self, style):
        params = ChainmailParams(style, 3)
        link = family_chainmail(params, n=120)
        assert len(linked_pairs(link)) == expected_linkages(params)

    def test_japanese_valences(self):
        link = family_chainmail(ChainmailParams("japanese", 2), n=120)
        np.testing.assert_array_equal(valences(link), [2, 2, 2, 2, 2, 2, 2, 2])

    def test_rows_tilt_fails(self):
        with pytest.raises(TopologyError):
            family_chainmail(ChainmailParams("european", 2, tilt="rows"), n=120)

    def test_invalid(self):
        with pytest.raises(RuntimeError) as exc_info:
            ChainmailParams("byzantine", 2)
        assert str(exc_info.value) == (
            "Chainmail style should be one of ('european', 'japanese'). "
            "Currently set to byzantine."
        )

    def test_short_linker(self):
        with pytest.raises(RuntimeError, match="Linker radius"):
            ChainmailParams("japanese", 2, dj=4.0, lj=0.5)

    def test_copy(self):
        params = ChainmailParams("european", 2)
        copy = params.create_copy({"d4": 1.6})
        assert copy.d4 == 1.6
        assert params.d4 == 1.55
