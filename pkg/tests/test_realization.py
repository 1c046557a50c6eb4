"""Realization verification and every explicit construction."""

import math

import numpy as np
import pytest

from planewidth.coloring import chromatic_number, coloring_from_list
from planewidth.geometry import LINF, diameter
from planewidth.graphs import (
    Homomorphism, ParameterError, cartesian, circulant, complete, cycle,
    disjoint_union, double_subdivide, graph_from_edges, join, odd_wheel,
)
from planewidth.realization import (
    COMPLETE_WIDTH, CertificateError, InfeasibleError, Realization,
    evaluate, feasibilize, from_circular, from_coloring, join_realization,
    known_complete_arrangement, lattice_complete_arrangement,
    low_dim_realization, product_realization, pullback, read_realization,
    realization_from_array, union_realization, write_realization,
)

from conftest import random_graph

PHI = (1 + math.sqrt(5)) / 2


def square_realization():
    return Realization(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))


def test_evaluate_square():
    ev = evaluate(complete(4), square_realization())
    assert ev.valid
    assert ev.width == pytest.approx(math.sqrt(2), abs=1e-12)
    assert ev.min_edge_distance == pytest.approx(1.0, abs=1e-12)


def test_evaluate_coincident_invalid():
    ev = evaluate(complete(2), Realization(((0.0, 0.0), (0.0, 0.0))))
    assert not ev.valid
    assert ev.min_edge_distance == 0.0
    assert ev.violating_edge == (0, 1)


def test_evaluate_k7_hexagon():
    ev = evaluate(complete(7), known_complete_arrangement(7))
    assert ev.valid and ev.width == pytest.approx(2.0, abs=1e-12)


def test_evaluate_size_mismatch():
    with pytest.raises(ParameterError):
        evaluate(complete(3), square_realization())


def test_evaluate_edgeless():
    g = graph_from_edges(2, [])
    ev = evaluate(g, Realization(((0.0, 0.0), (0.25, 0.0))))
    assert ev.valid and ev.width == 0.25


def test_feasibilize_identity_and_scaling():
    r = square_realization()
    assert feasibilize(complete(4), r).points == r.points
    small = realization_from_array(np.array(
        [[0.0, 0.0], [0.5, 0.0], [0.25, 0.25 * math.sqrt(3)]]))
    fixed = feasibilize(complete(3), small)
    ev = evaluate(complete(3), fixed)
    assert ev.valid
    assert ev.width == pytest.approx(1.0, abs=1e-9)


def test_feasibilize_perturbed_pentagon():
    rng = np.random.default_rng(2)
    base = known_complete_arrangement(5).array()
    bumped = base + rng.normal(scale=0.004, size=base.shape)
    fixed = feasibilize(complete(5), bumped if isinstance(bumped, Realization)
                        else realization_from_array(bumped))
    ev = evaluate(complete(5), fixed)
    assert ev.valid
    ev0 = evaluate(complete(5), realization_from_array(bumped))
    if ev0.min_edge_distance < 1.0:
        expect = ev0.width / ev0.min_edge_distance
        assert ev.width == pytest.approx(expect, rel=1e-9)


def test_feasibilize_idempotent():
    rng = np.random.default_rng(4)
    for _ in range(10):
        g = random_graph(rng, 8, 0.5)
        if g.m == 0:
            continue
        r = realization_from_array(rng.uniform(0, 2, size=(8, 2)))
        try:
            f1 = feasibilize(g, r)
        except InfeasibleError:
            continue
        f2 = feasibilize(g, f1)
        assert f2.points == f1.points


def test_feasibilize_coincident_adjacent_rejected():
    with pytest.raises(InfeasibleError):
        feasibilize(complete(2), Realization(((1.0, 1.0), (1.0, 1.0))))


def test_known_complete_arrangements():
    widths = {2: 1.0, 3: 1.0, 4: math.sqrt(2), 5: PHI,
              6: 2 * math.sin(0.4 * math.pi), 7: 2.0,
              8: 1.0 / (2 * math.sin(math.pi / 14))}
    for n, expect in widths.items():
        r = known_complete_arrangement(n)
        ev = evaluate(complete(n), r, tol=1e-9)
        assert ev.valid, n
        assert ev.width == pytest.approx(expect, abs=1e-12)
        assert COMPLETE_WIDTH[n] == pytest.approx(expect, abs=1e-15)
    with pytest.raises(ParameterError):
        known_complete_arrangement(9)
    with pytest.raises(ParameterError):
        known_complete_arrangement(1)


def test_known_complete_8_center_distance():
    r = known_complete_arrangement(8)
    pts = r.array()
    center = pts[-1]
    ring = pts[:-1]
    dist = np.linalg.norm(ring - center, axis=1)
    assert np.allclose(dist, 1.0 / (2 * math.sin(math.pi / 7)), atol=1e-12)
    assert dist.min() >= 1.0


def test_lattice_arrangement_small():
    r3 = lattice_complete_arrangement(3)
    w, _ = diameter(r3.array())
    assert w == pytest.approx(1.0, abs=1e-12)
    r7 = lattice_complete_arrangement(7)
    w, _ = diameter(r7.array())
    assert w == pytest.approx(2.0, abs=1e-12)
    assert evaluate(complete(7), r7).valid


def test_lattice_arrangement_n1000():
    r = lattice_complete_arrangement(1000)
    pts = r.array()
    w, _ = diameter(pts)
    ratio = w / math.sqrt(1000)
    # frozen measurement of this construction (asymptote is ~1.0501)
    assert ratio == pytest.approx(1.04499, abs=1e-4)
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
    np.fill_diagonal(d2, 4.0)
    assert math.sqrt(float(d2.min())) >= 1.0 - 1e-12


def test_from_coloring_widths():
    g = cycle(6)
    c = chromatic_number(g).coloring
    assert evaluate(g, from_coloring(g, c)).width == pytest.approx(1.0, abs=1e-12)
    w = odd_wheel(5)
    cw = chromatic_number(w).coloring
    assert cw.k == 4
    assert evaluate(w, from_coloring(w, cw)).width == pytest.approx(
        math.sqrt(2), abs=1e-12)
    k7 = complete(7)
    c7 = coloring_from_list(list(range(7)))
    assert evaluate(k7, from_coloring(k7, c7)).width == pytest.approx(
        2.0, abs=1e-12)


def test_from_coloring_improper_rejected():
    g = complete(3)
    with pytest.raises(CertificateError):
        from_coloring(g, coloring_from_list([0, 0, 1]))


def test_from_coloring_large_k_uses_lattice():
    g = complete(9)
    c = coloring_from_list(list(range(9)))
    r = from_coloring(g, c)
    ev = evaluate(g, r)
    assert ev.valid
    w, _ = diameter(lattice_complete_arrangement(9).array())
    assert ev.width == pytest.approx(w, abs=1e-12)


def test_from_circular_triangle():
    g = complete(3)
    r = from_circular(g, [0.0, 2 * math.pi / 3, 4 * math.pi / 3], 3.0)
    ev = evaluate(g, r)
    assert ev.valid
    # three points on the circle of radius 1/(2 sin(pi/3)) pairwise at
    # exactly unit distance; the guaranteed cap is the circle diameter
    assert ev.width == pytest.approx(1.0, abs=1e-9)
    assert ev.width <= 2 / math.sqrt(3) + 1e-9


def test_from_circular_k2_antipodal():
    r = from_circular(complete(2), [0.0, math.pi], 2.0)
    ev = evaluate(complete(2), r)
    assert ev.valid and ev.width == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(np.linalg.norm(r.array(), axis=1), 0.5)


def test_from_circular_circulant():
    g = circulant(25, 4)
    angles = [2 * math.pi * i / 25 for i in range(25)]
    r = from_circular(g, angles, 25 / 4)
    ev = evaluate(g, r)
    assert ev.valid
    assert ev.width <= 1.0 / math.sin(4 * math.pi / 25) + 1e-9


def test_from_circular_gap_violation():
    with pytest.raises(CertificateError):
        from_circular(complete(3), [0.0, 0.1, 2.0], 3.0)


def test_pullback():
    g = complete(4)
    r = square_realization()
    ident = Homomorphism(g, g, tuple(range(4)))
    assert pullback(ident, r).points == r.points
    # doubly subdivided edge pulled back through x -> v, y -> u
    gp = double_subdivide(g, (0, 1))
    phi = Homomorphism(gp, g, (0, 1, 2, 3, 1, 0))
    rp = pullback(phi, r)
    ev = evaluate(gp, rp)
    assert ev.valid
    assert ev.width <= math.sqrt(2) + 1e-12


def test_pullback_rejects_bad_map():
    g = complete(3)
    phi = Homomorphism(g, g, (0, 0, 1))   # collapses the edge (0, 1)
    with pytest.raises(CertificateError):
        pullback(phi, known_complete_arrangement(3))
    with pytest.raises(ParameterError):
        Homomorphism(g, g, (0, 1, 9))


def test_join_realization_examples():
    seg = Realization(((0.0, 0.0), (1.0, 0.0)))
    r = join_realization(complete(2), complete(2), seg, seg)
    comp = join(complete(2), complete(2))
    ev = evaluate(comp, r)
    assert ev.valid
    assert ev.width <= 3.0 + 1e-9
    # K1 join C5
    k1 = graph_from_edges(1, [])
    c5 = cycle(5)
    rc5 = from_coloring(c5, chromatic_number(c5).coloring)
    w5 = evaluate(c5, rc5).width
    rj = join_realization(k1, c5, Realization(((0.0, 0.0),)), rc5)
    evj = evaluate(join(k1, c5), rj)
    assert evj.valid
    assert evj.width <= w5 + 0.0 + 1.0 + 1e-9


def test_product_realization_square():
    seg_x = Realization(((0.0, 0.0), (1.0, 0.0)))
    seg_y = Realization(((0.0, 0.0), (0.0, 1.0)))
    r = product_realization(complete(2), complete(2), seg_x, seg_y)
    ev = evaluate(cartesian(complete(2), complete(2)), r)
    assert ev.valid
    assert ev.width == pytest.approx(math.sqrt(2), abs=1e-9)


def test_product_preserves_fiber_distances():
    g, h = cycle(5), complete(3)
    rg = from_coloring(g, chromatic_number(g).coloring)
    rh = known_complete_arrangement(3)
    r = product_realization(g, h, rg, rh)
    pg, pr = rg.array(), r.array()
    for x in range(h.n):
        for u in range(g.n):
            for v in range(u + 1, g.n):
                a = pr[u * h.n + x]
                b = pr[v * h.n + x]
                assert np.hypot(*(a - b)) == pytest.approx(
                    float(np.hypot(*(pg[u] - pg[v]))), abs=1e-9)


def test_union_realization_triangles():
    tri = known_complete_arrangement(3)
    r = union_realization(complete(3), complete(3), tri, tri)
    ev = evaluate(disjoint_union(complete(3), complete(3)), r)
    assert ev.valid
    assert ev.width <= 2.0 / math.sqrt(3) + 1e-9


def test_union_with_single_point():
    tri = known_complete_arrangement(3)
    lone = graph_from_edges(1, [])
    r = union_realization(complete(3), lone, tri,
                          Realization(((0.0, 0.0),)))
    ev = evaluate(disjoint_union(complete(3), lone), r)
    assert ev.valid
    assert ev.width <= 1.0 + 1e-9


def test_composition_bounds_random_pairs():
    rng = np.random.default_rng(21)
    for _ in range(25):
        g = random_graph(rng, int(rng.integers(3, 8)), 0.5)
        h = random_graph(rng, int(rng.integers(3, 8)), 0.5)
        rg = from_coloring(g, chromatic_number(g).coloring)
        rh = from_coloring(h, chromatic_number(h).coloring)
        wg = evaluate(g, rg).width
        wh = evaluate(h, rh).width
        rj = join_realization(g, h, rg, rh)
        assert evaluate(join(g, h), rj).valid
        assert evaluate(join(g, h), rj).width <= wg + wh + 1.0 + 1e-9
        rp = product_realization(g, h, rg, rh)
        assert evaluate(cartesian(g, h), rp).valid
        assert evaluate(cartesian(g, h), rp).width <= wg + wh + 1e-9
        ru = union_realization(g, h, rg, rh)
        assert evaluate(disjoint_union(g, h), ru).valid
        bound = max(wg, wh, (wg + wh) / math.sqrt(3))
        assert evaluate(disjoint_union(g, h), ru).width <= bound + 1e-9


def test_low_dim_line():
    g = complete(3)
    c = coloring_from_list([0, 1, 2])
    r = low_dim_realization(g, c, "line")
    assert r.norm.dim == 1
    ev = evaluate(g, r)
    assert ev.valid and ev.width == pytest.approx(2.0, abs=1e-12)


def test_low_dim_linf_grid():
    g = complete(5)
    c = coloring_from_list(list(range(5)))
    r = low_dim_realization(g, c, "linf-grid")
    assert r.norm.p == LINF.p
    ev = evaluate(g, r)
    assert ev.valid
    assert ev.width == pytest.approx(2.0, abs=1e-12)
    assert math.sqrt(5) - 1 <= ev.width < math.sqrt(5)
    g4 = complete(4)
    r4 = low_dim_realization(g4, coloring_from_list(list(range(4))), "linf-grid")
    assert evaluate(g4, r4).width == pytest.approx(1.0, abs=1e-12)


def test_low_dim_improper_rejected():
    with pytest.raises(CertificateError):
        low_dim_realization(complete(2), coloring_from_list([0, 0]), "line")


def test_realization_file_round_trip(tmp_path):
    r = known_complete_arrangement(6)
    path = str(tmp_path / "r.json")
    write_realization(r, path)
    back = read_realization(path)
    assert back.points == r.points
    assert back.norm == r.norm


def test_realization_file_format(tmp_path):
    import json
    r = Realization(((1.0 / 3.0, 0.0), (0.5, 2.0)))
    path = str(tmp_path / "r.json")
    write_realization(r, path)
    with open(path) as fh:
        obj = json.load(fh)
    assert obj["n"] == 2 and obj["dim"] == 2 and obj["norm"] == 2
    assert obj["points"][0][0] == pytest.approx(1.0 / 3.0, abs=0)


def test_realization_file_inf_norm(tmp_path):
    r = Realization(((0.0, 0.0), (1.0, 1.0)), LINF)
    path = str(tmp_path / "r.json")
    write_realization(r, path)
    back = read_realization(path)
    assert back.norm.p == LINF.p
    import json
    with open(path) as fh:
        assert json.load(fh)["norm"] == "inf"
