from itertools import product

import pytest

from glweights import (
    BState,
    CasimirPoly,
    Diagram,
    InvalidDiagramError,
    PontNeufParams,
    StateCapError,
    ZeroWeightError,
    gl_weight,
    gl_weight_top,
    gl_weight_top_fast,
    pont_neuf,
    pont_neuf_cd_closed_form,
    poly_to_json,
    proper_vertices,
    trace_surface,
    wheel,
    wheel_closed_form,
)
from oracles import dumbbell, h_diagram, k4, naive_gl_weight, strut, theta_manual


def test_wheel_closed_forms():
    for u in (2, 4, 6):
        assert gl_weight(wheel(u)) == wheel_closed_form(u)
    assert gl_weight(wheel(2)) == CasimirPoly({(0, 2): 2, (1, 1): -2})


def test_odd_wheels_vanish():
    for u in (1, 3, 5):
        assert gl_weight(wheel(u)).is_zero


def test_fast_sum_agrees_with_reference_tracer():
    for diagram in (strut(), theta_manual(), dumbbell(), h_diagram(), k4(), wheel(3), wheel(4),
                    pont_neuf(PontNeufParams((0,), 1)), pont_neuf(PontNeufParams((1, 1), 1))):
        assert gl_weight(diagram) == naive_gl_weight(diagram)


def test_index_sum_and_factor_count_laws():
    samples = [wheel(4), pont_neuf(PontNeufParams((0,), 2)), pont_neuf(PontNeufParams((1, 1), 1)), h_diagram()]
    for diagram in samples:
        n, u = diagram.degree, diagram.num_univalent
        weight = gl_weight(diagram)
        for mono, _ in weight.items():
            assert sum(mono) == u
            assert (n - u + 2 - len(mono)) % 2 == 0
            assert len(mono) <= n - u + 2


def test_per_state_factor_count_matches_genus():
    diagram = pont_neuf(PontNeufParams((1, 1), 1))
    n, u = diagram.degree, diagram.num_univalent
    for signs in product((1, -1), repeat=diagram.num_trivalent):
        trace = trace_surface(diagram, BState(signs))
        assert trace.face_count == n - u + 2 - 2 * trace.genus


def test_conjugation_pairing():
    # even trivalent count: conjugate states contribute with equal signs,
    # odd: with opposite signs
    even = wheel(4)
    for signs in product((1, -1), repeat=4):
        s = BState(signs)
        assert (-1) ** s.weight == (-1) ** s.conjugate().weight
    odd = wheel(3)
    for signs in product((1, -1), repeat=3):
        s = BState(signs)
        assert (-1) ** s.weight == -((-1) ** s.conjugate().weight)
    assert gl_weight(odd).is_zero
    assert not gl_weight(even).is_zero


def test_gl_weight_top_errors_on_zero():
    with pytest.raises(ZeroWeightError):
        gl_weight_top(wheel(3))


def test_state_cap_refusal():
    with pytest.raises(StateCapError):
        gl_weight(wheel(6), state_cap=5)
    # the refusal names both the need and the cap
    try:
        gl_weight(wheel(6), state_cap=5)
    except StateCapError as exc:
        assert exc.needed == 6 and exc.cap == 5
    assert gl_weight(wheel(6), state_cap=6) == wheel_closed_form(6)


def test_invalid_diagram_rejected():
    dangling = Diagram(4, ((0, 1),), (), (0, 1, 2, 3))
    with pytest.raises(InvalidDiagramError):
        gl_weight(dangling)
    disconnected = Diagram(4, ((0, 1), (2, 3)), (), (0, 1, 2, 3))
    with pytest.raises(InvalidDiagramError):
        gl_weight(disconnected)


def test_proper_vertex_detection():
    assert proper_vertices(wheel(4)) == ()
    theta_legs = pont_neuf(PontNeufParams((0,), 1))
    assert len(proper_vertices(theta_legs)) == 2
    assert len(proper_vertices(dumbbell())) == 2
    assert proper_vertices(h_diagram()) == ()


def test_fast_top_requires_proper_vertices():
    with pytest.raises(ValueError, match="proper"):
        gl_weight_top_fast(wheel(4))


def test_fast_top_agrees_on_bridges():
    for params in (PontNeufParams((0,), 1), PontNeufParams((1, 1), 2), PontNeufParams((0, 0), 2)):
        d = pont_neuf(params)
        assert gl_weight_top_fast(d) == gl_weight_top(d) == pont_neuf_cd_closed_form(params)


def test_empty_state_space():
    assert gl_weight(strut()) == CasimirPoly({(2,): 1})


def test_jobs_do_not_change_the_result():
    params = PontNeufParams((2,), 2)
    d = pont_neuf(params)
    serial = gl_weight(d, jobs=1)
    for jobs in (2, 3, 8):
        assert gl_weight(d, jobs=jobs) == serial
        assert poly_to_json(gl_weight(d, jobs=jobs)) == poly_to_json(serial)


def test_parallel_path_is_exercised_even_for_small_sums():
    # force the chunked path by exceeding the serial-size threshold
    d = pont_neuf(PontNeufParams((0, 0, 0), 4))  # 14 trivalent vertices
    assert gl_weight(d, jobs=2) == gl_weight(d, jobs=1)
