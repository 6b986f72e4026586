import pytest

import steinberg as sb


def test_affine_eulerian_small():
    assert sb.eulerian("C", 2) == [0, 4, 4]
    assert sb.eulerian("B", 2) == [0, 4, 4]
    assert sb.eulerian("A", 2) == [0, 3, 3]
    assert sb.eulerian("G2", 2, method="diagram") == [0, 6, 6]


def test_ordinary_eulerian_small():
    assert sb.eulerian("C", 2, statistic="ordinary") == [1, 6, 1]
    assert sb.eulerian("B", 3, statistic="ordinary") == [1, 23, 23, 1]
    assert sb.eulerian("A", 3, statistic="ordinary") == [1, 11, 11, 1]
    assert sb.eulerian("D", 2, statistic="ordinary") == [1, 2, 1]


def test_methods_agree():
    for family, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 3)]:
        enum = sb.eulerian(family, rank)
        assert sb.eulerian(family, rank, method="diagram") == enum
        assert sb.eulerian(family, rank, method="egf") == enum


def test_coefficients_are_exact_ints():
    row = sb.eulerian("E8", 8, method="diagram")
    assert sum(row) == sb.weyl_order("E8", 8) == 696729600
    big = sb.eulerian("A", 20, method="egf", statistic="ordinary")
    assert sum(big) == 51090942171709440000  # 21!


def test_flag_eulerian():
    f = sb.flag_eulerian("C", 2)
    assert f[(0,)] == 1 and f[(2,)] == 2 and f[(0, 1)] == 2
    assert sum(f.values()) == 8
    assert sb.flag_eulerian("C", 2, method="diagram") == f


def test_gamma_and_roots():
    b3 = sb.eulerian("B", 3, method="diagram")
    assert b3 == [0, 10, 28, 10]
    assert sb.is_symmetric(b3, 4)
    assert sb.gamma_vector(b3, 4) == [0, 10, 8]
    assert sb.is_unimodal(b3)
    assert sb.is_real_rooted(b3)
    assert sb.count_real_roots(b3) == 3
    assert not sb.is_real_rooted([1, 1, 1])


def test_egf_extraction():
    assert sb.eulerian_from_egf("BC", 3) == [1, 23, 23, 1]
    assert sb.eulerian_from_egf("affC", 2) == [0, 4, 4]
    with pytest.raises(ValueError):
        sb.eulerian_from_egf("affD", 2)  # convention value, not a group polynomial


def test_torus():
    model = sb.torus("A", 2)
    assert model["euler_characteristic"] == 0
    assert model["flag_h"][(0,)] == 1
    assert model["flag_f"][(0, 1)] == 3
    assert model["face_count"] == 18
    unreduced = sb.torus("A", 2, reduced=False)
    assert unreduced["flag_h"][(0, 1, 2)] == -1


def test_table1():
    rows = sb.table1()
    assert len(rows) == 14
    assert all(row["match"] for row in rows)


def test_invalid_input():
    with pytest.raises(ValueError):
        sb.eulerian("E8", 8)  # enumerate cannot handle exceptional types
    with pytest.raises(ValueError):
        sb.eulerian("Z", 3)
