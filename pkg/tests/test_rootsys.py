"""ADE catalog data: Cartan matrices, exponents, colorings, join arithmetic."""

from __future__ import annotations

import math

import numpy as np
import pytest

from coxlat.intmat import det_exact, is_symmetric
from coxlat.rootsys import (
    CATALOG_IDS,
    RootSystemId,
    bipartition,
    cartan_matrix,
    dynkin_edges,
    exponents,
    join_exponent_arithmetic,
    root_system,
)


def test_parse_and_str():
    assert str(RootSystemId.parse("e8")) == "E8"
    assert RootSystemId.parse("A1").rank == 1
    assert RootSystemId.parse("d4").family == "D"


@pytest.mark.parametrize("bad", ["Q5", "D3", "E9", "E5", "A0", "A", "8E", ""])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        RootSystemId.parse(bad)


def test_catalog_contents():
    names = [str(rid) for rid in CATALOG_IDS]
    assert names == [
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
        "D4", "D5", "D6", "D7", "D8",
        "E6", "E7", "E8",
    ]


def test_cartan_a3_explicit():
    A = cartan_matrix(RootSystemId.parse("A3"))
    assert A.tolist() == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


def test_e8_edges():
    assert dynkin_edges(RootSystemId.parse("E8")) == [
        (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4),
    ]


def test_d4_edges():
    assert dynkin_edges(RootSystemId.parse("D4")) == [(1, 2), (2, 3), (2, 4)]


@pytest.mark.parametrize("rid", CATALOG_IDS, ids=str)
def test_cartan_well_formed(rid):
    A = cartan_matrix(rid)
    assert is_symmetric(A)
    assert all(A[i, i] == 2 for i in range(rid.rank))
    offdiag = [A[i, j] for i in range(rid.rank) for j in range(rid.rank) if i != j]
    assert set(map(int, offdiag)) <= {0, -1}
    assert det_exact(A) > 0  # positive definite on the catalog


@pytest.mark.parametrize(
    "name,h,exps",
    [
        ("A1", 2, [1]),
        ("A4", 5, [1, 2, 3, 4]),
        ("D4", 6, [1, 3, 3, 5]),
        ("D5", 8, [1, 3, 4, 5, 7]),
        ("E6", 12, [1, 4, 5, 7, 8, 11]),
        ("E7", 18, [1, 5, 7, 9, 11, 13, 17]),
        ("E8", 30, [1, 7, 11, 13, 17, 19, 23, 29]),
    ],
)
def test_exponent_tables(name, h, exps):
    got_h, got = exponents(RootSystemId.parse(name))
    assert (got_h, got) == (h, exps)


@pytest.mark.parametrize("rid", CATALOG_IDS, ids=str)
def test_exponents_match_cartan_spectrum(rid):
    # lambda_k = 4 sin^2(k*pi/2h) over the exponents, against numpy's eigvalsh
    h, exps = exponents(rid)
    assert len(exps) == rid.rank
    assert sum(exps) == rid.rank * h // 2
    lams = np.linalg.eigvalsh(np.array(cartan_matrix(rid), dtype=float))
    predicted = np.array([4 * math.sin(k * math.pi / (2 * h)) ** 2 for k in exps])
    assert np.max(np.abs(np.sort(lams) - predicted)) < 1e-12


@pytest.mark.parametrize("rid", CATALOG_IDS, ids=str)
def test_bipartition_proper(rid):
    coloring = bipartition(rid)
    assert coloring[1] == "white"
    assert set(coloring) == set(range(1, rid.rank + 1))
    for i, j in dynkin_edges(rid):
        assert coloring[i] != coloring[j]


def test_root_system_record():
    data = root_system(RootSystemId.parse("E6"))
    assert data.rank == 6
    assert data.h == 12
    assert data.coloring == bipartition(data.id)


def test_join_exponent_arithmetic_e8():
    ids = [RootSystemId.parse(s) for s in ("A4", "A2", "A1")]
    h, exps = join_exponent_arithmetic(ids)
    assert h == 30
    assert exps == [1, 7, 11, 13, 17, 19, 23, 29]


def test_join_exponent_arithmetic_e6():
    ids = [RootSystemId.parse(s) for s in ("A3", "A2", "A1")]
    h, exps = join_exponent_arithmetic(ids)
    assert h == 12
    assert exps == [1, 4, 5, 7, 8, 11]
