import json

import pytest

import pathgpd as pg


def test_standard_groupoids():
    bz2 = pg.groupoid("BZ2")
    assert bz2.num_objects == 1
    assert bz2.num_morphisms == 2
    assert bz2.validate() == []
    assert pg.groupoid("discrete:3").num_morphisms == 3
    assert pg.groupoid("indiscrete:2").num_morphisms == 4
    with pytest.raises(ValueError):
        pg.groupoid("nope")


def test_classification():
    bz2 = pg.groupoid("BZ2")
    collapse = pg.to_terminal(bz2)
    assert collapse.classify("fib")
    assert not collapse.classify("we")
    assert collapse.classify("cof")
    assert not collapse.classify("mono")

    i2 = pg.groupoid("indiscrete:2")
    assert pg.to_terminal(i2).classify("trivfib")
    assert pg.to_terminal(i2).classify("hprop")


def test_path_object_and_homotopy():
    bz2 = pg.groupoid("BZ2")
    pb = pg.path_object(bz2)
    assert pb["total"].num_objects == 2
    assert pb["p0"].classify("trivfib")
    assert pb["p1"].classify("trivfib")
    assert pg.maps_equal(pg.compose_maps(pb["p0"], pb["r"]), pg.identity(bz2))

    idm = pg.identity(bz2)
    assert pg.find_homotopy(idm, idm) == [0]


def test_factor_and_truncate():
    bz2 = pg.groupoid("BZ2")
    f = pg.to_terminal(bz2)
    fac = pg.factor(f)
    assert fac["we_part"].classify("we")
    assert fac["fib_part"].classify("fib")

    tr = pg.truncate(f)
    assert tr["truncated"].num_morphisms == 1
    assert not tr["i"].classify("mono")
    assert tr["f_prime"].classify("hprop")


def test_lifting():
    i2 = pg.groupoid("indiscrete:2")
    t = pg.groupoid("terminal")
    d = pg.solve_lifting(
        m=pg.point(i2, 0),
        f=pg.to_terminal(i2),
        top=pg.point(i2, 0),
        bottom=pg.to_terminal(i2),
    )
    assert d is not None
    assert pg.maps_equal(pg.compose_maps(pg.to_terminal(i2), d), pg.to_terminal(i2))
    assert t.num_objects == 1


def test_pullback():
    bz2 = pg.groupoid("BZ2")
    sq = pg.pullback(pg.to_terminal(bz2), pg.to_terminal(bz2))
    assert sq["certified"]
    assert sq["apex"].num_morphisms == 4


def test_reports():
    rep = pg.truncation_mono_check("Z2")
    assert rep["monic"] is False and rep["matches"] is True
    assert pg.truncation_mono_check("1")["monic"] is True

    assert pg.abelian_homogeneity_check("V4")

    s3 = pg.complete_group_check("S3")
    assert s3["verdict"] and s3["automorphisms"] == 6

    suite = pg.run_axiom_suite(seed=1, runs=10)
    assert suite["pass"] and suite["runs"] == 10


def test_json_round_trip():
    bz2 = pg.groupoid("BZ2")
    text = bz2.to_json()
    back = pg.groupoid_from_json(text)
    assert back.validate() == []
    assert json.loads(back.to_json()) == json.loads(text)

    f = pg.identity(bz2)
    g = pg.map_from_json(f.to_json())
    assert pg.maps_equal(f, g)
