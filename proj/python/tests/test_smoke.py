import json
import os
import pathlib

import pytest

import skewlat

CONFIGS = pathlib.Path(os.environ.get("SKEWLAT_CONFIGS", pathlib.Path(__file__).resolve().parents[2] / "configs"))


def load(name):
    return json.loads((CONFIGS / name).read_text())


def test_tower():
    t = skewlat.Tower(3, precision=16, unramified_degree=2)
    assert (t.e, t.f, t.degree) == (1, 2, 2)
    assert t.residue_size == 9
    assert t.generators == [("frobenius", 2)]
    r = skewlat.Tower(3, ramification=2)
    assert r.residue_size == 9 and r.generators == [("tau", 2)]


def test_unsupported_characteristic():
    with pytest.raises(skewlat.SkewlatError) as err:
        skewlat.Tower(2, ramification=2)
    assert err.value.code == "UnsupportedCharacteristic"
    assert err.value.exit_code == 12


def test_quaternion_pipeline():
    cfg = load("quaternion.json")
    lift = skewlat.run("lift", cfg)
    assert lift["result"]["rank"] == 4
    assert lift["result"]["index"] == "9"
    assert lift["config_hash"] == skewlat.config_hash(cfg)
    assert skewlat.verify(lift)["verified"]
    codes = skewlat.run("codes", cfg)["result"]["codes"]
    assert sorted(c["dimension"] for c in codes) == [0, 1, 1, 1, 1, 2]
    assert all(c["constacyclic"] for c in codes)


def test_division_is_mrd():
    mrd = skewlat.run("mrd", load("division.json"))["result"]
    assert mrd["residue_full"]["min_distance"] == 2
    assert mrd["residue_full"]["singleton"] == {"bound": 4, "dim_L": 4, "is_mrd": True}


def test_csv_and_errors():
    cfg = load("quaternion.json")
    assert len(skewlat.codewords_csv(cfg).splitlines()) == 10
    cfg["code"] = {"generator": "(1, 1) + t"}
    with pytest.raises(skewlat.SkewlatError) as err:
        skewlat.run("lift", cfg)
    assert err.value.code == "NotARightDivisor"
    with pytest.raises(skewlat.SkewlatError):
        skewlat.run("bogus", cfg)
