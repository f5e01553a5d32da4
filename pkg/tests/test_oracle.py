import math
import random

import pytest

from equidiff.oracle import (
    CALIBRATION_BATTERY,
    CalibrationError,
    SuperellipticData,
    calibrate,
    matching_directions,
    oracle_dims,
    superelliptic_genus,
    to_cover_spec,
)
from equidiff.coverspec import genus_normalization, validate


def test_genus_two_hyperelliptic():
    data = SuperellipticData.from_exponents(2, [1] * 6)
    assert superelliptic_genus(data) == 2
    assert oracle_dims(data) == {0: 0, 1: 2}


def test_rational_double_cover():
    data = SuperellipticData.from_exponents(2, [1, 1])
    assert superelliptic_genus(data) == 0
    assert oracle_dims(data) == {0: 0, 1: 0}


def test_trigonal_genus_three():
    data = SuperellipticData.from_exponents(3, [1, 1, 1, 1])
    assert superelliptic_genus(data) == 3
    assert sum(oracle_dims(data).values()) == 3
    assert len(matching_directions(data)) == 1


def test_directions_coincide_for_involutions():
    data = SuperellipticData.from_exponents(2, [1] * 8)
    assert matching_directions(data) == ["forward", "inverse"]


def test_calibration():
    assert calibrate() == "forward"
    matches = [matching_directions(data) for data in CALIBRATION_BATTERY]
    assert all("forward" in m for m in matches)
    assert any("inverse" not in m for m in matches)


def test_calibration_fails_without_common_direction(monkeypatch):
    import equidiff.oracle as oracle
    monkeypatch.setattr(oracle, "matching_directions", lambda data: [])
    with pytest.raises(CalibrationError):
        oracle.calibrate()


def test_bad_data():
    with pytest.raises(ValueError):
        SuperellipticData.from_exponents(4, [2, 2])
    with pytest.raises(ValueError):
        SuperellipticData.from_exponents(3, [3])
    with pytest.raises(ValueError):
        SuperellipticData.from_exponents(1, [])


@pytest.mark.parametrize("e", [2, 3, 4, 5, 6, 7, 8])
def test_cover_spec_and_genus_agree(e):
    rng = random.Random(e)
    checked = 0
    while checked < 25:
        exps = [rng.randrange(1, e) for _ in range(rng.randint(1, 6))]
        if math.gcd(e, *exps) != 1:
            continue
        data = SuperellipticData.from_exponents(e, exps)
        spec = to_cover_spec(data)
        assert validate(spec) == []
        assert genus_normalization(spec) == superelliptic_genus(data)
        assert sum(oracle_dims(data).values()) == superelliptic_genus(data)
        assert "forward" in matching_directions(data)
        checked += 1
