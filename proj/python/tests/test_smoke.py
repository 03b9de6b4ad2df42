import pytest

import tsc


def test_build_f_summand_counts():
    assert len(tsc.build_f(2)["summands"]) == 4
    assert len(tsc.build_f(4)["summands"]) == 32
    with pytest.raises(ValueError):
        tsc.build_f(1)


def test_round_trip_d2():
    for backend in ("sign", "hecke", "bimodule"):
        cert = tsc.verify_complex(tsc.build_f(3, backend))
        assert cert.verdict, cert.failure()


def test_suites():
    for cert in tsc.run_suite("d2", 3):
        assert cert, cert.failure()
    (cert,) = tsc.run_suite("ge-props", seed=1, cases=50)
    assert cert.verdict


def test_hecke_queries():
    assert tsc.hecke(2, "b1*b1") == "(v+v^-1) b1"
    assert tsc.flatten(3, "w") == "f1 f2"
    assert tsc.is_smooth(3, "0 1 0")
    with pytest.raises(ValueError, match="position"):
        tsc.hecke(2, "b1*(")


def test_preferred_word():
    assert tsc.preferred_word(4, [0, 1]) == [1, 0]
