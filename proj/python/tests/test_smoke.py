from fractions import Fraction

import pytest

import rotrng


def unpack(data, nbits):
    return [(data[i // 8] >> (i % 8)) & 1 for i in range(nbits)]


def test_generate_is_deterministic():
    params = rotrng.TrngParams()
    a = rotrng.generate(params, rotrng.JitterModel.calibrated(3), 4096)
    b = rotrng.generate(params, rotrng.JitterModel.calibrated(3), 4096)
    assert a == b
    assert len(a) == 512
    assert rotrng.generate(params, rotrng.JitterModel.calibrated(3), 0) == b""


def test_battery_separates_good_and_bad_streams():
    good = rotrng.generate(rotrng.TrngParams(), rotrng.JitterModel.calibrated(1), 1_000_000)
    report = rotrng.battery(good)
    assert report["passed"]
    assert report["reliable"]
    assert len(report["tests"]) == 9
    assert not rotrng.battery(bytes(125_000))["passed"]


def test_resilience_xor():
    data, nbits = rotrng.resilience_xor(bytes([0b1101]), 4, 1)
    assert nbits == 2
    assert unpack(data, nbits) == [1, 0]


def test_estimators():
    assert rotrng.throughput("50e6", 0, 2) == 12_500_000
    assert rotrng.throughput(50_000_000, 5, 3) == Fraction(390_625, 2)
    total, terms = rotrng.clb_count(rotrng.TrngParams(n=20, l=3, d=0, r=2))
    assert total == Fraction(29, 2)
    assert sum(terms.values()) == total
    rows = rotrng.table1()
    assert [row["kbps"] for row in rows] == [12500, 6250, 3125, Fraction(3125, 16)]
    with pytest.raises(ValueError):
        rotrng.throughput("0", 0, 0)


def test_capture_round_trip():
    params = rotrng.TrngParams()
    model = rotrng.JitterModel.calibrated(5)
    data, trace = rotrng.capture(params, model, 2048, framed=True)
    assert data == rotrng.generate(params, model, 16384)
    assert rotrng.uart_deframe(trace) == data


def test_fsm_step():
    assert rotrng.fsm_step("Idle")[0] == "PrepareFillRAM"
    state, outputs = rotrng.fsm_step("UARTSend", {"addr_zero": True})
    assert state == "PrepareFillRAM"
    assert not any(outputs.values())


def test_invalid_parameters_raise():
    with pytest.raises(ValueError):
        rotrng.TrngParams(n=0)
