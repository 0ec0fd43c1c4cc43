"""Ring-oscillator TRNG simulator with a capture harness and test battery.

Bit streams cross the boundary as ``bytes`` packed LSB-first (bit i is bit
i % 8 of byte i // 8). Exact quantities are returned as ``Fraction``.
"""

from fractions import Fraction

from . import _rotrng
from ._rotrng import (
    CaptureUnderrun,
    JitterModel,
    TrngParams,
    battery,
    capture,
    fsm_step,
    generate,
    multi_sampler_generate,
    resilience_xor,
    uart_deframe,
)

__all__ = [
    "CaptureUnderrun",
    "JitterModel",
    "TrngParams",
    "battery",
    "capture",
    "clb_count",
    "fsm_step",
    "generate",
    "multi_sampler_generate",
    "resilience_xor",
    "table1",
    "throughput",
    "uart_deframe",
]


def _fraction(pair):
    return Fraction(*pair)


def throughput(f_hz="50e6", d=0, r=2):
    """Output rate in bits per second, f / 2^(d + r)."""
    return _fraction(_rotrng.throughput(str(f_hz), d, r))


def clb_count(params):
    """CLB estimate and its per-term breakdown."""
    total, terms = _rotrng.clb_count(params)
    return _fraction(total), {name: _fraction(value) for name, value in terms}


def table1(f_hz="50e6"):
    """The recommended parameter rows with throughput in Kbps."""
    return [
        {"d": d, "r": r, "n": n, "l": l, "kbps": _fraction(kbps)}
        for d, r, n, l, kbps in _rotrng.table1(str(f_hz))
    ]
