from __future__ import annotations

import pytest

from doublejoin.graph import family

SWEEP = [("K3", "P2", "P3"), ("C4", "K2", "P3"), ("K4", "P2", "K2"), ("petersen", "P2", "C4")]
REDUCED = [("K3", "P2", "null0"), ("K4", "null0", "P3")]
VARIANTS = ["S", "Q", "R", "T"]


def graphs(*names):
    return tuple(family(n) for n in names)


@pytest.fixture(params=[(v, *case) for v in VARIANTS for case in SWEEP], ids=lambda p: "-".join(p))
def sweep_case(request):
    variant, *names = request.param
    return variant, graphs(*names)
