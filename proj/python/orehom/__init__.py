from ._core import (
    bridge_verify_ok,
    datum_ok,
    ore_mul_str,
    roundtrip,
    run,
    solve_w_count,
)

__all__ = [
    "bridge_verify_ok",
    "datum_ok",
    "ore_mul_str",
    "roundtrip",
    "run",
    "solve_w_count",
]
