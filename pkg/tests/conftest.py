import random

from rrsim.workloads import (
    ALL_ZERO,
    ASCENDING,
    DESCENDING,
    RANDOM,
    STAGGERED,
    GeneratorSpec,
    generate_workload,
)

ORDERS = (ASCENDING, DESCENDING, RANDOM)


def seeded_workload(seed: int, max_n: int = 12, max_burst: int = 200):
    """Small random workload, deterministic in ``seed``.

    Mixes sizes, burst ranges, orders and arrival patterns so fuzz suites
    exercise idle gaps, mid-cycle arrivals and burst ties.
    """
    rng = random.Random((seed * 0x9E3779B9) & 0xFFFFFFFF)
    staggered = rng.random() < 0.5
    spec = GeneratorSpec(
        n=rng.randint(1, max_n),
        burst_min=1,
        burst_max=rng.randint(1, max_burst),
        order=ORDERS[rng.randrange(3)],
        arrival=STAGGERED if staggered else ALL_ZERO,
        max_gap=rng.randint(0, 50) if staggered else 0,
        seed=seed,
    )
    return generate_workload(spec)
