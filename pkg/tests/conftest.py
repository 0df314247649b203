import pytest

import beckpairs as bp

# Every catalog instance exercised by the identity and totality sweeps.
CATALOG_INSTANCES = [
    ("classical", dict(r=2)),
    ("schur", {}),
    ("gollnitz", {}),
    ("qf-x2+2y2", {}),
    ("qf-x2+xy+y2", {}),
    ("example-odd-mod6", {}),
    ("family-v", dict(r=3)),
    ("family-vi", dict(r=3)),
    ("family-vii", dict(r=2)),
    ("family-vii", dict(r=4)),
    ("family-viii", dict(p=7, r=2)),
]


def instance_label(inst):
    name, kw = inst
    if not kw:
        return name
    return name + "(" + ",".join(f"{k}={v}" for k, v in sorted(kw.items())) + ")"


@pytest.fixture(scope="session")
def example_pair():
    """Order-3 pair with S1 the odd numbers (S2 = +-1 mod 6)."""
    return bp.builtin_pair("example-odd-mod6")


@pytest.fixture(scope="session")
def vii4_pair():
    """Order-4 pair with S1 the numbers not divisible by 5."""
    return bp.builtin_pair("family-vii", r=4)


@pytest.fixture(scope="session")
def catalog_pairs():
    return [(instance_label(inst), bp.builtin_pair(inst[0], **inst[1]))
            for inst in CATALOG_INSTANCES]
