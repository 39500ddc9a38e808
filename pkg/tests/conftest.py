import random

import pytest
from hypothesis import strategies as st

from pbsg import PartialBijection
from pbsg.sampling import random_generator_set

#: identities exercised by the model-checker acceptance sweep
MODEL_CORPUS = (
    "x1 x2 = x2 x1",
    "x1 = x1 x1",
    "x1 x1^-1 = x1^-1 x1",
    "x1 x1^-1 x1 = x1",
    "x1=x1^2 => x1 x2 = x2 x1",
    "x1=x1^2, x2=x2^2 => x1 x2 = x2 x1",
)


def pb(text: str) -> PartialBijection:
    return PartialBijection.from_text(text)


def ref_compose(a: PartialBijection, b: PartialBijection) -> dict:
    """Pointwise-evaluation composition oracle: apply a, then b, per point."""
    out = {}
    for x in range(a.degree):
        y = a.apply(x)
        if y is None:
            continue
        z = b.apply(y)
        if z is not None:
            out[x] = z
    return out


def as_pairs(a: PartialBijection) -> dict:
    return dict(a.graph())


@st.composite
def partial_bijections(draw, degree=None, max_degree=6):
    n = degree if degree is not None else draw(st.integers(1, max_degree))
    size = draw(st.integers(0, n))
    dom = draw(st.permutations(range(n)))[:size]
    img = draw(st.permutations(range(n)))[:size]
    entries = [None] * n
    for x, y in zip(dom, img):
        entries[x] = y
    return PartialBijection(entries)


@st.composite
def pbij_pairs(draw, max_degree=6):
    n = draw(st.integers(1, max_degree))
    return draw(partial_bijections(degree=n)), draw(partial_bijections(degree=n))


@st.composite
def pbij_triples(draw, max_degree=6):
    n = draw(st.integers(1, max_degree))
    return tuple(draw(partial_bijections(degree=n)) for _ in range(3))


def seeded_generator_sets(seed, count, degrees, max_k=3, inverse_closed=False):
    """Deterministic stream of random generator sets for sweep tests."""
    rng = random.Random(seed)
    sets = []
    for _ in range(count):
        n = rng.choice(degrees)
        k = rng.randint(1, max_k)
        sets.append(random_generator_set(rng, n, k, inverse_closed=inverse_closed))
    return sets


@pytest.fixture
def tmp_json(tmp_path):
    import json

    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write
