import pytest

from ringlab import corpus, structural


@pytest.fixture(scope="session")
def default_exprs():
    return corpus.default_corpus()


@pytest.fixture(scope="session")
def default_rings(default_exprs):
    """Every default-corpus ring, realized once and shared across the session."""
    rings = []
    for expr in default_exprs:
        ring = structural.realize_finite(expr)
        assert ring is not None, f"default corpus entry {expr} must realize"
        rings.append((expr, ring))
    return rings


@pytest.fixture(scope="session")
def small_rings(default_rings):
    """Corpus rings of order <= 32 (the lemma-suite domain)."""
    return [ring for _, ring in default_rings if ring.order <= 32]


@pytest.fixture(scope="session")
def tiny_rings(default_rings):
    """Corpus rings of order <= 16 (the polynomial-sweep domain)."""
    return [ring for _, ring in default_rings if ring.order <= 16]
