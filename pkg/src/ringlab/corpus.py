"""Named ring-expression corpora for sweeps and verification runs.

The default corpus covers reduced and non-reduced, local and non-local,
decomposable and indecomposable finite rings at desk scale (orders up to
144): cyclic rings, products of two cyclic rings, truncated polynomial
rings, and idealizations of cyclic modules.
"""

from __future__ import annotations

from ringlab.structural import ModuleExpr, PolyTrunc, Product, TrivExt, Zn


def zn_range(lo: int, hi: int) -> list:
    return [Zn(n) for n in range(lo, hi + 1)]


def trivext_grid(max_n: int = 9) -> list:
    out = []
    for n in range(2, max_n + 1):
        for m in range(1, max_n + 1):
            if n % m == 0:
                out.append(TrivExt(Zn(n), ModuleExpr((("cyclic", m),))))
    return out


def default_corpus() -> list:
    out: list = []
    out.extend(zn_range(2, 64))
    for a in range(2, 13):
        for b in range(2, 13):
            out.append(Product((Zn(a), Zn(b))))
    for m in (2, 3, 4):
        for k in (2, 3):
            out.append(PolyTrunc(Zn(m), k))
    out.extend(trivext_grid(9))
    return out


CORPORA = {
    "default": default_corpus,
    "trivext-small": trivext_grid,
}


def corpus_by_name(name: str) -> list:
    try:
        return CORPORA[name]()
    except KeyError:
        raise ValueError(
            f"unknown corpus {name!r}; available: {', '.join(sorted(CORPORA))}"
        ) from None
