"""Approximate triangulations of Grassmann manifolds via persistent homology."""

from ._grasstri import (  # noqa: F401
    Filtration,
    GrasstriError,
    ResourceLimit,
    barcodes,
    betti_at,
    betti_mod2,
    cell_dimension,
    matching_windows,
    run_pipeline,
    sample,
    schubert_symbols,
    vietoris_rips,
    witness,
)


def pipeline(**fields):
    """Run an experiment from keyword fields, e.g. pipeline(space="rp2-r4", points=200)."""
    text = "".join(f"{key} = {value}\n" for key, value in fields.items())
    return run_pipeline(text)
