from pathlib import Path

import pytest

from eigencount import materialize, regression_corpus

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def corpus():
    return regression_corpus(seed=0)


@pytest.fixture(scope="session")
def spec_path():
    return ROOT / "specs" / "shift_rank_one.json"


@pytest.fixture(scope="session")
def materialized(corpus):
    """Corpus models as (entry, l0, k) triples, materialized once."""
    out = []
    for entry in corpus:
        l0, k = materialize(entry.model)
        out.append((entry, l0, k))
    return out
