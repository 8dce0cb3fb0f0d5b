import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=1)
def _corpus():
    from bottwidth.corpus import CorpusConfig, generate_corpus

    return tuple(generate_corpus(CorpusConfig(size=200)))


@pytest.fixture(scope="session")
def corpus():
    return _corpus()
