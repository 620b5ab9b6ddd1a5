import os
import shutil

import hypothesis
import numpy as np
import pytest

from lexicon import VerifiedEdge

hypothesis.settings.register_profile("fast", max_examples=5)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def pipeline_dir(tmp_path):
    """A writable copy of the 30-term pipeline fixture."""
    target = tmp_path / "pipeline"
    shutil.copytree(os.path.join(FIXTURES, "pipeline"), target)
    return target


def edges_from(pairs):
    """[(a, b, confidence), ...] -> VerifiedEdges"""
    return [VerifiedEdge(a, b, confidence) for a, b, confidence in pairs]
