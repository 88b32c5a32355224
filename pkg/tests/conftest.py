import pytest
from hypothesis import settings

from sylvmon.trees import parse_tree

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SINGLE = "(. * .)"
LEFT2 = "((. * .) * .)"
RIGHT2 = "(. * (. * .))"
BALANCED3 = "((. * .) * (. * .))"
LEFT3 = "(((. * .) * .) * .)"
TREE231 = "(. * ((. * .) * .))"
RIGHT3 = "(. * (. * (. * .)))"


@pytest.fixture
def shape():
    return parse_tree
