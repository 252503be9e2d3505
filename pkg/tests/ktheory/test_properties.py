import pytest

from app.exceptions import InvalidInputError
from app.ktheory.monoid import monoid_presentation
from app.ktheory.properties import discover_checks, monoid_property_search
from app.models import Verdict
from monoid_checks.refinement import RefinementCheck
from monoid_checks.separative import SeparativeCheck


def test_discover_checks():
    checks = discover_checks()
    assert checks == {"refinement": RefinementCheck, "separative": SeparativeCheck}


def test_refinement_fails(load_graph):
    p = monoid_presentation(load_graph("monoid_e1"))
    result = monoid_property_search(p, "refinement", 12)
    assert result.verdict is Verdict.FALSE
    assert result.witness == {"x1": "u", "x2": "u", "y1": "t", "y2": "b"}
    assert result.bound == 12


@pytest.mark.parametrize("prop", ["refinement", "separative"])
def test_properties_hold_up_to_bound(load_graph, prop):
    p = monoid_presentation(load_graph("monoid_e2"))
    result = monoid_property_search(p, prop, 8)
    assert result.verdict is Verdict.TRUE
    assert result.witness == {}
    assert "up to 8" in result.note


def test_separativity_fails(load_graph):
    p = monoid_presentation(load_graph("monoid_e3"))
    result = monoid_property_search(p, "separative", 12)
    assert result.verdict is Verdict.FALSE
    assert result.witness == {"x": "v", "y": "3v", "z": "v"}


def test_default_bound(load_graph):
    p = monoid_presentation(load_graph("monoid_e3"))
    assert monoid_property_search(p, "separative").bound == 12


def test_search_errors(load_graph):
    p = monoid_presentation(load_graph("monoid_e1"))
    with pytest.raises(InvalidInputError, match="Unknown monoid property 'cancellative'"):
        monoid_property_search(p, "cancellative", 4)
    with pytest.raises(InvalidInputError, match="at least 1"):
        monoid_property_search(p, "refinement", 0)
