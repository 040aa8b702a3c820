import pytest

from homchord import build_complex
from homchord.corpus import standard_corpus


def cx_of(facets, labels=None):
    """Build a complex from facet strings like "abc" or label lists."""
    facets = [list(f) if isinstance(f, str) else list(f) for f in facets]
    if labels is None:
        labels = []
        for f in facets:
            for x in f:
                if x not in labels:
                    labels.append(x)
    return build_complex(labels, facets)


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


# flag_dunce has 49 vertices: beyond a full subset scan
SCANNABLE = [
    "simplex_3", "simplex_skeleton_4_1", "simplex_boundary_3", "cycle_4", "cycle_5", "jk_1",
    "jk_2", "octahedron", "cone_square", "woodroofe_join", "glued_tetra_boundaries", "rp2_6",
    "dunce8",
]


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
