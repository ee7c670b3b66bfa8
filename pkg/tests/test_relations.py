import pytest

from tiealg.relations import SUITES, Identity, check_suite, identities, tie_slide_as_printed


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("suite", ["relations", "derived", "skein"])
def test_suite_holds(n, suite):
    failed = [str(x) for x, ok in check_suite(n, suite) if not ok]
    assert failed == []


def test_suite_sizes():
    assert len(identities(3, "all")) == 60
    assert len(identities(4, "all")) == 119
    assert sum(len(identities(3, s)) for s in SUITES[:-1]) == 60


def test_unknown_suite():
    with pytest.raises(ValueError):
        identities(3, "nope")


def test_partial_inversions_present():
    names = [x.name for x in identities(3, "derived")]
    assert "inverted tie-transport 1,2 [T1^-1]" in names
    assert "inverted tie-transport 1,2 [T1^-1,T2^-1]" in names


def test_tie_slide_as_printed_fails():
    assert not any(x.holds() for x in tie_slide_as_printed(3))


@pytest.mark.parametrize("lhs,rhs,expected", [
    ("T1 E2", "E2 T1", False),
    ("E1 E2 T2", "E1 T2 E1", True),
    ("T1 T1", "1", False),
    ("E1 T1^-1", "T1^-1 E1", True),
])
def test_single_identities(lhs, rhs, expected):
    assert Identity("x", lhs, rhs, 3).holds() is expected


def test_str():
    assert str(Identity("q", "E1 E1", "E1", 2)) == "q: E1 E1 = E1"
