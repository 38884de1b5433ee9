import pytest

from bigraft.forests import parse


@pytest.fixture
def verdict(capsys):
    """Print a one-line PASS/FAIL verdict past pytest's capture."""
    def _verdict(n, ok, detail=""):
        with capsys.disabled():
            print("\ncriterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail))
        return ok
    return _verdict


def P(text):
    return parse(text)
