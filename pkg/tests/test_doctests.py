import doctest

from weylkit import cartan, intmat, pushforward, schemas


def test_doctests():
    for module in (cartan, pushforward, intmat, schemas):
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
