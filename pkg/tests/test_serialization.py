"""
Tests for JSON encoding, input parsers and validators
"""

from fractions import Fraction

import pytest
from sympy import ImmutableMatrix, Rational

from k3lat.exceptions import K3LatValidationError
from k3lat.models.mukai import MukaiVector
from k3lat.utils.serialization import (
    canonical_json,
    parse_isometry,
    parse_lattice,
    parse_mukai_vector,
    parse_rows,
    parse_vector,
    to_jsonable,
)
from k3lat.utils.validators import (
    ensure_valid,
    validate_partition,
    validate_positive_int,
    validate_rows,
    validate_series_name,
)


class TestToJsonable:
    """Test exact conversion to JSON types"""

    def test_rationals(self):
        """Test non-integral rationals become p/q strings"""
        assert to_jsonable(Rational(1, 12)) == "1/12"
        assert to_jsonable(Rational(-3, 6)) == "-1/2"
        assert to_jsonable(Fraction(4, 2)) == 2

    def test_big_integers(self):
        """Test integers beyond 2^53 become strings"""
        assert to_jsonable(2**53 - 1) == 2**53 - 1
        assert to_jsonable(2**53) == str(2**53)
        assert to_jsonable(Rational(2**60)) == str(2**60)

    def test_matrices_and_models(self):
        """Test matrices and models with to_dict"""
        assert to_jsonable(ImmutableMatrix([[1, Rational(1, 2)]])) == [[1, "1/2"]]
        assert to_jsonable(MukaiVector(2, (1,), 2)) == {"r": 2, "c1": [1], "s": 2}

    def test_floats_rejected(self):
        """Floats have no exact encoding"""
        with pytest.raises(TypeError):
            to_jsonable(0.5)

    def test_canonical_json(self):
        """Test sorted keys and compact separators"""
        assert canonical_json({"b": [1, 2], "a": Rational(1, 3)}) == '{"a":"1/3","b":[1,2]}'


class TestParsers:
    """Test CLI input parsers"""

    def test_parse_lattice_forms(self):
        """Test names, Gram lists and objects"""
        assert parse_lattice("U").rank == 2
        assert parse_lattice("[[8]]").gram.tolist() == [[8]]
        assert parse_lattice({"rank": 1, "gram": [[2]]}).gram.tolist() == [[2]]

    def test_parse_lattice_rank_mismatch(self):
        """Test declared rank must match the Gram matrix"""
        with pytest.raises(K3LatValidationError, match="rank"):
            parse_lattice({"rank": 2, "gram": [[2]]})

    def test_parse_lattice_garbage(self):
        """Test unreadable lattice specs"""
        with pytest.raises(K3LatValidationError):
            parse_lattice(42)

    def test_parse_vector(self):
        """Test comma lists and JSON lists"""
        assert parse_vector("1, -2,3") == [1, -2, 3]
        assert parse_vector('["1/2", 0]') == ["1/2", 0]

    def test_parse_rows(self):
        """Test rows must be a list of lists"""
        assert parse_rows("[[1,2]]") == [[1, 2]]
        with pytest.raises(K3LatValidationError, match="list of rows"):
            parse_rows("[1,2]")

    def test_parse_mukai_vector(self):
        """Test the three accepted forms"""
        expected = MukaiVector(2, (1,), 2)
        assert parse_mukai_vector("2,[1],2") == expected
        assert parse_mukai_vector([2, [1], 2]) == expected
        assert parse_mukai_vector({"r": 2, "c1": [1], "s": 2}) == expected
        with pytest.raises(K3LatValidationError):
            parse_mukai_vector("2,1,2")

    def test_parse_isometry(self):
        """Test rational matrices from strings"""
        iso = parse_isometry('{"source": "rank1:2", "target": "rank1:8", "matrix": [["1/2"]]}')
        assert iso.matrix[0, 0] == Rational(1, 2)

    def test_parse_isometry_missing_key(self):
        """Test missing keys are a usage error"""
        with pytest.raises(K3LatValidationError, match="Bad isometry"):
            parse_isometry({"source": "U"})


class TestValidators:
    """Test validation helpers"""

    def test_positive_int(self):
        """Test positivity and integrality"""
        validate_positive_int(3, "k")
        with pytest.raises(ValueError, match="k must be >= 1"):
            validate_positive_int(0, "k")
        with pytest.raises(ValueError, match="integer"):
            validate_positive_int(True, "k")

    def test_rows(self):
        """Test rectangular integer rows"""
        validate_rows([[1, 2], [3, 4]])
        with pytest.raises(ValueError, match="not rectangular"):
            validate_rows([[1, 2], [3]])

    def test_series_name(self):
        """Test series names"""
        validate_series_name("X3k")
        with pytest.raises(ValueError, match="Unknown series"):
            validate_series_name("X9")

    def test_partition(self):
        """Test padding and ordering"""
        assert validate_partition([2]) == [2, 0]
        assert validate_partition([1, 1]) == [1, 1]
        with pytest.raises(ValueError, match="non-increasing"):
            validate_partition([0, 1])
        with pytest.raises(ValueError, match="more than"):
            validate_partition([1, 1, 1])

    def test_ensure_valid(self):
        """Test ValueError becomes K3LatValidationError"""

        class Broken:
            def validate(self):
                raise ValueError("bad model")

        with pytest.raises(K3LatValidationError, match="bad model"):
            ensure_valid(Broken())
