"""JSON file format tests."""
import json

import pytest

from hjj.domain.linalg.entities import Matrix
from hjj.infrastructure.files.errors import ConflictingProduct, ParseError
from hjj.infrastructure.files.loaders import (
    bilinear_from_sparse,
    dump_algebra,
    load_algebra,
    load_form,
    load_operator,
    load_representation,
    load_series,
    map_series_from_document,
    product_series_from_document,
)
from tests import factories
from tests.factories import FIXTURES, mat, vec


@pytest.fixture
def write_json(tmp_path):
    """Write a document to a temporary file and return its path."""

    def write(data: object, name: str = "doc.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write


ALG2_DOC = {
    "basis": ["e1", "e2"],
    "alpha": [[1, 0], [1, 1]],
    "products": [{"left": "e1", "right": "e1", "value": {"e2": 1}}],
}


# ==========================================
# Algebras
# ==========================================

class TestLoadAlgebra:
    """Algebra documents."""

    @pytest.mark.parametrize("name", ["alg2", "alg3", "abel1", "point1"])
    def test_fixtures(self, name):
        """Every fixture file matches its builder."""
        assert load_algebra(FIXTURES / f"{name}.json") == getattr(factories, name)()

    def test_products_symmetrized(self, write_json):
        """Listing e2 * e1 also sets e1 * e2."""
        doc = {**ALG2_DOC, "products": [{"left": "e2", "right": "e1", "value": {"e1": "1/2"}}]}
        a = load_algebra(write_json(doc))
        assert a.c[0][1] == a.c[1][0] == vec("1/2", 0)

    def test_repeated_equal_product(self, write_json):
        """The same pair may be listed twice with the same value."""
        doc = {**ALG2_DOC, "products": ALG2_DOC["products"] * 2}
        assert load_algebra(write_json(doc)) == factories.alg2()

    def test_conflicting_product(self, write_json):
        """x * y and y * x with different values are rejected."""
        doc = {
            **ALG2_DOC,
            "products": [
                {"left": "e1", "right": "e2", "value": {"e2": 1}},
                {"left": "e2", "right": "e1", "value": {"e1": 1}},
            ],
        }
        with pytest.raises(ConflictingProduct) as exc:
            load_algebra(write_json(doc))
        assert exc.value.status_code == 409

    def test_dump_reload(self):
        """The canonical document reloads to the same algebra."""
        a = factories.alg3()
        data = json.loads(dump_algebra(a))
        assert data["alpha"][1] == ["0", "2", "0"]
        assert len(data["products"]) == 3


class TestParseErrors:
    """Errors point at the offending line or field."""

    def test_syntax_error_line(self, tmp_path):
        """Malformed JSON reports its line."""
        path = tmp_path / "broken.json"
        path.write_text('{\n  "basis": [\n', encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_algebra(path)
        assert exc.value.details["line"] == 3
        assert exc.value.details["source"] == str(path)

    def test_missing_field(self, write_json):
        """Schema violations name the field."""
        with pytest.raises(ParseError) as exc:
            load_algebra(write_json({"basis": ["e1"]}))
        assert exc.value.details["field"] == "alpha"

    def test_unknown_label(self, write_json):
        """Products may only use declared labels."""
        doc = {**ALG2_DOC, "products": [{"left": "e1", "right": "e3", "value": {}}]}
        with pytest.raises(ParseError) as exc:
            load_algebra(write_json(doc))
        assert exc.value.details["field"] == "products[0].right"

    def test_bad_scalar(self, write_json):
        """Zero denominators are rejected with the matrix position."""
        path = write_json({**ALG2_DOC, "alpha": [[1, 0], ["1/0", 1]]})
        with pytest.raises(ParseError) as exc:
            load_algebra(path)
        assert exc.value.details["field"] == "alpha[1][0]"
        assert exc.value.details["source"] == str(path)

    def test_float_rejected(self, write_json):
        """Floating-point scalars do not validate."""
        with pytest.raises(ParseError):
            load_algebra(write_json({**ALG2_DOC, "alpha": [[1.5, 0], [0, 1]]}))

    def test_alpha_shape(self, write_json):
        """alpha must be square of the basis size."""
        with pytest.raises(ParseError, match="expected a 2x2 matrix"):
            load_algebra(write_json({**ALG2_DOC, "alpha": [[1, 0]]}))

    def test_duplicate_labels(self, write_json):
        """Basis labels are unique."""
        with pytest.raises(ParseError):
            load_algebra(write_json({**ALG2_DOC, "basis": ["e1", "e1"]}))

    def test_missing_file(self, tmp_path):
        """Unreadable paths raise ParseError."""
        with pytest.raises(ParseError, match="cannot read file"):
            load_algebra(tmp_path / "absent.json")

    def test_not_utf8(self, tmp_path):
        """Undecodable bytes raise ParseError instead of escaping as UnicodeDecodeError."""
        path = tmp_path / "utf16.json"
        path.write_bytes(b'\xff\xfe{"basis":')
        with pytest.raises(ParseError) as exc:
            load_algebra(path)
        assert exc.value.raw_message == "file is not valid UTF-8 (byte 0)"
        assert exc.value.details["source"] == str(path)


# ==========================================
# Representations, operators, forms and series
# ==========================================

class TestOtherDocuments:
    """Representation, operator, form and series documents."""

    def test_representation(self, alg2):
        """Missing labels act by zero."""
        r = load_representation(FIXTURES / "alg2_bad_rep.json", alg2)
        assert r == factories.bad_rep(alg2)

    def test_representation_unknown_label(self, write_json, alg2):
        """rho keys must be basis labels of the algebra."""
        path = write_json({"dim": 1, "phi": [[1]], "rho": {"x": [[0]]}})
        with pytest.raises(ParseError):
            load_representation(path, alg2)

    def test_operator(self):
        """Operators are read with the requested shape."""
        assert load_operator(FIXTURES / "alg2_shift.json", (2, 2)) == mat([0, 0], [1, 0])

    def test_operator_shape(self):
        """A shape mismatch names the expected shape."""
        with pytest.raises(ParseError, match="expected a 2x1 matrix"):
            load_operator(FIXTURES / "alg2_shift.json", (2, 1))

    def test_form(self, alg2):
        """Forms keep their Gram matrix."""
        assert load_form(FIXTURES / "alg2_theta.json", alg2).gram() == mat([1, 0], [0, 0])

    def test_product_series(self, alg2):
        """Bilinear coefficients become a product series."""
        series = product_series_from_document(load_series(FIXTURES / "alg2_constant_series.json"), alg2)
        assert series.order == 2
        assert all(mu == alg2.product for mu in series.coeffs)

    def test_map_series(self):
        """Matrix coefficients become a map series."""
        series = map_series_from_document(load_series(FIXTURES / "alg2_rb_series.json"), (2, 2))
        assert series.coeffs == (mat([0, 0], [1, 0]), Matrix.zeros(2, 2))

    def test_series_kind_mismatch(self, alg2):
        """Matrix coefficients are not bilinear maps."""
        doc = load_series(FIXTURES / "alg2_rb_series.json")
        with pytest.raises(ParseError, match="expected a bilinear map"):
            product_series_from_document(doc, alg2)

    def test_series_count(self, write_json):
        """order k needs k + 1 coefficients."""
        with pytest.raises(ParseError):
            load_series(write_json({"order": 2, "coeffs": [{}]}))

    def test_sparse_key(self):
        """Keys have the form 'x,y'."""
        with pytest.raises(ParseError, match="expected a key"):
            bilinear_from_sparse({"e1": {"e2": 1}}, ("e1", "e2"))
