"""
JSON documents for every structure the command line reads or writes.

A document is one flat object. Which keys are present decides what it holds:

    algebra            field, dim, products
    coalgebra          field, dim, coproducts
    bialgebra          field, dim, products, coproducts
    leibniz_bialgebra  as bialgebra, with "kind": "leibniz_bialgebra"
    form               field, dim, gram
    quadratic          field, dim, products, gram
    r                  field, dim, r
    rmatrix            field, dim, products, r
    rb                 field, dim, products, R, weight (and gram when skew-quadratic)
    matched_pair       field, A, B, lA, rA, lB, rB

with

    products   [{"i": 1, "j": 1, "out": ["0", "1"]}, ...]
    coproducts [{"k": 1, "out": [{"i": 2, "j": 2, "c": "1"}]}, ...]
    r          [{"i": 1, "j": 2, "c": "1"}, ...]

Indices are 1-based and omitted entries are zero. Scalars are strings in the
field's own notation ("-1/2" over Q, "1 mod 3" over GF(3)); plain JSON
integers are accepted on input. Saved documents are canonical: sorted keys,
reduced scalars, zero entries dropped, so saving a loaded canonical file
reproduces it byte for byte.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np

from ..algebra.algebra import Algebra
from ..algebra.forms import BilinearForm
from ..bialgebra.bialgebra import Bialgebra
from ..bialgebra.coalgebra import Coalgebra
from ..core.field import Field, get_field
from ..errors import (
    AntiLeibnizError,
    BadParameter,
    DivisionByZero,
    FieldMismatch,
    ParseError,
    SchemaError,
)
from ..pairs.matched import MatchedPairData
from ..rotabaxter.operators import SkewQuadraticRB, WeightedRB
from ..tensorconstruct.catalog import RMatrixFixture
from ..tensorconstruct.construct import QuadraticAA
from ..tensorconstruct.leibniz import LeibnizBialgebra
from ..yangbaxter.rmatrix import Tensor2

logger = logging.getLogger(__name__)

KINDS = ("algebra", "coalgebra", "bialgebra", "leibniz_bialgebra", "form", "quadratic",
         "r", "rmatrix", "rb", "matched_pair")
Document = Dict[str, Any]


def _default_labels(dim: int) -> tuple:
    return tuple(f"e{i + 1}" for i in range(dim))


def _labels(doc: Document, labels) -> None:
    if tuple(labels) != _default_labels(len(labels)):
        doc["labels"] = list(labels)


def _header(field: Field, dim: int, kind: str) -> Document:
    return {"kind": kind, "field": field.name, "dim": int(dim)}


def _products(field: Field, sc: np.ndarray) -> List[Document]:
    mask = field.nonzero_mask(sc).any(axis=2)
    return [
        {"i": int(i) + 1, "j": int(j) + 1, "out": [field.format(c) for c in sc[i, j]]}
        for i, j in np.argwhere(mask)
    ]


def _terms(field: Field, matrix: np.ndarray, value_key: str = "c") -> List[Document]:
    return [
        {"i": int(i) + 1, "j": int(j) + 1, value_key: field.format(matrix[i, j])}
        for i, j in np.argwhere(field.nonzero_mask(matrix))
    ]


def _coproducts(field: Field, cc: np.ndarray) -> List[Document]:
    out = []
    for k in range(cc.shape[0]):
        terms = _terms(field, cc[k])
        if terms:
            out.append({"k": k + 1, "out": terms})
    return out


def _matrix(field: Field, matrix: np.ndarray) -> List[List[str]]:
    return field.format_array(matrix)


def to_document(obj: Any) -> Document:
    """
    Plain-data form of a supported structure.

    param: obj; Algebra, Coalgebra, Bialgebra, LeibnizBialgebra,
     BilinearForm, QuadraticAA, Tensor2, RMatrixFixture, WeightedRB or
     MatchedPairData. (Any)
    :return: JSON-ready dictionary. (dict)
    """
    if isinstance(obj, Algebra):
        doc = _header(obj.field, obj.dim, "algebra")
        doc["products"] = _products(obj.field, obj.sc)
        _labels(doc, obj.labels)
        return doc
    if isinstance(obj, Coalgebra):
        doc = _header(obj.field, obj.dim, "coalgebra")
        doc["coproducts"] = _coproducts(obj.field, obj.cc)
        _labels(doc, obj.labels)
        return doc
    if isinstance(obj, (Bialgebra, LeibnizBialgebra)):
        kind = "bialgebra" if isinstance(obj, Bialgebra) else "leibniz_bialgebra"
        doc = _header(obj.field, obj.dim, kind)
        doc["products"] = _products(obj.field, obj.alg.sc)
        doc["coproducts"] = _coproducts(obj.field, obj.coa.cc)
        _labels(doc, obj.alg.labels)
        return doc
    if isinstance(obj, BilinearForm):
        doc = _header(obj.field, obj.dim, "form")
        doc["gram"] = _matrix(obj.field, obj.gram)
        return doc
    if isinstance(obj, QuadraticAA):
        doc = to_document(obj.alg)
        doc["kind"] = "quadratic"
        doc["gram"] = _matrix(obj.field, obj.form.gram)
        return doc
    if isinstance(obj, Tensor2):
        doc = _header(obj.field, obj.dim, "r")
        doc["r"] = _terms(obj.field, obj.coeff)
        return doc
    if isinstance(obj, RMatrixFixture):
        doc = to_document(obj.algebra)
        doc["kind"] = "rmatrix"
        doc["r"] = _terms(obj.r.field, obj.r.coeff)
        return doc
    if isinstance(obj, WeightedRB):
        doc = to_document(obj.algebra)
        doc["kind"] = "rb"
        doc["R"] = _matrix(obj.field, obj.R.matrix)
        doc["weight"] = obj.field.format(obj.weight)
        if isinstance(obj, SkewQuadraticRB):
            doc["gram"] = _matrix(obj.field, obj.form.gram)
        return doc
    if isinstance(obj, MatchedPairData):
        field = obj.field
        doc = {"kind": "matched_pair", "field": field.name,
               "A": to_document(obj.A), "B": to_document(obj.B)}
        for name in ("lA", "rA", "lB", "rB"):
            doc[name] = [_matrix(field, m) for m in getattr(obj, name)]
        return doc
    raise BadParameter(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_document(obj), indent=2, sort_keys=True) + "\n"


def save(
        obj: Any,
        path: Union[str, Path]
) -> Path:
    path = Path(path)
    try:
        path.write_text(dumps(obj), encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot write {path}: {e}")
        raise
    logger.debug(f"Wrote {type(obj).__name__} to {path}")
    return path


class _Reader:
    """Validating accessors that name the offending field on failure."""

    def __init__(self, doc: Document):
        if not isinstance(doc, dict):
            raise SchemaError("a document must be a JSON object", "<root>")
        self.doc = doc
        raw = doc.get("field", "Q")
        try:
            self.field = get_field(raw)
        except BadParameter as e:
            raise SchemaError(str(e), "field") from e

    def require(self, key: str, where: str = "") -> Any:
        if key not in self.doc:
            raise SchemaError("missing", where or key)
        return self.doc[key]

    def integer(self, value: Any, where: str, low: int = 1, high: Optional[int] = None) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaError(f"expected an integer, got {value!r}", where)
        if value < low or (high is not None and value > high):
            bound = f"{low}..{high}" if high is not None else f">= {low}"
            raise SchemaError(f"{value} outside {bound}", where)
        return value

    def scalar(self, value: Any, where: str) -> Any:
        if isinstance(value, bool) or isinstance(value, float):
            raise SchemaError(f"scalars are strings or integers, got {value!r}", where)
        if isinstance(value, int):
            return self.field.element(value)
        if not isinstance(value, str):
            raise SchemaError(f"expected a scalar, got {value!r}", where)
        try:
            return self.field.parse(value)
        except FieldMismatch as e:
            raise SchemaError(f"scalar '{value}' does not belong to {self.field.name}: {e}",
                              where) from e
        except (BadParameter, DivisionByZero) as e:
            raise SchemaError(str(e), where) from e

    def listing(self, value: Any, where: str) -> list:
        if not isinstance(value, list):
            raise SchemaError(f"expected a list, got {type(value).__name__}", where)
        return value

    def record(self, value: Any, where: str) -> dict:
        if not isinstance(value, dict):
            raise SchemaError(f"expected an object, got {type(value).__name__}", where)
        return value

    def entry(self, record: dict, key: str, where: str) -> Any:
        if key not in record:
            raise SchemaError("missing", f"{where}.{key}")
        return record[key]

    def dim(self) -> int:
        return self.integer(self.require("dim"), "dim")

    def labels(self, dim: int):
        labels = self.doc.get("labels")
        if labels is None:
            return None
        labels = self.listing(labels, "labels")
        if len(labels) != dim or not all(isinstance(x, str) for x in labels):
            raise SchemaError(f"expected {dim} string labels", "labels")
        return labels

    def products(self, dim: int) -> np.ndarray:
        sc = self.field.zeros((dim, dim, dim))
        seen = set()
        for n, item in enumerate(self.listing(self.require("products"), "products")):
            where = f"products[{n}]"
            item = self.record(item, where)
            i = self.integer(self.entry(item, "i", where), f"{where}.i", 1, dim)
            j = self.integer(self.entry(item, "j", where), f"{where}.j", 1, dim)
            if (i, j) in seen:
                raise SchemaError(f"duplicate product ({i}, {j})", where)
            seen.add((i, j))
            out = self.listing(self.entry(item, "out", where), f"{where}.out")
            if len(out) != dim:
                raise SchemaError(f"expected {dim} coordinates, got {len(out)}", f"{where}.out")
            for k, value in enumerate(out):
                sc[i - 1, j - 1, k] = self.scalar(value, f"{where}.out[{k}]")
        return sc

    def terms(self, items: Any, dim: int, where: str) -> np.ndarray:
        matrix = self.field.zeros((dim, dim))
        for n, item in enumerate(self.listing(items, where)):
            at = f"{where}[{n}]"
            item = self.record(item, at)
            i = self.integer(self.entry(item, "i", at), f"{at}.i", 1, dim)
            j = self.integer(self.entry(item, "j", at), f"{at}.j", 1, dim)
            matrix[i - 1, j - 1] = matrix[i - 1, j - 1] + self.scalar(
                self.entry(item, "c", at), f"{at}.c")
        return matrix

    def coproducts(self, dim: int) -> np.ndarray:
        cc = self.field.zeros((dim, dim, dim))
        seen = set()
        for n, item in enumerate(self.listing(self.require("coproducts"), "coproducts")):
            where = f"coproducts[{n}]"
            item = self.record(item, where)
            k = self.integer(self.entry(item, "k", where), f"{where}.k", 1, dim)
            if k in seen:
                raise SchemaError(f"duplicate coproduct of e{k}", where)
            seen.add(k)
            cc[k - 1] = self.terms(self.entry(item, "out", where), dim, f"{where}.out")
        return cc

    def matrix(self, key: str, shape: tuple, value: Any = None) -> np.ndarray:
        value = self.require(key) if value is None else value
        rows = self.listing(value, key)
        if len(rows) != shape[0]:
            raise SchemaError(f"expected {shape[0]} rows, got {len(rows)}", key)
        out = self.field.zeros(shape)
        for i, row in enumerate(rows):
            row = self.listing(row, f"{key}[{i}]")
            if len(row) != shape[1]:
                raise SchemaError(f"expected {shape[1]} entries, got {len(row)}", f"{key}[{i}]")
            for j, entry in enumerate(row):
                out[i, j] = self.scalar(entry, f"{key}[{i}][{j}]")
        return out

    def stack(self, key: str, count: int, size: int) -> np.ndarray:
        items = self.listing(self.require(key), key)
        if len(items) != count:
            raise SchemaError(f"expected {count} matrices, got {len(items)}", key)
        out = self.field.zeros((count, size, size))
        for n, item in enumerate(items):
            out[n] = self.matrix(f"{key}[{n}]", (size, size), item)
        return out


def infer_kind(doc: Document) -> str:
    """The kind a document declares, or the one its keys imply."""
    kind = doc.get("kind")
    if kind is not None:
        if kind not in KINDS:
            raise SchemaError(f"unknown kind '{kind}'", "kind")
        return kind
    keys = set(doc)
    if {"A", "B"} <= keys:
        return "matched_pair"
    if "R" in keys:
        return "rb"
    if "products" in keys:
        if "coproducts" in keys:
            return "bialgebra"
        if "gram" in keys:
            return "quadratic"
        if "r" in keys:
            return "rmatrix"
        return "algebra"
    if "coproducts" in keys:
        return "coalgebra"
    if "gram" in keys:
        return "form"
    if "r" in keys:
        return "r"
    raise SchemaError("cannot tell what the document holds", "<root>")


def from_document(
        doc: Document,
        kind: Optional[str] = None
) -> Any:
    """
    Rebuilds a structure from its plain-data form.

    param: doc; Parsed JSON object. (dict)
    param: kind; Expected kind; checked against the document. (str)
    :return: The structure. (Any)
    """
    found = infer_kind(doc) if isinstance(doc, dict) else None
    if found is None:
        raise SchemaError("a document must be a JSON object", "<root>")
    if kind is not None and kind != found:
        # a bialgebra file also serves as an algebra or a coalgebra
        if not (found in ("bialgebra", "leibniz_bialgebra", "quadratic", "rmatrix", "rb")
                and kind == "algebra") and not (
                found in ("bialgebra", "leibniz_bialgebra") and kind == "coalgebra"):
            raise SchemaError(f"expected a {kind} document, found {found}", "kind")
        found = kind
    reader = _Reader(doc)
    field = reader.field
    try:
        if found == "matched_pair":
            A = from_document(reader.record(reader.require("A"), "A"), "algebra")
            B = from_document(reader.record(reader.require("B"), "B"), "algebra")
            if A.field is not field or B.field is not field:
                raise SchemaError("component algebras use another field", "field")
            return MatchedPairData(A, B, reader.stack("lA", A.dim, B.dim),
                                   reader.stack("rA", A.dim, B.dim),
                                   reader.stack("lB", B.dim, A.dim),
                                   reader.stack("rB", B.dim, A.dim))
        dim = reader.dim()
        labels = reader.labels(dim)
        if found == "form":
            return BilinearForm(reader.matrix("gram", (dim, dim)), field)
        if found == "r":
            return Tensor2(reader.terms(reader.require("r"), dim, "r"), field)
        if found == "coalgebra":
            return Coalgebra(reader.coproducts(dim), field, labels)
        algebra = Algebra(reader.products(dim), field, labels)
        if found == "algebra":
            return algebra
        if found in ("bialgebra", "leibniz_bialgebra"):
            coalgebra = Coalgebra(reader.coproducts(dim), field, labels)
            cls = Bialgebra if found == "bialgebra" else LeibnizBialgebra
            return cls(algebra, coalgebra)
        if found == "quadratic":
            return QuadraticAA(algebra, BilinearForm(reader.matrix("gram", (dim, dim)), field))
        if found == "rmatrix":
            return RMatrixFixture(algebra, Tensor2(reader.terms(reader.require("r"), dim, "r"),
                                                   field))
        R = reader.matrix("R", (dim, dim))
        weight = reader.scalar(doc.get("weight", 0), "weight")
        if "gram" in doc:
            return SkewQuadraticRB(algebra, R, weight,
                                   BilinearForm(reader.matrix("gram", (dim, dim)), field))
        return WeightedRB(algebra, R, weight)
    except SchemaError:
        raise
    except AntiLeibnizError as e:
        logger.error(f"Document of kind {found} is inconsistent: {e}")
        raise SchemaError(str(e), "<root>") from e


def loads(
        text: str,
        kind: Optional[str] = None
) -> Any:
    """
    param: text; JSON text. (str)
    param: kind; Expected kind. (str)
    :return: The structure. (Any)
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        logger.error(f"Malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}")
        raise ParseError(e.msg, e.lineno, e.colno) from e
    return from_document(doc, kind)


def load(
        path: Union[str, Path],
        kind: Optional[str] = None
) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot read {path}: {e}")
        raise
    return loads(text, kind)


def canonicalize(text: str) -> str:
    """Reads a document and writes it back in canonical form."""
    return dumps(loads(text))
