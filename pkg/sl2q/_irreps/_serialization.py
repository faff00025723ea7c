import json
import logging
from typing import Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from ..constants import JSON_INDENT
from .._scalars import FieldSpec, Scalar, scalar_from_json
from ._forms import GramForm
from ._representation import MATRIX_NAMES, Family, Representation

logger = logging.getLogger(__name__)

# parameters each family carries
FAMILY_PARAMS = {
    Family.LnC: ("n", "c"),
    Family.LMu: ("mu",),
    Family.LLambdaN: ("N", "mu", "c"),
    Family.LnCN: ("n", "N", "c"),
    Family.LMuNtilde: ("N", "mu"),
    Family.TLnEps: ("n", "eps"),
    Family.TLLambdaN: ("N", "mu", "c"),
    Family.TLnEpsN: ("n", "N", "eps"),
    Family.TLEpsNtilde: ("N", "eps"),
    Family.LPrimenN: ("n", "N", "c"),
}
SCALAR_PARAMS = ("mu", "c")


class ParamsDocument(BaseModel):
    n: Optional[int] = None
    N: Optional[int] = None
    eps: Optional[int] = None
    mu: Optional[dict] = None
    c: Optional[dict] = None

    @field_validator("eps")
    @classmethod
    def validate_eps(cls, v):
        if v is not None and v not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        return v


class RepresentationDocument(BaseModel):
    family: Family
    field: FieldSpec
    params: ParamsDocument
    dim: int
    matrices: Dict[str, List[List[dict]]]

    @field_validator("matrices")
    @classmethod
    def validate_matrix_names(cls, v):
        if set(v) != set(MATRIX_NAMES):
            raise ValueError(f"matrices must be exactly {list(MATRIX_NAMES)}, got {sorted(v)}")
        return v

    @model_validator(mode="after")
    def validate_shapes(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        for name, rows in self.matrices.items():
            if len(rows) != self.dim or any(len(row) != self.dim for row in rows):
                raise ValueError(f"matrix {name} is not {self.dim}x{self.dim}")
        missing = [p for p in FAMILY_PARAMS[self.family] if getattr(self.params, p) is None]
        if missing:
            raise ValueError(f"{self.family.value} is missing parameters {missing}")
        return self


def _params_to_json(rep: Representation) -> dict:
    document = {}
    for name in FAMILY_PARAMS[Family(rep.family)]:
        value = rep.params[name]
        document[name] = value.to_json() if isinstance(value, Scalar) else value
    return document


def representation_to_dict(rep: Representation) -> dict:
    return {
        "family": Family(rep.family).value,
        "field": rep.field.model_dump(exclude_none=True),
        "params": _params_to_json(rep),
        "dim": rep.dim,
        "matrices": {
            name: [[entry.to_json() for entry in row] for row in matrix]
            for name, matrix in rep.matrices().items()
        },
    }


def representation_to_json(rep: Representation) -> str:
    """Canonical JSON: sorted keys, so identical representations serialize byte-identically."""
    return json.dumps(representation_to_dict(rep), sort_keys=True, indent=JSON_INDENT, ensure_ascii=False)


def _matrix_from_json(rows: List[List[dict]], field: FieldSpec) -> np.ndarray:
    dim = len(rows)
    matrix = np.empty((dim, dim), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            matrix[i, j] = scalar_from_json(entry, field)
    return matrix


def representation_from_json(source: Union[str, dict]) -> Representation:
    """
    Parse and validate a representation document.

    Raises:
        pydantic.ValidationError: If the document does not match the schema
        json.JSONDecodeError: If ``source`` is not valid JSON
        ValueError: If the document is not a JSON object
    """
    data = json.loads(source) if isinstance(source, str) else source
    if not isinstance(data, dict):
        raise ValueError(f"A representation document must be a JSON object, got {type(data).__name__}")
    document = RepresentationDocument(**data)
    field = document.field

    params = {}
    for name in FAMILY_PARAMS[document.family]:
        value = getattr(document.params, name)
        params[name] = scalar_from_json(value, field) if name in SCALAR_PARAMS else value

    xp, xm, x0, cm = (_matrix_from_json(document.matrices[name], field) for name in MATRIX_NAMES)
    logger.debug(f"[representation_from_json] {document.family.value} dim={document.dim}")
    return Representation(
        family=document.family,
        field=field,
        dim=document.dim,
        xp=xp,
        xm=xm,
        x0=x0,
        cm=cm,
        params=params,
    )


def gram_to_json(gram: GramForm) -> str:
    return json.dumps(gram.to_json(), sort_keys=True, indent=JSON_INDENT)
