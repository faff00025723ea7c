import re
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator

FIELD_KIND_GENERIC = "generic"
FIELD_KIND_ROOT_OF_UNITY = "root_of_unity"

_ROOT_LABEL = re.compile(r"^root(\d+)$")


class FieldSpec(BaseModel):
    """
    Which coefficient field scalars live in.

    ``generic`` is the field of rational functions in q over the rationals.
    ``root_of_unity`` with level N fixes q = exp(i*pi/N), a primitive 2N-th root of unity.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["generic", "root_of_unity"] = FIELD_KIND_GENERIC
    N: Optional[int] = None

    @model_validator(mode="after")
    def check_level(self):
        if self.kind == FIELD_KIND_ROOT_OF_UNITY:
            if self.N is None or self.N < 2:
                raise ValueError(f"root_of_unity field needs N >= 2, got N={self.N}")
        elif self.N is not None:
            raise ValueError("generic field takes no N")
        return self

    @classmethod
    def generic(cls) -> "FieldSpec":
        return cls(kind=FIELD_KIND_GENERIC)

    @classmethod
    def root_of_unity(cls, N: int) -> "FieldSpec":
        return cls(kind=FIELD_KIND_ROOT_OF_UNITY, N=N)

    @classmethod
    def from_label(cls, label: str) -> "FieldSpec":
        """Parse the CLI spelling: ``generic`` or ``rootN``."""
        label = label.strip().lower()
        if label == FIELD_KIND_GENERIC:
            return cls.generic()
        match = _ROOT_LABEL.match(label)
        if not match:
            raise ValueError(f"Unknown field '{label}'. Use 'generic' or 'rootN' (e.g. root4)")
        return cls.root_of_unity(int(match.group(1)))

    @property
    def is_root_of_unity(self) -> bool:
        return self.kind == FIELD_KIND_ROOT_OF_UNITY

    @property
    def label(self) -> str:
        return f"root{self.N}" if self.is_root_of_unity else FIELD_KIND_GENERIC

    def __str__(self):
        return self.label
