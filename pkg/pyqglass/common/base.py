from __future__ import annotations

import hashlib
import json
from typing import Any, Dict, Generic, Iterable, List, Mapping, TypeVar, get_origin, get_type_hints

from .errors import ConfigError


T = TypeVar("T")
K = TypeVar("K")
V = TypeVar("V")


class QglassData(Generic[T]):
    """Typed value slot of a QglassOperator; subclasses coerce what they are given."""

    data: T

    def __init__(self, data: Any = None):
        self.data = self.coerce(_unwrap_data(data))

    @classmethod
    def coerce(cls, value: Any) -> T:
        return value

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.data!r})"

    def __str__(self) -> str:
        return str(self.data)

    def __bool__(self) -> bool:
        return bool(self.data)

    def __eq__(self, other: Any) -> bool:
        return self.data == _unwrap_data(other)

    __hash__ = None


class QglassString(QglassData[str]):
    data: str

    @classmethod
    def coerce(cls, value: Any) -> str:
        return "" if value is None else str(value)

    def __len__(self) -> int:
        return len(self.data)


class QglassInt(QglassData[int]):
    data: int

    @classmethod
    def coerce(cls, value: Any) -> int:
        if value is None:
            return 0
        if isinstance(value, float) and not value.is_integer():
            raise ValueError(f"expected an integer, got {value!r}")
        return int(value)

    def __int__(self) -> int:
        return self.data

    def __index__(self) -> int:
        return self.data

    def __float__(self) -> float:
        return float(self.data)


class QglassFloat(QglassData[float]):
    data: float

    @classmethod
    def coerce(cls, value: Any) -> float:
        return 0.0 if value is None else float(value)

    def __float__(self) -> float:
        return self.data


class QglassBool(QglassData[bool]):
    data: bool

    @classmethod
    def coerce(cls, value: Any) -> bool:
        if isinstance(value, str):
            lowered = value.strip().lower()
            if lowered not in ("true", "false"):
                raise ValueError(f"expected true or false, got {value!r}")
            return lowered == "true"
        return bool(value)

    def __bool__(self) -> bool:
        return self.data


class QglassDict(dict, QglassData[Dict[K, V]], Generic[K, V]):
    """A dict that is its own ``data``; used for registries and convention tables."""

    def __init__(self, data: Mapping[K, V] | None = None):
        dict.__init__(self, {} if data is None else dict(_unwrap_data(data)))

    @property
    def data(self) -> dict:
        return self

    @data.setter
    def data(self, value: Any) -> None:
        if value is self:
            return
        self.clear()
        if value is not None:
            self.update(_unwrap_data(value))

    def __bool__(self) -> bool:
        return len(self) > 0


class QglassOperator:
    """Object whose state is the set of its annotated QglassData fields.

    Subclasses declare fields as class annotations (``n_spins: QglassInt``). Each field is
    created empty at construction. ``state_dict`` gives the plain values in declaration
    order, ``load_state_dict`` coerces them back field by field, and ``checksum`` is the
    SHA-256 of the canonical JSON state.
    """

    def __init__(self):
        self._qglass_fields: Dict[str, type[QglassData]] = {}
        for field_name, field_type in self._field_annotations().items():
            data_type = _qglass_data_type(field_type)
            if data_type is None:
                continue
            if not hasattr(self, field_name):
                setattr(self, field_name, data_type())
            self._qglass_fields[field_name] = data_type

    def _field_annotations(self) -> Dict[str, Any]:
        annotations: Dict[str, Any] = {}
        for cls in reversed(self.__class__.__mro__):
            if cls is object:
                continue
            try:
                annotations.update(get_type_hints(cls))
            except Exception:
                annotations.update(getattr(cls, "__annotations__", {}))
        return annotations

    @property
    def field_names(self) -> List[str]:
        return list(self._qglass_fields)

    def state_dict(self, exclude: Iterable[str] = ()) -> Dict[str, Any]:
        """Field name -> plain JSON value, in declaration order."""
        skipped = set(exclude)
        return {
            name: _to_json_value(getattr(self, name))
            for name in self._qglass_fields
            if name not in skipped
        }

    def load_state_dict(self, state: Mapping[str, Any], strict: bool = True) -> None:
        """Coerce ``state`` into the fields; every offending field is reported in one ConfigError.

        With ``strict`` the keys must be exactly the declared fields. Otherwise unknown keys are
        ignored and absent fields keep their value.
        """
        problems: List[str] = []
        if strict:
            problems.extend(f"{name}: missing field" for name in self._qglass_fields if name not in state)
        for name, value in state.items():
            if name not in self._qglass_fields:
                if strict:
                    problems.append(f"{name}: unknown field")
                continue
            try:
                setattr(self, name, self._qglass_fields[name](value))
            except (TypeError, ValueError) as exc:
                problems.append(f"{name}: cannot read {value!r} ({exc})")
        if problems:
            raise ConfigError(problems)

    def checksum(self, exclude: Iterable[str] = ()) -> str:
        return canonical_digest(self.state_dict(exclude))

    def __repr__(self) -> str:
        fields = ", ".join(f"{name}={value!r}" for name, value in self.state_dict().items())
        return f"{self.__class__.__name__}({fields})"


def _qglass_data_type(field_type: Any) -> type[QglassData] | None:
    candidate = get_origin(field_type) or field_type
    if isinstance(candidate, type) and issubclass(candidate, QglassData):
        return candidate
    return None


def _unwrap_data(value: Any) -> Any:
    return value.data if isinstance(value, QglassData) else value


def _to_json_value(value: Any) -> Any:
    value = _unwrap_data(value)
    if isinstance(value, dict):
        return {str(_unwrap_data(key)): _to_json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_json_value(item) for item in value]
    return value


def canonical_digest(payload: Any) -> str:
    """SHA-256 of the sorted-key JSON form of ``payload``."""
    text = json.dumps(_to_json_value(payload), sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
