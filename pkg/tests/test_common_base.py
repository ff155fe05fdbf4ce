"""Tests for pyqglass.common."""
import json
import sys
import unittest
from pathlib import Path

# Ensure project root is on path when running tests directly
_root = Path(__file__).resolve().parent.parent
if str(_root) not in sys.path:
    sys.path.insert(0, str(_root))

from pyqglass.common import (
    ConfigError,
    ContractViolationError,
    DomainError,
    LatticeSizeError,
    QglassBool,
    QglassData,
    QglassDict,
    QglassError,
    QglassFloat,
    QglassInt,
    QglassOperator,
    QglassString,
    canonical_digest,
)


class TestQglassData(unittest.TestCase):
    """Tests for QglassData and its scalar subclasses."""

    def test_init_default(self):
        self.assertIsNone(QglassData().data)

    def test_repr_and_str(self):
        self.assertIn("QglassData", repr(QglassData("x")))
        self.assertEqual(str(QglassData("hello")), "hello")

    def test_equality_unwraps(self):
        self.assertEqual(QglassInt(3), 3)
        self.assertEqual(QglassInt(3), QglassInt(3))
        self.assertNotEqual(QglassFloat(0.5), 0.25)

    def test_coercion(self):
        self.assertEqual(QglassString(12).data, "12")
        self.assertEqual(QglassString(None).data, "")
        self.assertEqual(QglassInt("7").data, 7)
        self.assertEqual(QglassInt(4.0).data, 4)
        self.assertEqual(QglassFloat(QglassInt(2)).data, 2.0)
        self.assertTrue(QglassBool(1).data)
        self.assertFalse(QglassBool("false").data)
        self.assertEqual(len(QglassString("abc")), 3)
        self.assertEqual(float(QglassInt(4)), 4.0)

    def test_coercion_rejects_lossy_values(self):
        with self.assertRaises(ValueError):
            QglassInt(2.5)
        with self.assertRaises(ValueError):
            QglassBool("maybe")
        with self.assertRaises(ValueError):
            QglassFloat("wide")

    def test_values_are_not_hashable(self):
        with self.assertRaises(TypeError):
            hash(QglassInt(1))

    def test_dict_is_its_own_data(self):
        d = QglassDict({"a": 1})
        self.assertIs(d.data, d)
        d.data = {"b": 2}
        self.assertEqual(dict(d), {"b": 2})
        self.assertFalse(QglassDict())


class _Settings(QglassOperator):
    name: QglassString
    count: QglassInt
    scale: QglassFloat
    flags: QglassDict

    def __init__(self, name: str = "settings", count: int = 1):
        super().__init__()
        self.name = QglassString(name)
        self.count = QglassInt(count)


class TestQglassOperator(unittest.TestCase):
    """Tests for field discovery, state dicts and checksums."""

    def test_fields_are_discovered_in_order(self):
        settings = _Settings()
        self.assertEqual(settings.field_names, ["name", "count", "scale", "flags"])
        self.assertEqual(list(settings.state_dict()), settings.field_names)
        self.assertEqual(settings.scale.data, 0.0)

    def test_state_dict_holds_plain_values(self):
        settings = _Settings("a", 3)
        settings.flags.data = {"x": True}
        self.assertEqual(settings.state_dict(), {"name": "a", "count": 3, "scale": 0.0, "flags": {"x": True}})
        self.assertEqual(settings.state_dict(exclude=["flags", "scale"]), {"name": "a", "count": 3})
        json.dumps(settings.state_dict())

    def test_state_dict_round_trip(self):
        settings = _Settings("a", 3)
        settings.flags.data = {"x": True}
        other = _Settings()
        other.load_state_dict(settings.state_dict())
        self.assertEqual(other.state_dict(), settings.state_dict())
        self.assertEqual(other.checksum(), settings.checksum())

    def test_strict_load_reports_every_field(self):
        with self.assertRaises(ConfigError) as info:
            _Settings().load_state_dict({"name": "x", "count": "lots", "extra": 1})
        self.assertEqual(
            sorted(problem.split(":")[0] for problem in info.exception.problems),
            ["count", "extra", "flags", "scale"],
        )

    def test_lenient_load_keeps_absent_fields(self):
        settings = _Settings("kept")
        settings.load_state_dict({"count": 9, "extra": 1}, strict=False)
        self.assertEqual(settings.count.data, 9)
        self.assertEqual(settings.name.data, "kept")

    def test_checksum_tracks_state(self):
        a, b = _Settings("a"), _Settings("a")
        self.assertEqual(a.checksum(), b.checksum())
        b.count = QglassInt(2)
        self.assertNotEqual(a.checksum(), b.checksum())
        self.assertEqual(a.checksum(exclude=["count"]), b.checksum(exclude=["count"]))
        self.assertEqual(a.checksum(), canonical_digest(a.state_dict()))

    def test_repr_lists_fields(self):
        self.assertIn("count=1", repr(_Settings()))


class TestCanonicalDigest(unittest.TestCase):

    def test_key_order_does_not_matter(self):
        self.assertEqual(canonical_digest({"a": 1, "b": [1, 2]}), canonical_digest({"b": [1, 2], "a": 1}))

    def test_wrapped_values_are_unwrapped(self):
        self.assertEqual(canonical_digest({"n": QglassInt(3)}), canonical_digest({"n": 3}))
        self.assertNotEqual(canonical_digest({"n": 3}), canonical_digest({"n": 4}))


class TestErrors(unittest.TestCase):

    def test_details_are_stringified(self):
        err = DomainError("radius out of range", R=0.9, d=None)
        self.assertEqual(err.error_type, "DomainError")
        self.assertEqual(err.details, {"R": "0.9"})
        self.assertEqual(str(err), "radius out of range")

    def test_hierarchy(self):
        for cls in (ContractViolationError, LatticeSizeError, DomainError):
            self.assertTrue(issubclass(cls, QglassError))
            self.assertTrue(issubclass(cls, ValueError))

    def test_config_error_lists_problems(self):
        err = ConfigError(["steps: must be >= 1", "seed: bad"])
        self.assertEqual(err.problems, ["steps: must be >= 1", "seed: bad"])
        self.assertIn("steps", str(err))
        self.assertIsInstance(err, QglassError)


if __name__ == "__main__":
    unittest.main()
