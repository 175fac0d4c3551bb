"""
Unit tests for result files and density input
"""
import json
import os
import shutil
import tempfile
import unittest

import numpy as np
import pandas as pd

from tests.test_utils import MockDensities

from src.core.exceptions import FileOperationError
from src.utils.file_io import FORMAT_VERSION, ResultFileManager, density_frame, header_from


class TestResultFileManager(unittest.TestCase):
    """Test cases for ResultFileManager"""

    def setUp(self):
        """Set up test fixtures"""
        self.files = ResultFileManager()
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def path(self, name):
        return os.path.join(self.temp_dir, name)

    def write(self, name, content):
        with open(self.path(name), 'w', encoding='utf-8') as f:
            f.write(content)
        return self.path(name)

    def test_json_spells_out_non_finite_numbers(self):
        text = self.files.to_json({"value": float("inf"), "low": -np.inf, "gap": float("nan"),
                                   "values": np.array([1.0, np.inf]), "flag": np.bool_(True),
                                   "count": np.int64(3), "pair": (1, 2)}, command="bound")
        data = json.loads(text)
        self.assertEqual(data["value"], "inf")
        self.assertEqual(data["low"], "-inf")
        self.assertIsNone(data["gap"])
        self.assertEqual(data["values"], [1.0, "inf"])
        self.assertIs(data["flag"], True)
        self.assertEqual(data["count"], 3)
        self.assertEqual(data["pair"], [1, 2])
        self.assertEqual(data["_metadata"], {"version": FORMAT_VERSION, "file_format": "json", "command": "bound"})

    def test_json_without_command(self):
        data = json.loads(self.files.to_json({"a": 1}))
        self.assertNotIn("command", data["_metadata"])

    def test_csv_header_comments(self):
        frame = pd.DataFrame({"x": [0.0, 0.5], "value": [1.0, np.nan]})
        text = self.files.to_csv(frame, header={"K": 1.0, "N": float("inf")})
        lines = text.splitlines()
        self.assertEqual(lines[0], "# K: 1.0")
        self.assertEqual(lines[1], "# N: inf")
        self.assertEqual(lines[2], "x,value")
        self.assertEqual(lines[4], "0.5,nan")

    def test_write_text_creates_directories(self):
        target = self.path(os.path.join("nested", "out.txt"))
        written = self.files.write_text("result", target)
        self.assertEqual(written, target)
        with open(target, encoding='utf-8') as f:
            self.assertEqual(f.read(), "result\n")

    def test_read_density_csv_with_header(self):
        path = self.write("density.csv", "# sampled density\nx,value\n0.0,1.0\n0.5,2.0\n1.0,3.0\n")
        density = self.files.read_density(path)
        self.assertEqual(density.n_points, 3)
        self.assertAlmostEqual(density.dx, 0.5)
        np.testing.assert_allclose(density.values, [1.0, 2.0, 3.0])

    def test_read_density_csv_without_header(self):
        path = self.write("density.csv", "-1,0.5\n0,1\n1,0.5\n2,0.25\n")
        density = self.files.read_density(path)
        self.assertEqual(density.x0, -1.0)
        self.assertEqual(density.n_points, 4)

    def test_read_density_json(self):
        payload = {"x0": 0.0, "dx": 0.25, "values": [1.0, 1.0, 1.0, 1.0, 1.0]}
        density = self.files.read_density(self.write("density.json", json.dumps(payload)))
        self.assertEqual(density.interval, (0.0, 1.0))

    def test_csv_round_trip_of_sampled_density(self):
        original = MockDensities.model(1.0, 3.0, 0.2)
        path = self.write("model.csv", self.files.to_csv(density_frame(original), header={"K": 1.0}))
        restored = self.files.read_density(path)
        np.testing.assert_allclose(restored.values, original.values, rtol=1e-11)
        self.assertAlmostEqual(restored.dx, original.dx, places=12)

    def test_read_density_errors(self):
        cases = {
            "missing.csv": None,
            "one_column.csv": "0\n1\n2\n",
            "text.csv": "x,value\n0,a\n1,b\n2,c\n",
            "uneven.csv": "0,1\n0.5,1\n2,1\n",
            "negative.csv": "0,1\n1,-1\n2,1\n",
            "short.json": json.dumps({"x0": 0.0, "values": [1, 2, 3]}),
            "broken.json": "{not json",
        }
        for name, content in cases.items():
            with self.subTest(name=name):
                path = self.path(name) if content is None else self.write(name, content)
                with self.assertRaises(FileOperationError):
                    self.files.read_density(path)


class TestHelpers(unittest.TestCase):
    """Test cases for density_frame and header_from"""

    def test_density_frame_columns(self):
        frame = density_frame(MockDensities.uniform(n_points=11), value_column="u")
        self.assertEqual(list(frame.columns), ["x", "u"])
        self.assertEqual(len(frame), 11)
        self.assertAlmostEqual(frame["x"].iloc[-1], 1.0)

    def test_header_drops_missing_values(self):
        header = header_from([("K", 1.0), ("p", None), ("N", 3.0)])
        self.assertEqual(list(header), ["K", "N"])


if __name__ == '__main__':
    unittest.main()
