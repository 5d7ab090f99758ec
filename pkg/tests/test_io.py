import json
import math
import os

import numpy as np
import pytest
from pydantic import ValidationError

from teichcurve.bers_map import d0_B, d0_P, sample_moebius_boundary
from teichcurve.common import InputFormatError, InvalidMapError
from teichcurve.io import (
    CoeffsFile,
    ReportFile,
    load_coeffs_file,
    load_cusp_form,
    read_circle_map,
    read_samples,
    render_json,
    save_coeffs_file,
    write_circle_map,
)
from teichcurve.io.report import format_float, make_verdict, sha256_file
from teichcurve.series import CuspFormCoeffs

from common import write_csv, write_cusp_form, write_raw_json


class TestCoeffsFile:
    def test_cusp_form_round_trip(self, tmp_path):
        phi = CuspFormCoeffs.from_values([1, 0.1 + 0.2j, -1e-300j])
        path = write_cusp_form(tmp_path, phi)
        assert load_cusp_form(path) == phi

    def test_json_layout(self, tmp_path):
        path = write_cusp_form(tmp_path, CuspFormCoeffs.from_values([1, 2j]))
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        assert data == {
            "model": "uhp-cusp",
            "start_index": 1,
            "coefficients": [[1.0, 0.0], [0.0, 2.0]],
        }

    def test_circle_field_file(self, tmp_path):
        field = d0_P(CuspFormCoeffs.from_values([1, 1j]))
        out = CoeffsFile.from_circle_field(field)
        assert out.start_index == -2
        path = str(tmp_path / "circle.json")
        save_coeffs_file(path, out)
        assert load_coeffs_file(path).to_circle_field() == field

    def test_curve_tangent_file(self, tmp_path):
        tangent = d0_B(CuspFormCoeffs.from_values([1, 1, 1j]))
        out = CoeffsFile.from_curve_tangent(tangent)
        assert out.model == "disc-taylor" and out.start_index == 2
        back = out.to_curve_tangent()
        assert back.a == tangent.a
        assert back.betas == pytest.approx(tangent.betas, rel=1e-15)

    def test_start_index_checked(self):
        with pytest.raises(ValidationError):
            CoeffsFile(model="uhp-cusp", start_index=0, coefficients=[[1, 0]])
        with pytest.raises(ValidationError):
            CoeffsFile(
                model="circle-field", start_index=0, coefficients=[[0, 0]] * 3
            )

    def test_puncture_only_for_disc(self):
        with pytest.raises(ValidationError):
            CoeffsFile(model="uhp-cusp", start_index=1, coefficients=[], a=[0, 1])

    def test_wrong_model(self, tmp_path):
        path = write_raw_json(
            tmp_path,
            {"model": "disc-taylor", "start_index": 2, "coefficients": [[1, 0]]},
        )
        with pytest.raises(InputFormatError):
            load_cusp_form(path)

    @pytest.mark.parametrize(
        "data",
        [
            {"model": "uhp-cusp", "start_index": 1, "coefficients": [[1, 0, 0]]},
            {"model": "uhp", "start_index": 1, "coefficients": []},
            {"start_index": 1, "coefficients": []},
        ],
    )
    def test_malformed(self, tmp_path, data):
        path = write_raw_json(tmp_path, data)
        with pytest.raises(InputFormatError):
            load_coeffs_file(path)

    def test_not_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(InputFormatError):
            load_coeffs_file(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputFormatError):
            load_coeffs_file(str(tmp_path / "nope.json"))


class TestSampledMapFiles:
    def test_round_trip_is_exact(self, tmp_path):
        eta = sample_moebius_boundary(0.3 - 0.1j, 257)
        path = str(tmp_path / "eta.csv")
        write_circle_map(path, eta)
        assert read_circle_map(path) == eta

    def test_header_required(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("a,b\n0,0\n")
        with pytest.raises(InputFormatError):
            read_samples(str(path))

    def test_bad_number(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("x,y\n0,0\n0.5,abc\n")
        with pytest.raises(InputFormatError):
            read_samples(str(path))

    def test_non_monotone(self, tmp_path):
        path = write_csv(tmp_path, [(0, 0), (0.5, 0.2), (0.4, 0.3)], "m.csv")
        with pytest.raises(InvalidMapError):
            read_circle_map(path)


class TestReportRendering:
    def test_float_format(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(1.0) == "1"
        assert format_float(float("nan")) == '"nan"'
        assert format_float(float("-inf")) == '"-inf"'

    def test_render_sorted_and_complex(self):
        text = render_json({"b": 1 + 2j, "a": [1, 2.5], "c": {"z": True, "y": None}})
        assert text.index('"a"') < text.index('"b"') < text.index('"c"')
        assert json.loads(text) == {
            "a": [1, 2.5],
            "b": [1.0, 2.0],
            "c": {"y": None, "z": True},
        }

    def test_render_numpy_scalars(self):
        text = render_json({"v": np.float64(0.25), "n": np.int64(3)})
        assert json.loads(text) == {"n": 3, "v": 0.25}

    def test_quote_escapes(self):
        assert json.loads(render_json('a"b\\c\n')) == 'a"b\\c\n'

    def test_quote_control_and_unicode(self):
        assert render_json("\x01\tμ") == '"\\u0001\\tμ"\n'
        assert json.loads(render_json({"σ\x7f": 1})) == {"σ\x7f": 1}

    def test_unsupported_type(self):
        with pytest.raises(TypeError):
            render_json({"s": {1, 2}})


class TestReportFile:
    def test_verdicts(self):
        report = ReportFile(command="test")
        report.check("small", 1e-15, 1e-12)
        assert report.passed and report.exit_code == 0
        report.check("big", 1.0, 1e-12)
        assert not report.passed and report.exit_code == 1

    def test_non_finite_fails(self):
        assert not make_verdict("nan", float("nan"), 1.0).passed
        assert make_verdict("ge", 2.0, 1.0, criterion=">=").passed
        with pytest.raises(ValueError):
            make_verdict("x", 1.0, 1.0, criterion="<")

    def test_deterministic(self, tmp_path):
        def build():
            phi_path = write_cusp_form(tmp_path, CuspFormCoeffs.from_values([1]))
            report = ReportFile(command="ratio-check", arguments={"nx": 64})
            report.add_input(phi_path)
            report.results["ratio"] = 2 * math.pi / 3
            report.check("ratio", 1e-16, 1e-12)
            return report.to_json()

        assert build() == build()

    def test_input_digest(self, tmp_path):
        path = tmp_path / "f.txt"
        path.write_bytes(b"abc")
        assert (
            sha256_file(str(path))
            == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        )

    def test_write_tables(self, tmp_path):
        report = ReportFile(command="verify")
        report.add_table("chain", ["x", "residual"], [(0.0, 0.25), (0.5, 0.125)])
        out_dir = str(tmp_path / "tables")
        report.write_tables(out_dir)
        with open(os.path.join(out_dir, "chain.csv"), "r", encoding="utf-8") as f:
            assert f.read() == "x,residual\n0,0.25\n0.5,0.125\n"

    def test_write_to_file(self, tmp_path):
        report = ReportFile(command="lift")
        report.results["samples"] = 3
        path = str(tmp_path / "r.json")
        report.write(path)
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        assert data["command"] == "lift"
        assert data["results"] == {"samples": 3}
        assert data["verdicts"] == []

    def test_missing_input(self, tmp_path):
        report = ReportFile(command="lift")
        with pytest.raises(InputFormatError):
            report.add_input(str(tmp_path / "none.csv"))
        assert report.inputs == []

    def test_unwritable_report(self, tmp_path):
        with pytest.raises(InputFormatError):
            ReportFile(command="lift").write(str(tmp_path / "missing" / "r.json"))

    def test_unwritable_tables(self, tmp_path):
        blocker = tmp_path / "tables"
        blocker.write_text("")
        report = ReportFile(command="verify")
        report.add_table("chain", ["x"], [(0.0,)])
        with pytest.raises(InputFormatError):
            report.write_tables(str(blocker))


class TestWriters:
    def test_coeffs_file_to_missing_directory(self, tmp_path):
        data = CoeffsFile.from_cusp_form(CuspFormCoeffs.from_values([1]))
        with pytest.raises(InputFormatError):
            save_coeffs_file(str(tmp_path / "missing" / "phi.json"), data)

    def test_circle_map_to_missing_directory(self, tmp_path):
        eta = sample_moebius_boundary(0.1, 10)
        with pytest.raises(InputFormatError):
            write_circle_map(str(tmp_path / "missing" / "eta.csv"), eta)
