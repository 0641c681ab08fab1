import numpy as np
import pandas as pd

from app.enums import SchemeId
from app.output import path_csv_name, strong_error_csv_name, write_csv


def test_csv_uses_lf_and_marks_missing_values(tmp_path):
    frame = pd.DataFrame({"scheme": ["SMS", "BMS"], "rho_hat": [0.9956, np.nan]})
    out = write_csv(frame, tmp_path / "nested" / "table.csv")
    raw = out.read_bytes()
    assert b"\r\n" not in raw
    assert raw.decode().splitlines() == ["scheme,rho_hat", "SMS,0.9956", "BMS,n/a"]


def test_full_float_precision(tmp_path):
    value = 0.1 + 0.2
    out = write_csv(pd.DataFrame({"dt": [value]}), tmp_path / "x.csv")
    assert float(out.read_text().splitlines()[1]) == value


def test_file_names():
    assert strong_error_csv_name(SchemeId.SMS) == "strong_error_sms.csv"
    assert path_csv_name(SchemeId.AIS) == "path_ais.csv"
