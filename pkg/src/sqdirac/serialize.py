"""Deterministic JSON and CSV output.

Complex numbers become ``[re, im]``, floats are written with 17
significant digits and dict keys keep insertion order, so identical
inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from typing import Any

import numpy as np

__all__ = ["to_jsonable", "dumps_json", "spectrum_csv"]


def _float(x: float):
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return _FLOAT_TAG + format(x, ".17g")


# floats travel through json.dumps as tagged strings, then lose their quotes
_FLOAT_TAG = "@f17@"
_FLOAT_RE = re.compile('"' + _FLOAT_TAG + r'([-+.0-9eE]+)"')


def to_jsonable(obj: Any):
    """Convert nested results into plain JSON-ready values."""
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_float(obj.real), _float(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return _float(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(obj: Any) -> str:
    text = json.dumps(to_jsonable(obj), indent=2, allow_nan=False)
    return _FLOAT_RE.sub(r"\1", text) + "\n"


CSV_COLUMNS = ("branch", "k", "Re K", "Im K", "det_residual", "unit_modulus_dev")


def spectrum_csv(spectrum) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in spectrum.roots:
        w.writerow([r.branch_index] + [format(v, ".17g") for v in
                                       (r.k, r.K.real, r.K.imag, r.det_residual, r.unit_modulus_dev)])
    return buf.getvalue()
