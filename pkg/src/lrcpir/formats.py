"""Text and JSON formats for fields, matrices, codes and locality codes.

Matrix text files carry their field in a header comment::

    # field: GF(2^3):poly=[1,0,1,1]
    z^3 1 1 0 0 0 0
    0 0 0 z^3 z 1 0

Binary matrices are plain rows of ``0``/``1`` characters.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .code import LinearCode
from .gf import FieldSpec
from .lrc import LrcCode
from .matrix import BinaryMatrix, MatrixGF

FIELD_HEADER = "# field:"


def write_matrix_text(M: MatrixGF) -> str:
    lines = [f"{FIELD_HEADER} {M.field.literal}"]
    lines += [" ".join(row) for row in M.to_strings()]
    return "\n".join(lines) + "\n"


def read_matrix_text(text: str, field: FieldSpec | None = None) -> MatrixGF:
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith(FIELD_HEADER):
            if field is None:
                field = FieldSpec.parse(stripped[len(FIELD_HEADER):].strip())
            continue
        stripped = stripped.split("#", 1)[0].strip()
        if stripped:
            rows.append(stripped)
    if field is None:
        raise ValueError("matrix text has no field header and no field was given")
    return MatrixGF.from_strings(field, rows)


def matrix_to_json(M: MatrixGF) -> dict:
    return {"field": M.field.literal, "rows": M.nrows, "cols": M.ncols, "entries": M.to_strings()}


def matrix_from_json(data: dict) -> MatrixGF:
    field = FieldSpec.parse(data["field"])
    M = MatrixGF.from_strings(field, data["entries"]) if data["rows"] else MatrixGF.zeros(field, 0, data["cols"])
    if M.shape != (data["rows"], data["cols"]):
        raise ValueError(f"declared shape {(data['rows'], data['cols'])} != {M.shape}")
    return M


def binary_to_json(B: BinaryMatrix) -> dict:
    return {"rows": B.shape[0], "cols": B.shape[1], "bits": B.to_text().split()}


def binary_from_json(data: dict) -> BinaryMatrix:
    B = BinaryMatrix.from_text("\n".join(data["bits"]))
    if B.shape != (data["rows"], data["cols"]):
        raise ValueError("declared shape does not match the bit rows")
    return B


def code_to_json(C: LinearCode) -> dict:
    return {
        "field": C.field.literal,
        "n": C.n,
        "k": C.k,
        "H": C.H.to_strings(),
        "G": C.G.to_strings(),
    }


def code_from_json(data: dict) -> LinearCode:
    field = FieldSpec.parse(data["field"])
    H = MatrixGF.from_strings(field, data["H"])
    if data.get("G"):
        G = MatrixGF.from_strings(field, data["G"])
        code = LinearCode(field, G, H)
    else:
        code = LinearCode.from_parity_check(H)
    if (code.n, code.k) != (data["n"], data["k"]):
        raise ValueError(f"descriptor claims [{data['n']},{data['k']}], matrices give [{code.n},{code.k}]")
    return code


def lrc_to_json(C: LrcCode) -> dict:
    p = C.profile
    out = {
        "field": C.field.literal,
        "n": p.n,
        "k": p.k,
        "r": p.r,
        "delta": p.delta,
        "P_blocks": [P.to_strings() for P in C.P_blocks],
        "M_blocks": [M.to_strings() for M in C.M_blocks],
    }
    if C.H != C.template():
        out["H"] = C.H.to_strings()
    return out


def lrc_from_json(data: dict) -> LrcCode:
    field = FieldSpec.parse(data["field"])
    C = LrcCode.from_blocks(
        field, data["n"], data["k"], data["r"], data["delta"], data["P_blocks"], data["M_blocks"]
    )
    if "H" in data:
        C = LrcCode(C.profile, field, C.P_blocks, C.M_blocks, MatrixGF.from_strings(field, data["H"]))
    return C


def load_code(path) -> LrcCode | LinearCode:
    """Load either descriptor kind; locality descriptors carry ``r`` and ``delta``."""
    data = json.loads(Path(path).read_text())
    if "r" in data and "delta" in data:
        return lrc_from_json(data)
    return code_from_json(data)


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("lrcpir") / "fixtures" / name))


def load_fixture_matrix(name: str) -> MatrixGF:
    return read_matrix_text(fixture_path(name).read_text())


def load_fixture_binary(name: str) -> BinaryMatrix:
    return BinaryMatrix.from_text(fixture_path(name).read_text())
