"""Text file formats shared by the library and the CLI.

Matrix format:
    line 1:  q n_rows n_cols     (q rendered p^e for extension fields)
    then n_rows lines of n_cols space-separated canonical integers.

Code format: a tag line ``G`` (rows generate the code) or ``H`` (rows
are parity checks, the code is their kernel) followed by a matrix.

Matrix product spec format: blank-line-separated blocks, the first a
matrix (the mixing matrix A), each following block a code sharing the
same field.  Comment lines starting with '#' are ignored everywhere.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .codes import DTYPE, LinearCode
from .field import Field, FieldError, GF
from .matrix_product import MatrixProductSpec


class ParseError(ValueError):
    """Malformed input file."""


def format_order(field: Field) -> str:
    return str(field.q) if field.e == 1 else f"{field.p}^{field.e}"


def parse_order(token: str) -> Field:
    """Field from an order token: '7', '2^4', or a plain prime power like 8."""
    try:
        if "^" in token:
            p_str, e_str = token.split("^", 1)
            return GF(int(p_str), int(e_str))
        q = int(token)
        p = 2
        while p * p <= q:
            if q % p == 0:
                e = 0
                v = q
                while v % p == 0:
                    v //= p
                    e += 1
                if v != 1:
                    raise ParseError(f"{q} is not a prime power")
                return GF(p, e)
            p += 1
        return GF(q, 1)
    except (ValueError, FieldError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad field order token {token!r}: {exc}") from exc


def _clean_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def _parse_matrix_lines(lines: list[str]) -> tuple[Field, np.ndarray]:
    if not lines:
        raise ParseError("empty matrix block")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(f"matrix header must be 'q n_rows n_cols', got {lines[0]!r}")
    field = parse_order(head[0])
    try:
        rows, cols = int(head[1]), int(head[2])
    except ValueError as exc:
        raise ParseError(f"bad matrix dimensions in {lines[0]!r}") from exc
    if rows < 0 or cols < 1:
        raise ParseError(f"bad matrix dimensions {rows}x{cols}")
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} matrix rows, found {len(lines) - 1}")
    M = np.zeros((rows, cols), dtype=DTYPE)
    for i, ln in enumerate(lines[1:]):
        parts = ln.split()
        if len(parts) != cols:
            raise ParseError(f"row {i + 1} has {len(parts)} entries, expected {cols}")
        try:
            vals = [int(tok) for tok in parts]
        except ValueError as exc:
            raise ParseError(f"non-integer entry in row {i + 1}") from exc
        for v in vals:
            if not 0 <= v < field.q:
                raise ParseError(f"entry {v} outside [0, {field.q}) in row {i + 1}")
        M[i] = vals
    return field, M


def _matrix_text(field: Field, M: np.ndarray) -> str:
    lines = [f"{format_order(field)} {M.shape[0]} {M.shape[1]}"]
    lines += [" ".join(str(int(v)) for v in row) for row in M]
    return "\n".join(lines) + "\n"


def load_matrix(path) -> tuple[Field, np.ndarray]:
    return _parse_matrix_lines(_clean_lines(Path(path).read_text()))


def save_matrix(path, field: Field, M) -> None:
    Path(path).write_text(_matrix_text(field, np.asarray(M, dtype=DTYPE)))


def _parse_code_lines(lines: list[str]) -> LinearCode:
    if not lines:
        raise ParseError("empty code block")
    tag = lines[0]
    if tag not in ("G", "H"):
        raise ParseError(f"code block must start with tag 'G' or 'H', got {tag!r}")
    field, M = _parse_matrix_lines(lines[1:])
    try:
        if tag == "G":
            return LinearCode(field, M)
        return LinearCode.from_parity_check(field, M)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_code(path) -> LinearCode:
    return _parse_code_lines(_clean_lines(Path(path).read_text()))


def save_code(path, code: LinearCode, tag: str = "G") -> None:
    if tag not in ("G", "H"):
        raise ValueError("tag must be 'G' or 'H'")
    M = code.generator if tag == "G" else code.parity_check
    Path(path).write_text(f"{tag}\n" + _matrix_text(code.field, M))


def _split_blocks(text: str) -> list[list[str]]:
    blocks: list[list[str]] = []
    cur: list[str] = []
    for raw in text.splitlines():
        ln = raw.strip()
        if ln.startswith("#"):
            continue
        if not ln:
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append(ln)
    if cur:
        blocks.append(cur)
    return blocks


def load_mpc_spec(path) -> MatrixProductSpec:
    """Mixing matrix block followed by one code block per constituent."""
    blocks = _split_blocks(Path(path).read_text())
    if len(blocks) < 2:
        raise ParseError("spec file needs a mixing matrix block and at least one code block")
    field, A = _parse_matrix_lines(blocks[0])
    codes = []
    for blk in blocks[1:]:
        code = _parse_code_lines(blk)
        if code.field != field:
            raise ParseError("all blocks of a spec file must share the same field")
        codes.append(code)
    try:
        return MatrixProductSpec(tuple(codes), A)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def save_mpc_spec(path, spec: MatrixProductSpec) -> None:
    parts = [_matrix_text(spec.field, spec.mixer)]
    for code in spec.codes:
        parts.append("G\n" + _matrix_text(spec.field, code.generator))
    Path(path).write_text("\n".join(parts))
