"""
Vector files: one value per line, or a single JSON array when the path ends
in .json. Complex values are written "re im" on a line, or as [re, im] pairs
in JSON. "-" means stdin / stdout.
"""

from __future__ import annotations

import json
import sys
from typing import List, Optional, TextIO

import numpy as np

import config.config as config
from utils.errors import SizeMismatchError, VectorFileError


def _is_json(path: str) -> bool:
    return path.lower().endswith(".json")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise VectorFileError(f"{path}: {e.strerror}") from e


def _parse_number(token: str, where: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise VectorFileError(f"{where}: not a number: {token!r}") from None


def _parse_lines(text: str, path: str, complex_values: bool) -> List[complex]:
    values: List[complex] = []
    lines = text.splitlines()
    # trailing blank lines are tolerated, blank lines in between are not
    while lines and not lines[-1].strip():
        lines.pop()
    for number, line in enumerate(lines, start=1):
        where = f"{path}:{number}"
        tokens = line.split()
        if not tokens:
            raise VectorFileError(f"{where}: empty line")
        if complex_values and len(tokens) == 2:
            values.append(complex(_parse_number(tokens[0], where), _parse_number(tokens[1], where)))
        elif len(tokens) == 1:
            values.append(_parse_number(tokens[0], where))
        else:
            raise VectorFileError(f"{where}: expected {'one or two numbers' if complex_values else 'one number'}, got {len(tokens)}")
    return values


def _parse_json(text: str, path: str, complex_values: bool) -> List[complex]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise VectorFileError(f"{path}:{e.lineno}: {e.msg}") from e
    if not isinstance(data, list):
        raise VectorFileError(f"{path}:1: expected a JSON array")
    values: List[complex] = []
    for index, item in enumerate(data):
        where = f"{path}:1 (element {index})"
        if complex_values and isinstance(item, list) and len(item) == 2:
            values.append(complex(_parse_number(str(item[0]), where), _parse_number(str(item[1]), where)))
        elif isinstance(item, (int, float)) and not isinstance(item, bool):
            values.append(float(item))
        else:
            raise VectorFileError(f"{where}: unsupported value {item!r}")
    return values


def read_vector(path: str, expected_length: int, complex_values: bool = False) -> np.ndarray:
    """Parse a vector file and check its length."""
    text = _read_text(path)
    values = _parse_json(text, path, complex_values) if _is_json(path) else _parse_lines(text, path, complex_values)
    if len(values) != expected_length:
        raise SizeMismatchError(f"{path}: expected {expected_length} values, found {len(values)}")
    return np.array(values, dtype=np.complex128 if complex_values else np.float64)


def _format_real(value: float) -> str:
    return f"{float(value):.{config.FLOAT_DIGITS}g}"


def format_vector(values: np.ndarray, as_json: bool = False) -> str:
    values = np.asarray(values)
    is_complex = np.iscomplexobj(values)
    if as_json:
        if not np.all(np.isfinite(values)):
            raise VectorFileError("JSON output cannot hold NaN or infinite values")
        if is_complex:
            items = [f"[{_format_real(v.real)}, {_format_real(v.imag)}]" for v in values]
        else:
            items = [_format_real(v) for v in values]
        return "[" + ", ".join(items) + "]\n"
    if is_complex:
        return "".join(f"{_format_real(v.real)} {_format_real(v.imag)}\n" for v in values)
    return "".join(f"{_format_real(v)}\n" for v in values)


def write_vector(values: np.ndarray, path: str, stdout: Optional[TextIO] = None) -> None:
    text = format_vector(values, as_json=path != "-" and _is_json(path))
    if path == "-":
        (stdout or sys.stdout).write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise VectorFileError(f"{path}: {e.strerror}") from e
