import contextlib
import hashlib
import io
import json
import os
import pathlib
import tempfile
from collections.abc import Callable, Iterator
from typing import Any

import pandas as pd


def atomic_write_bytes(path: pathlib.Path, contents: bytes) -> pathlib.Path:
    """Write bytes to `path` through a temporary sibling file and `os.replace`.

    Why:
        A crashed or interrupted run must never leave a half-written matrix or
        manifest behind. The rename is atomic on the same file system, so readers
        either see the old file or the complete new one.

    Args:
        path: Destination file.
        contents: Bytes to write.

    Returns:
        The destination path.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    with atomic_path(path) as temporary_path:
        temporary_path.write_bytes(contents)
    return path


def atomic_write_text(path: pathlib.Path, contents: str) -> pathlib.Path:
    return atomic_write_bytes(path, contents.encode("utf-8"))


def atomic_write_json(path: pathlib.Path, data: Any) -> pathlib.Path:
    """Write JSON with sorted keys so identical data gives identical bytes."""
    return atomic_write_text(path, dumps_json(data))


def dumps_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def atomic_write_csv(
    path: pathlib.Path, frame: pd.DataFrame, float_format: str = "%.6f"
) -> pathlib.Path:
    """Write a table without its index, with Unix line endings and fixed digits."""
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=float_format, lineterminator="\n")
    return atomic_write_text(path, buffer.getvalue())


@contextlib.contextmanager
def atomic_path(path: pathlib.Path) -> Iterator[pathlib.Path]:
    """Yield a temporary path next to `path`; move it into place on success.

    Used by writers that insist on opening the file themselves (GDAL drivers).

    Example:
        ```py
        with atomic_path(pathlib.Path("mask.tif")) as tmp:
            with rasterio.open(tmp, "w", **profile) as dst:
                dst.write(array, 1)
        ```
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    file_descriptor, temporary_name = tempfile.mkstemp(
        dir=path.parent, prefix=f".{path.name}.", suffix=path.suffix
    )
    os.close(file_descriptor)
    temporary_path = pathlib.Path(temporary_name)
    try:
        yield temporary_path
        os.replace(temporary_path, path)
    finally:
        temporary_path.unlink(missing_ok=True)


def file_digest(path: pathlib.Path) -> str:
    """SHA-256 of a file, or of every file below a directory in sorted order."""
    digest = hashlib.sha256()
    if path.is_dir():
        files = sorted(p for p in path.rglob("*") if p.is_file())
    else:
        files = [path]
    for file in files:
        if path.is_dir():
            digest.update(file.relative_to(path).as_posix().encode("utf-8"))
        with file.open("rb") as stream:
            for chunk in iter(lambda: stream.read(1 << 20), b""):
                digest.update(chunk)
    return digest.hexdigest()


def map_in_order[T, R](
    function: Callable[[T], R], items: list[T], jobs: int = 1
) -> list[R]:
    """Apply `function` to every item, optionally on a thread pool.

    Results keep the order of `items`, so the outcome never depends on `jobs`.
    """
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    from concurrent.futures import ThreadPoolExecutor  # NOQA: PLC0415

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, items))
