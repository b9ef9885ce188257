"""Entry point for the uvl CLI.

Why:
    The geospatial stack (rasterio, shapely, pyproj) ships compiled wheels. A
    broken install should end with a short hint instead of an `ImportError`
    traceback.
"""

import sys


def entry_point() -> None:
    """Entry point for the uvl CLI."""
    try:
        from .app import app as cli_app  # NOQA: PLC0415
    except ImportError as e:
        error_message = f"""
uvlife could not import one of its dependencies:

    {e}

Reinstall it in a clean environment, for example:

    pip install --force-reinstall uvlife
"""
        sys.stderr.write(error_message)
        raise SystemExit(1) from None

    cli_app()
