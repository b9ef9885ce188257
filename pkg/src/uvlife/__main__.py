"""
`__main__.py` is executed when the package itself is invoked with
`python -m uvlife`, so the CLI is reachable without the `uvl` console script.
"""

from .cli.entry_point import entry_point

if __name__ == "__main__":
    entry_point()
