import logging
from collections.abc import Iterable
from typing import TypeVar

_log = logging.getLogger(__name__)

T = TypeVar("T")

try:
    from tqdm import tqdm  # pyright: ignore[reportAssignmentType]
except ImportError:
    # tqdm lives in the dev group only
    def tqdm(iterable, desc=None, total=None, disable=False, **_):
        if not disable:
            _log.info(f"{desc}: {total if total is not None else '?'} item(s)")
        return iterable


def progress(iterable: Iterable[T], desc: str, total: int | None = None, enabled: bool = False) -> Iterable[T]:
    """Wrap ``iterable`` in a progress bar when ``enabled``."""
    return tqdm(iterable, desc=desc, total=total, disable=not enabled)
