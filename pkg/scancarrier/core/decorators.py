import functools
from typing import List, Optional

from scancarrier.core.config import settings
from scancarrier.core.exceptions import CacheMissError
from scancarrier.utils.helpers import get_logger
from scancarrier.utils.keygen import generate_cache_key

logger = get_logger(__name__)


def memoize_path(
    key_prefix: Optional[str] = None,
    ignore_args: Optional[List[str]] = None,
):
    """
    Memoization decorator that keeps generated scan paths in `settings.path_cache`

    :param key_prefix: Custom prefix for cache keys
    :param ignore_args: List of argument names to exclude from cache key
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            cache_key = generate_cache_key(
                func=func,
                args=args,
                kwargs=kwargs,
                key_prefix=key_prefix,
                ignore_args=ignore_args,
            )
            cache = settings.path_cache

            try:
                path = cache.get(cache_key)
                logger.debug(f"Path cache hit for key: {cache_key}")
                return path
            except CacheMissError:
                logger.debug(f"Path cache miss for key: {cache_key}")

            path = func(*args, **kwargs)
            cache.set(cache_key, path)
            return path

        wrapper.cache_clear = lambda: settings.path_cache.clear()
        return wrapper

    return decorator
