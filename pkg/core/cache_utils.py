"""
Cache utilities for expensive structural computations.
"""

from django.core.cache import cache
from django.conf import settings
from functools import wraps
import hashlib
import logging

logger = logging.getLogger(__name__)


def computation_key(cache_key_prefix, args, kwargs):
    """Cache key from a prefix and an md5 digest of the arguments' repr."""
    key_data = f"{args!r}_{kwargs!r}"
    return f"{cache_key_prefix}_{hashlib.md5(key_data.encode()).hexdigest()}"


def cache_computation(cache_key_prefix, timeout=None):
    """
    Decorator for caching pure computations on immutable values.

    Args:
        cache_key_prefix (str): Prefix for the cache key
        timeout (int): Cache timeout in seconds (None for COSPAN_CACHE_TIMEOUT)
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            cache_key = computation_key(cache_key_prefix, args, kwargs)

            try:
                cached_result = cache.get(cache_key)
                if cached_result is not None:
                    logger.debug(f"Cache hit for {cache_key}")
                    return cached_result
            except Exception as e:
                logger.warning(f"Cache get failed for {cache_key}: {e}")

            result = func(*args, **kwargs)

            try:
                if timeout is None:
                    cache_timeout = getattr(settings, 'COSPAN_CACHE_TIMEOUT', 300)
                else:
                    cache_timeout = timeout

                cache.set(cache_key, result, cache_timeout)
                logger.debug(f"Cached result for {cache_key} (timeout: {cache_timeout}s)")
            except Exception as e:
                logger.warning(f"Cache set failed for {cache_key}: {e}")

            return result
        return wrapper
    return decorator


def invalidate_computation(cache_key_prefix, *args, **kwargs):
    """Drop one cached computation."""
    cache_key = computation_key(cache_key_prefix, args, kwargs)
    try:
        cache.delete(cache_key)
        logger.info(f"Invalidated cache entry {cache_key}")
    except Exception as e:
        logger.warning(f"Cache invalidation failed for {cache_key}: {e}")
