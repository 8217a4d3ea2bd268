import functools

from loguru import logger

from .exceptions import CCSGraphError, ResourceCapExceeded


def log_errors(func):
    """
    Log errors raised by an engine operation and normalize allocation failures.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CCSGraphError as e:
            logger.debug(
                "{} during '{}': {}",
                type(e).__name__,
                func.__name__,
                str(e),
            )
            raise
        except MemoryError as e:
            logger.opt(exception=True).error(
                "MemoryError during '{}' [{}.{}]: {}",
                func.__name__,
                type(e).__module__,
                type(e).__qualname__,
                str(e),
            )
            raise ResourceCapExceeded(
                "Operation '%s' ran out of memory; lower the order cap" % func.__name__
            ) from e

    return wrapper  # type: ignore[return-value]
