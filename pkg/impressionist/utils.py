import hashlib
import logging
import time
from contextlib import contextmanager
from typing import Dict, Iterable

logger = logging.getLogger(__name__)


@contextmanager
def timeit(ops):
    """Log the wall time spent inside the block."""
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.info('[%s] took %.3f s', ops, time.perf_counter() - start)


def sha256_file(path: str, chunk_size: int = 1 << 20) -> str:
    digest = hashlib.sha256()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(chunk_size), b''):
            digest.update(chunk)
    return digest.hexdigest()


def normalize_key(key: str) -> str:
    """
    Map a flag or config key onto its argument field name.

    Examples::

        >>> normalize_key('--s-min'), normalize_key('tau_prime'), normalize_key('lambda')
        ('s_min', 'tau_prime', 'lambda_')
    """
    name = key.strip().lstrip('-').replace('-', '_')
    if name == 'lambda':
        name = 'lambda_'
    return name


def flag_name(field_name: str) -> str:
    """
    Examples::

        >>> flag_name('lambda_small'), flag_name('lambda_')
        ('--lambda-small', '--lambda')
    """
    return '--' + field_name.rstrip('_').replace('_', '-')


def missing(settings: Dict, names: Iterable[str]):
    """Names whose value is absent from settings."""
    return [name for name in names if settings.get(name) is None]
