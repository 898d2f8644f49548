import functools
import json
import logging
import os
from fractions import Fraction
from typing import Any, Callable, TypeVar

import numpy as np

F = TypeVar('F', bound=Callable[..., Any])


def default(env_name: str, default_value: Any, output_type: Any = str) -> Any:
    """
    Read the value of an environment variable or return a default value
    if not defined
    """
    value = os.environ.get(env_name)
    if value is not None:
        return output_type(value)
    if default_value is None:
        return None
    return output_type(default_value)


def catch_all_and_log(f: F) -> F:
    """
    Decorator to catch all exception and log the error
    """

    @functools.wraps(f)
    def inner(*args: Any, **kwargs: Any) -> Any:
        try:
            return f(*args, **kwargs)
        except Exception:
            logging.exception('catch_all_and_log: caught exception!')
            return None

    return inner  # type: ignore


def log_level() -> int:
    name = default('REEDECOMP_LOG_LEVEL', default_value='WARNING').upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ValueError(f'unknown log level REEDECOMP_LOG_LEVEL={name}')
    return level


class ExactEncoder(json.JSONEncoder):
    """
    export exact values (QS2, QPoly, MPoly, fractions) and numpy arrays in JSON.

    Exact ring elements are written using their canonical string so that
    a report is byte-stable across runs.

    >>> json.dump(obj, f, indent=3, cls=ExactEncoder)
    """

    def default(self, obj: Any) -> Any:
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, (np.int8, np.int16, np.int32, np.int64, np.uint8, np.uint16, np.uint32, np.uint64)):
            return int(obj)
        if isinstance(obj, Fraction):
            return str(obj) if obj.denominator != 1 else obj.numerator
        if hasattr(obj, 'to_json'):
            return obj.to_json()
        if isinstance(obj, (set, frozenset)):
            return sorted(obj, key=str)
        return json.JSONEncoder.default(self, obj)
