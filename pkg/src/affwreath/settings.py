# -*- coding: utf-8 -*-
"""
Runtime limits, read from the environment once and overridable in tests.
"""
import logging
import os

from attr import attrib

from .decorators import mutable
from .exceptions import BadParams

log = logging.getLogger(__name__)

_ENV = {
    'max_dim': 'AWPA_MAX_DIM',
    'theta_bound': 'AWPA_THETA_BOUND',
    'suite_instances': 'AWPA_SUITE_INSTANCES',
}


def _positive(instance, attribute, value):
    if not isinstance(value, int) or value < 1:
        raise BadParams("{} must be a positive integer, got {!r}".format(
            attribute.name, value))


@mutable
class Settings(object):
    max_dim = attrib(default=20000, validator=_positive)
    theta_bound = attrib(default=64, validator=_positive)
    suite_instances = attrib(default=200, validator=_positive)

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        values = {}
        for name, var in _ENV.items():
            raw = environ.get(var)
            if raw is None:
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise BadParams("{}={!r} is not an integer".format(var, raw))
            log.debug("setting %s=%s from %s", name, raw, var)
        return cls(**values)


_current = []


def get_settings():
    if not _current:
        _current.append(Settings.from_env())
    return _current[0]


def set_settings(settings):
    """Install ``settings`` (or None to re-read the environment)."""
    del _current[:]
    if settings is not None:
        _current.append(settings)
