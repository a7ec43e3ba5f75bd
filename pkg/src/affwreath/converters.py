from fractions import Fraction
from importlib import import_module
from inspect import isfunction

from .functions import to_model
from .scalars import CycScalar, format_scalar

CHILD_ERROR_MSG = "Failed to convert value ({}) to child object class ({}). " \
                  + "... [Original error message: {}]"


def to_child_field(cls):
    """
    Returns a callable instance that will convert a value to a child model.

    :param cls: class (or dotted name) of the child.
    :return: instance of ChildConverter.
    """

    class ChildConverter(object):

        def __init__(self, cls):
            self._cls = cls

        @property
        def cls(self):
            return resolve_class(self._cls)

        def __call__(self, value):
            try:
                return to_model(self.cls, value)
            except (TypeError, ValueError) as e:
                raise ValueError(CHILD_ERROR_MSG.format(value, self.cls,
                                                        str(e)))

    return ChildConverter(cls)


def to_sequence_field(convert=None):
    """
    Returns a converter that turns any iterable into a tuple, converting
    each item with ``convert``.
    """

    def converter(values):
        if values is None:
            return None
        return tuple(convert(v) if convert else v for v in values)

    return converter


def scalar_text(value):
    """Scalars are stored as text and parsed once the conductor is known."""
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, CycScalar):
        return format_scalar(value)
    if isinstance(value, bool):
        raise ValueError("{!r} is not a scalar".format(value))
    if isinstance(value, (int, Fraction)):
        return str(value)
    raise ValueError("{!r} is not a scalar".format(value))


def int_if_not_none(value):
    if value is None or isinstance(value, bool):
        return value
    return int(value)


def to_scalar_sequence(depth=1):
    """Nested sequences of ``depth`` levels with scalar text leaves."""

    def converter(values):
        if values is None:
            return None
        if depth == 1:
            return tuple(scalar_text(v) for v in values)
        inner = to_scalar_sequence(depth - 1)
        return tuple(inner(v) for v in values)

    return converter


def resolve_class(cls):
    if isfunction(cls):
        return cls()
    if isinstance(cls, str):
        module_name, _, class_name = cls.rpartition(".")
        return getattr(import_module(module_name), class_name)
    return cls
