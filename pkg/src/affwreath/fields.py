# -*- coding: utf-8 -*-
from attr import NOTHING, attrib, validators

from . import converters
from .validators import at_least, composite


def _init_default(required, default, optional_default):
    if not required and default is NOTHING:
        default = optional_default
    return default


def _init_validator(required, cls, *additional):
    validator = validators.instance_of(cls)
    if additional:
        validator = composite(*(list(additional) + [validator]))
    return validator if required else validators.optional(validator)


def _field_metadata(metadata, **kwargs):
    metadata = dict(metadata or {})
    metadata.update((k, v) for k, v in kwargs.items() if v is not None)
    return metadata


def BooleanField(default=NOTHING, required=True, repr=True, eq=True,
                 key=None, metadata=None):
    """
    Create new bool field on a model.

    :param default: any boolean value
    :param bool required: whether or not the object is invalid if not provided.
    :param bool repr: include this field in the object's repr.
    :param bool eq: include this field in generated comparison.
    :param string key: override name of the value when converted to dict.
    :param dict metadata: an arbitrary mapping for third-party components.
    """
    default = _init_default(required, default, None)
    validator = _init_validator(required, bool)
    return attrib(default=default, validator=validator, repr=repr, eq=eq,
                  metadata=_field_metadata(metadata, key=key), type=bool)


def IntegerField(default=NOTHING, required=True, minimum=None, repr=True,
                 eq=True, key=None, metadata=None):
    """
    Create new int field on a model.

    :param default: any integer value
    :param bool required: whether or not the object is invalid if not provided.
    :param int minimum: smallest accepted value.
    :param bool repr: include this field in the object's repr.
    :param bool eq: include this field in generated comparison.
    :param string key: override name of the value when converted to dict.
    :param dict metadata: an arbitrary mapping for third-party components.
    """
    default = _init_default(required, default, None)
    extra = [at_least(minimum)] if minimum is not None else []
    validator = _init_validator(required, int, *extra)
    return attrib(default=default, converter=converters.int_if_not_none,
                  validator=validator, repr=repr, eq=eq,
                  metadata=_field_metadata(metadata, key=key), type=int)


def StringField(default=NOTHING, required=True, repr=True, eq=True,
                key=None, metadata=None):
    """
    Create new str field on a model.

    :param default: any string value
    :param bool required: whether or not the object is invalid if not provided.
    :param bool repr: include this field in the object's repr.
    :param bool eq: include this field in generated comparison.
    :param string key: override name of the value when converted to dict.
    :param dict metadata: an arbitrary mapping for third-party components.
    """
    default = _init_default(required, default, None)
    validator = _init_validator(required, str)
    return attrib(default=default, validator=validator, repr=repr, eq=eq,
                  metadata=_field_metadata(metadata, key=key), type=str)


def ChildField(cls, default=NOTHING, required=True, repr=True, eq=True,
               key=None, metadata=None):
    """
    Create new child field on a model.

    :param cls: class (or dotted name) of the child model.
    :param default: any object value of type cls
    :param bool required: whether or not the object is invalid if not provided.
    :param bool repr: include this field in the object's repr.
    :param bool eq: include this field in generated comparison.
    :param string key: override name of the value when converted to dict.
    :param dict metadata: an arbitrary mapping for third-party components.
    """
    default = _init_default(required, default, None)
    converter = converters.to_child_field(cls)
    validator = _init_validator(required,
                                object if isinstance(cls, str) else cls)
    return attrib(default=default, converter=converter, validator=validator,
                  repr=repr, eq=eq,
                  metadata=_field_metadata(metadata, key=key), type=cls)


def SequenceField(item=None, default=NOTHING, required=True, validator=None,
                  repr=True, eq=True, key=None, metadata=None):
    """
    Create new sequence field on a model; values are stored as tuples.

    :param item: converter applied to each entry (e.g. ``int``, ``str``).
    :param default: any iterable value
    :param bool required: whether or not the object is invalid if not provided.
    :param validator: extra validator run on the whole tuple.
    :param bool repr: include this field in the object's repr.
    :param bool eq: include this field in generated comparison.
    :param string key: override name of the value when converted to dict.
    :param dict metadata: an arbitrary mapping for third-party components.
    """
    default = _init_default(required, default, None)
    extra = [validator] if validator else []
    return attrib(default=default,
                  converter=converters.to_sequence_field(item),
                  validator=_init_validator(required, tuple, *extra),
                  repr=repr, eq=eq,
                  metadata=_field_metadata(metadata, key=key), type=tuple)


def ScalarSequenceField(depth=1, default=NOTHING, required=True, repr=True,
                        eq=True, key=None, metadata=None):
    """
    Create new field of nested scalar sequences (``depth`` levels deep);
    structure constants use ``depth=3``.

    :param int depth: nesting level of the sequences.
    :param default: any nested iterable of scalars
    :param bool required: whether or not the object is invalid if not provided.
    :param bool repr: include this field in the object's repr.
    :param bool eq: include this field in generated comparison.
    :param string key: override name of the value when converted to dict.
    :param dict metadata: an arbitrary mapping for third-party components.
    """
    default = _init_default(required, default, None)
    return attrib(default=default,
                  converter=converters.to_scalar_sequence(depth),
                  validator=_init_validator(required, tuple), repr=repr,
                  eq=eq, metadata=_field_metadata(metadata, key=key,
                                                  depth=depth),
                  type=tuple)

