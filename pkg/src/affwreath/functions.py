import json
from collections import OrderedDict
from functools import singledispatch

import yaml
from attr import fields


@singledispatch
def to_dict(obj, **kwargs):
    """
    Plain data for ``obj``: models become ordered mappings of their fields,
    types registered in ``dispatchers`` become text or lists, anything else
    is returned as is.

    :param obj: object instance
    :param kwargs: suppress_empty_values drops unset optional fields
    """
    if is_model(obj.__class__):
        return model_to_dict(obj, **kwargs)
    return obj


def _file_key(attribute):
    return attribute.metadata.get('key') or attribute.name


def model_to_dict(obj, **kwargs):
    """Fields in declaration order, under their spec file keys."""
    skip_empty = kwargs.get("suppress_empty_values", False)
    out = OrderedDict()
    for a in fields(obj.__class__):
        value = to_dict(getattr(obj, a.name), **kwargs)
        if value is None and skip_empty:
            continue
        out[_file_key(a)] = value
    return out


def to_model(cls, value):
    """
    Build a ``cls`` model from a mapping read from a spec file.

    :param cls: model class
    :param value: mapping, model instance or None
    :return: the model; instances of ``cls`` and None pass through
    """
    if value is None or isinstance(value, cls):
        return value
    if is_model(cls) and isinstance(value, dict):
        return cls(**_attribute_kwargs(cls, value))
    return cls(value)


def _attribute_kwargs(cls, data):
    """File keys to attribute names; strict models reject unknown keys."""
    known = {_file_key(a): a.name for a in fields(cls)}
    if getattr(cls, '__affwreath_strict__', False):
        extra = sorted(set(data) - set(known))
        if extra:
            raise ValueError("Extra keys (strict mode): {}".format(extra))
    return {known[k]: v for k, v in data.items() if k in known}


def is_model(cls):
    """Whether *cls* is an ``attrs`` class."""
    return getattr(cls, "__attrs_attrs__", None) is not None


_MAPPING_TAG = yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG
_SEQUENCE_TAG = yaml.resolver.BaseResolver.DEFAULT_SEQUENCE_TAG


class SpecLoader(yaml.SafeLoader):
    """Safe loader that keeps the key order of every mapping."""


def _construct_ordered(loader, node):
    loader.flatten_mapping(node)
    return OrderedDict(loader.construct_pairs(node))


SpecLoader.add_constructor(_MAPPING_TAG, _construct_ordered)


class SpecDumper(yaml.SafeDumper):
    """
    Safe dumper for spec files: mappings are written in field order and a
    row of scalar cells (a trace vector, one product in ``mult``) stays on
    a single line.
    """


def _represent_ordered(dumper, data):
    return dumper.represent_mapping(_MAPPING_TAG, data.items())


def _represent_row(dumper, data):
    flat = not any(isinstance(x, (list, tuple, dict)) for x in data)
    return dumper.represent_sequence(_SEQUENCE_TAG, data, flow_style=flat)


SpecDumper.add_representer(OrderedDict, _represent_ordered)
SpecDumper.add_representer(list, _represent_row)
SpecDumper.add_representer(tuple, _represent_row)


def to_yaml(obj, stream=None, **kwargs):
    """
    Write ``obj`` as YAML with the spec file layout.

    :param obj: model or plain value
    :param stream: file to write to; the text is returned when None
    :param kwargs: arguments to pass to to_dict
    """
    return yaml.dump(to_dict(obj, **kwargs), stream, Dumper=SpecDumper,
                     default_flow_style=False)


def from_yaml(stream, cls=None):
    """Read YAML text or a stream, into ``cls`` when given. An empty
    document reads as an empty mapping."""
    data = yaml.load(stream, Loader=SpecLoader) or OrderedDict()
    return to_model(cls, data) if cls else data


def to_json(obj, **kwargs):
    """
    JSON text of ``obj``: four-space indent and sorted keys, so output is
    stable between runs.

    :param obj: model or plain value
    :param kwargs: arguments to pass to to_dict
    """
    return json.dumps(to_dict(obj, **kwargs), indent=4, sort_keys=True)


def from_json(stream, cls=None):
    """Read JSON text or a stream, into ``cls`` when given."""
    text = stream.read() if hasattr(stream, 'read') else stream
    data = json.loads(text, object_pairs_hook=OrderedDict)
    return to_model(cls, data) if cls else data
