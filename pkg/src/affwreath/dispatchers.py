"""``to_dict`` for the algebraic value types: everything becomes text."""
from collections import OrderedDict
from fractions import Fraction

from .functions import to_dict
from .perms import Perm, format_perm
from .scalars import CycScalar, format_scalar
from .types import SparseElem


@to_dict.register(list)  # noqa F811
@to_dict.register(set)
@to_dict.register(frozenset)
@to_dict.register(tuple)
def _(obj, **kwargs):
    suppress_empty_values = kwargs.get("suppress_empty_values", False)
    if not suppress_empty_values or len(obj):
        items = [to_dict(i, **kwargs) for i in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items


@to_dict.register(dict)  # noqa F811
def _(obj, **kwargs):
    suppress_empty_values = kwargs.get("suppress_empty_values", False)
    dict_factory = kwargs.get("dict_factory", OrderedDict)

    items = []
    for kk, vv in obj.items():
        vv = to_dict(vv, **kwargs)
        if not suppress_empty_values or vv is not None:
            items.append((str(to_dict(kk, **kwargs)), vv))

    if not suppress_empty_values or items:
        return dict_factory(items)


@to_dict.register(CycScalar)  # noqa F811
def _(obj, **kwargs):
    return format_scalar(obj)


@to_dict.register(Fraction)  # noqa F811
def _(obj, **kwargs):
    return str(obj)


@to_dict.register(Perm)  # noqa F811
def _(obj, **kwargs):
    return format_perm(obj.images)


@to_dict.register(SparseElem)  # noqa F811
def _(obj, **kwargs):
    return str(obj)
