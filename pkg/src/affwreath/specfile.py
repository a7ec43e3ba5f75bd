# -*- coding: utf-8 -*-
"""
Algebra spec files (JSON or YAML) and algebra references on the command
line.

A reference is either a builtin, optionally with integer parameters
(``taft:q=3,degree=1``), or the path of a spec file. Builtin names win;
a file with the same name is reported and ignored.
"""
import logging
import os

import yaml

from . import dispatchers  # noqa: F401
from .catalog import BUILTINS, builtin
from .cyclotomic import make_params
from .decorators import mutable
from .exceptions import SpecError
from .fields import (
    BooleanField,
    ChildField,
    IntegerField,
    ScalarSequenceField,
    SequenceField,
    StringField,
)
from .frobenius import build_algebra
from .functions import from_json, from_yaml, to_json, to_model, to_yaml
from .parsing import parse_alg_elem, parse_tensor
from .scalars import format_scalar
from .tensor import tensor_space
from .validators import bits, composite, distinct, labels, naturals

log = logging.getLogger(__name__)


@mutable(strict=True)
class CyclotomicSpec(object):
    e = SequenceField(int, validator=naturals())
    c = SequenceField(lambda row: tuple(str(x) for x in row))
    general = BooleanField(default=False)
    n = IntegerField(required=False, minimum=1)


@mutable(strict=True)
class AlgebraSpec(object):
    basis = SequenceField(str, validator=composite(labels(), distinct))
    degrees = SequenceField(int)
    parities = SequenceField(int, validator=bits())
    mult = ScalarSequenceField(depth=3)
    trace = ScalarSequenceField()
    name = StringField(default="F")
    conductor = IntegerField(default=1, minimum=1)
    unit = ScalarSequenceField(required=False)
    cyclotomic = ChildField(CyclotomicSpec, required=False)


def read_spec(path):
    """Read an AlgebraSpec from a .json, .yaml or .yml file."""
    try:
        with open(path) as stream:
            if path.endswith(".json"):
                return from_json(stream, AlgebraSpec)
            return from_yaml(stream, AlgebraSpec)
    except (TypeError, ValueError, yaml.YAMLError) as e:
        raise SpecError("{}: {}".format(path, e))


def parse_spec(data):
    """An AlgebraSpec from its dictionary form."""
    try:
        return to_model(AlgebraSpec, data)
    except (TypeError, ValueError) as e:
        raise SpecError(str(e))


def split_reference(ref):
    """``"taft:q=3"`` -> ``("taft", {"q": 3})``."""
    name, _, rest = ref.partition(":")
    params = {}
    for item in filter(None, (x.strip() for x in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            raise SpecError("builtin parameter {!r} must look like key=value"
                            .format(item))
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise SpecError("builtin parameter {} must be an integer, got {!r}"
                            .format(key, value))
    return name, params


def load_algebra(ref, theta_bound=None):
    """
    Resolve ``ref`` to ``(F, spec)``; ``spec`` is None for builtins.
    """
    name, params = split_reference(ref)
    if name in BUILTINS:
        if os.path.exists(ref):
            log.warning("%r names a builtin algebra; ignoring the file of the "
                        "same name", ref)
        return builtin(name, **params), None
    if not os.path.exists(ref):
        raise SpecError("{!r} is neither a builtin ({}) nor a spec file"
                        .format(ref, ", ".join(sorted(BUILTINS))))
    spec = read_spec(ref)
    log.debug("loaded algebra spec %s from %s", spec.name, ref)
    return build_algebra(spec, theta_bound=theta_bound), spec


def load_params(F, spec):
    """CycloParams from the ``cyclotomic`` section of a spec file."""
    if spec is None:
        raise SpecError("the spec file has no cyclotomic section")
    if len(spec.c) != len(spec.e):
        raise SpecError("cyclotomic: e lists {} degrees but c lists {}"
                        .format(len(spec.e), len(spec.c)))
    entries = {}
    for k, (count, texts) in enumerate(zip(spec.e, spec.c), 1):
        if len(texts) != count:
            raise SpecError("cyclotomic: e_{} = {} but {} parameters given"
                            .format(k, count, len(texts)))
        if count:
            if spec.general:
                space = tensor_space(F, spec.n or 1)
                entries[k] = [parse_tensor(space, t) for t in texts]
            else:
                entries[k] = [parse_alg_elem(F, t) for t in texts]
    return make_params(F, entries, general=spec.general, n=spec.n)


def load_quotient_params(ref, theta_bound=None):
    F, spec = load_algebra(ref, theta_bound=theta_bound)
    if spec is None:
        raise SpecError("{!r} is a builtin; cyclotomic parameters need a spec "
                        "file".format(ref))
    return F, load_params(F, spec.cyclotomic)


def params_spec(params):
    """The CyclotomicSpec of built parameters."""
    F = params.frob
    top = max(k for k, _ in params.entries)
    by_k = dict(params.entries)
    e, c = [], []
    for k in range(1, top + 1):
        cs = by_k.get(k, ())
        e.append(len(cs))
        if params.general:
            c.append(tuple(str(t) for t in cs))
        else:
            c.append(tuple(
                str(F.element({w[0]: v for w, v in t.terms.items()}))
                for t in cs))
    return CyclotomicSpec(e=e, c=c, general=params.general,
                          n=params.slots if params.general else None)


def algebra_spec(F, params=None):
    return AlgebraSpec(
        name=F.name,
        conductor=F.conductor,
        basis=F.labels,
        degrees=F.degrees,
        parities=F.parities,
        mult=[[[format_scalar(c) for c in vec] for vec in row]
              for row in F.struct_consts],
        trace=[format_scalar(c) for c in F.trace_vec],
        unit=[format_scalar(c) for c in F.unit],
        cyclotomic=params_spec(params) if params else None,
    )


def dump_algebra(F, params=None, fmt="yaml"):
    """Serialize F (and cyclotomic parameters) so that loading rebuilds it."""
    spec = algebra_spec(F, params)
    if fmt == "json":
        return to_json(spec)
    return to_yaml(spec)
