import re

from attr import attrib, attrs


@attrs(repr=False, slots=True)
class _CompositeValidator(object):
    validators = attrib()

    def __call__(self, inst, attr, value):
        for validator in self.validators:
            validator(inst, attr, value)

    def __repr__(self):
        return "<composite validator for validators {!r}>".format(
            self.validators)


def composite(*validators):
    """A validator that runs each of ``validators`` in turn."""
    return _CompositeValidator(validators)


@attrs(repr=False, slots=True)
class _EachValidator(object):
    pattern = attrib()
    description = attrib()

    def __call__(self, inst, attr, value):
        if value is None:
            return
        for item in value:
            if not re.match(self.pattern, str(item)):
                raise ValueError(
                    "'{name}' entries must be {what} (got {item!r}).".format(
                        name=attr.name, what=self.description, item=item))

    def __repr__(self):
        return "<each validator for {!r}>".format(self.pattern)


def labels():
    """Basis labels: no spaces, commas, parentheses or operators."""
    return _EachValidator(r"^[^\s,()+\-*/_\[\]]+$", "basis labels")


def bits():
    return _EachValidator(r"^[01]$", "0 or 1")


def naturals():
    return _EachValidator(r"^\d+$", "nonnegative integers")


@attrs(repr=False, slots=True)
class _AtLeastValidator(object):
    bound = attrib()

    def __call__(self, inst, attr, value):
        if value is not None and value < self.bound:
            raise ValueError("'{name}' must be at least {bound} (got {value})"
                             .format(name=attr.name, bound=self.bound,
                                     value=value))

    def __repr__(self):
        return "<at least {} validator>".format(self.bound)


def at_least(bound):
    return _AtLeastValidator(bound)


def distinct(inst, attr, value):
    if value is not None and len(set(value)) != len(value):
        raise ValueError("'{}' entries must be distinct".format(attr.name))
