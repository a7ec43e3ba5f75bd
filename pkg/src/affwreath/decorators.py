from attr import attrs


def mutable(maybe_cls=None, strict=False):
    """Declare a mutable model (settings, spec files)."""

    def wrap(cls):
        wrapped = attrs(cls)
        wrapped.__affwreath_strict__ = strict
        return wrapped

    return wrap(maybe_cls) if maybe_cls is not None else wrap


def immutable(maybe_cls=None, strict=False, eq=True):
    """
    Declare a frozen, slotted model.

    Algebra elements pass ``eq=False`` and supply their own equality, since
    two coefficient dictionaries can be equal across different scalar
    conductors.
    """

    def wrap(cls):
        wrapped = attrs(cls, frozen=True, slots=True, eq=eq, repr=eq)
        wrapped.__affwreath_strict__ = strict
        return wrapped

    return wrap(maybe_cls) if maybe_cls is not None else wrap


def cached_on(attribute):
    """
    Memoize a method of a frozen model in a dict held by ``attribute``.

    The cache dict is created at construction time, so the instance itself
    stays frozen while its derived tables grow.
    """

    def _cached(func):
        def wrapper(self, *args):
            cache = getattr(self, attribute)
            key = (func.__name__,) + args
            try:
                return cache[key]
            except KeyError:
                value = cache[key] = func(self, *args)
                return value

        wrapper.__name__ = func.__name__
        wrapper.__doc__ = func.__doc__
        return wrapper

    return _cached
