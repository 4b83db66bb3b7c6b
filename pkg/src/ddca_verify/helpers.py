from inspect import isclass
from itertools import islice


def instantiate(seq, *args, **kwargs):
    """Replace all classes with instantiated versions and return the modified sequence.

    >>> instantiate([list, list((1, 2))], (3,4))
    [[3, 4], [1, 2]]
    """
    output = []
    for x in seq:
        if isclass(x):
            x = x(*args, **kwargs)
        output.append(x)
    return output


def compositions(total, parts=2):
    """Yield the tuples of ``parts`` non negative integers summing to ``total``.

    >>> list(compositions(2))
    [(0, 2), (1, 1), (2, 0)]
    >>> list(compositions(-1))
    []
    """
    if total < 0:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def first(iterable, default=None):
    """Return the first item of an iterable, or ``default``.

    >>> first(x for x in range(5) if x > 2)
    3
    """
    return next(islice(iterable, 1), default)
