# coding: utf-8
"""
Words of the free monoid. A word is a tuple of generator indices,
the empty tuple is the unit.
"""


def word_degree(word, weights=None):
    """
    Returns the degree of a word, the sum of its letter weights.

    :param word: tuple of generator indices
    :param weights: list of weights, `None` means every weight is one
    :return: int
    """
    if weights is None:
        return len(word)
    return sum(weights[i] for i in word)


def word_to_text(word, names):
    """
    Returns a readable version of a word, consecutive equal letters
    are written as a power, `x*y^2`. The empty word is `1`.
    """
    if len(word) == 0:
        return '1'
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = names[word[i]]
        parts.append(name if j - i == 1 else "%s^%d" % (name, j - i))
        i = j
    return "*".join(parts)


def enumerate_words(weights, degree):
    """
    Enumerates all words of a given degree in the free monoid,
    letters are taken in increasing index order.
    """
    if degree == 0:
        yield ()
        return
    for i, w in enumerate(weights):
        if w <= degree:
            for tail in enumerate_words(weights, degree - w):
                yield (i, ) + tail


def find_overlaps(u, v):
    """
    Enumerates the proper overlaps of *u* followed by *v*,
    a suffix of *u* equal to a prefix of *v*, both strictly
    shorter than the words themselves.

    :return: iterator on the overlap lengths
    """
    for k in range(1, min(len(u), len(v))):
        if u[-k:] == v[:k]:
            yield k
