# coding: utf-8
"""
Degree-lexicographic order on words.
"""
from ..algebra.words import word_degree


class MonomialOrder:
    """
    Degree-lexicographic order, words are first compared by degree,
    then letter by letter from the left. The precedence of letters
    is the generator order of the presentation, the first generator
    is the smallest. On words of the same degree, it coincides with
    the left-lexicographic order.

    :param weights: generator weights
    """

    def __init__(self, weights):
        self._weights = tuple(weights)

    @property
    def weights(self):
        "Returns the weights."
        return self._weights

    def key(self, word):
        "Returns a sorting key."
        return (word_degree(word, self._weights), word)

    def heap_key(self, word):
        "Key such that the largest word comes first in a min-heap."
        return (-word_degree(word, self._weights),
                tuple(-i for i in word), word)

    def compare(self, u, v):
        "Returns -1, 0, 1."
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        return 1 if ku > kv else 0

    def sort(self, words, reverse=False):
        "Sorts words."
        return sorted(words, key=self.key, reverse=reverse)

    def leading_word(self, poly):
        "Returns the largest word of a nonzero polynomial."
        if not poly:
            raise ValueError("The null polynomial has no leading word.")
        return max(poly.words(), key=self.key)
