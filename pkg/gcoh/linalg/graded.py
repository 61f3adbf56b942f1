# coding: utf-8
"""
Collections of degree slices.
"""
import numpy


class GradedSubspace:
    """
    Graded subspace known through a window of degrees.

    :param slices: dictionary `{degree: DegreeSlice}`
    :param generator_log: dictionary `{degree: number of new
        generators}` for ideals and submodules, or None
    """

    def __init__(self, slices, generator_log=None):
        if not isinstance(slices, dict):
            raise TypeError("slices must be a dictionary.")
        self._slices = dict(slices)
        self.generator_log = generator_log

    def __getitem__(self, n):
        return self._slices[n]

    def __contains__(self, n):
        return n in self._slices

    def __len__(self):
        return len(self._slices)

    @property
    def degrees(self):
        "Returns the sorted degrees."
        return sorted(self._slices)

    @property
    def max_degree(self):
        "Returns the largest degree."
        return max(self._slices) if self._slices else -1

    def dims(self):
        "Returns the ranks as an array indexed by degree."
        res = numpy.zeros(self.max_degree + 1, dtype=numpy.int64)
        for n, s in self._slices.items():
            res[n] = s.rank
        return res

    def __repr__(self):
        return "GradedSubspace(dims=%r)" % self.dims().tolist()
