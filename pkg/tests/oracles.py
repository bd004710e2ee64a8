"""Brute-force dense reference implementations.

Everything here takes the slow, obviously-correct path: full vectors and
matrices over all 2^N - 1 nonempty subsets, no sparsity, a different popcount
(`bin(x).count`), and matrix quadratic forms instead of focal-pair loops.
The production code is tested against these, never the other way around.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from dsconflict import MassFunction


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@lru_cache(maxsize=None)
def jaccard_matrix(n: int) -> np.ndarray:
    """Dense Jaccard matrix over nonempty subsets; row/col index = mask - 1."""
    size = (1 << n) - 1
    matrix = np.empty((size, size))
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            matrix[i - 1, j - 1] = popcount(i & j) / popcount(i | j)
    return matrix


@lru_cache(maxsize=None)
def disjoint_matrix(n: int) -> np.ndarray:
    """Indicator matrix of disjoint nonempty subset pairs."""
    size = (1 << n) - 1
    matrix = np.zeros((size, size))
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i & j == 0:
                matrix[i - 1, j - 1] = 1.0
    return matrix


@lru_cache(maxsize=None)
def membership_matrix(n: int) -> np.ndarray:
    """(2^n, n) matrix: row ``mask`` marks the elements of that subset."""
    masks = np.arange(1 << n)
    return ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(float)


def dense_vector(m: MassFunction) -> np.ndarray:
    x = np.zeros((1 << m.frame.size) - 1)
    for mask, value in m.items():
        x[mask - 1] += value
    return x


def correlation_degree(m1: MassFunction, m2: MassFunction) -> float:
    d = jaccard_matrix(m1.frame.size)
    return float(dense_vector(m1) @ d @ dense_vector(m2))


def correlation_coefficient(m1: MassFunction, m2: MassFunction) -> float:
    c12 = correlation_degree(m1, m2)
    c11 = correlation_degree(m1, m1)
    c22 = correlation_degree(m2, m2)
    return c12 / math.sqrt(c11 * c22)


def jousselme_distance(m1: MassFunction, m2: MassFunction) -> float:
    d = jaccard_matrix(m1.frame.size)
    u = dense_vector(m1) - dense_vector(m2)
    return math.sqrt(max(float(u @ d @ u), 0.0) / 2.0)


def conflict_k(m1: MassFunction, m2: MassFunction) -> float:
    d = disjoint_matrix(m1.frame.size)
    return float(dense_vector(m1) @ d @ dense_vector(m2))


def betp(m: MassFunction) -> np.ndarray:
    """Pignistic probabilities by explicit enumeration of all subsets."""
    n = m.frame.size
    p = np.zeros(n)
    for mask, value in m.items():
        card = popcount(mask)
        for e in range(n):
            if mask >> e & 1:
                p[e] += value / card
    return p


def dif_betp_brute(m1: MassFunction, m2: MassFunction) -> float:
    """max_A |BetP1(A) - BetP2(A)| over every one of the 2^n subsets."""
    diff = betp(m1) - betp(m2)
    sums = membership_matrix(m1.frame.size) @ diff
    return float(np.max(np.abs(sums)))


def song_cor(m1: MassFunction, m2: MassFunction) -> float:
    d = jaccard_matrix(m1.frame.size)
    f1 = d @ dense_vector(m1)
    f2 = d @ dense_vector(m2)
    return float(f1 @ f2 / (np.linalg.norm(f1) * np.linalg.norm(f2)))


def gram_min_eigenvalue(n: int) -> float:
    return float(np.linalg.eigvalsh(jaccard_matrix(n)).min())
