"""Signed permutation matrices and the monomial basis of Rep(R_{m,m}).

The 4^m basis matrices of order 2^m are Kronecker products of the four
2x2 generators I, E1, E2, E1E2, one factor per base-4 digit of the index
(most significant digit leftmost).  Every matrix is kept as a
(permutation, signs) pair, so all arithmetic is exact integer work on
O(2^m) data; nothing here ever builds a dense matrix or touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SymmetryClass(Enum):
    """The three mutually exclusive shapes a basis element can take."""

    SKEW = "skew"
    DIAGONAL = "diagonal"
    SYMMETRIC_OFF_DIAGONAL = "symmetric-off-diagonal"


@dataclass(frozen=True)
class SignedPerm:
    """Monomial matrix M with M[perm[c], c] = signs[c], zero elsewhere.

    perm[c] is the row of the single nonzero entry in column c; signs[c]
    is that entry (+1 or -1).  Instances are immutable and hashable.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if len(self.signs) != n:
            raise ValueError("perm and signs must have the same length")
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm is not a permutation of 0..n-1")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(tuple(range(n)), (1,) * n)

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        """Matrix product self * other with exact sign accumulation."""
        if self.n != other.n:
            raise ValueError(f"order mismatch: {self.n} vs {other.n}")
        perm = tuple(self.perm[r] for r in other.perm)
        signs = tuple(
            self.signs[other.perm[c]] * other.signs[c] for c in range(other.n)
        )
        return SignedPerm(perm, signs)

    def __neg__(self) -> SignedPerm:
        return SignedPerm(self.perm, tuple(-s for s in self.signs))

    def transpose(self) -> SignedPerm:
        inv = [0] * self.n
        for c, r in enumerate(self.perm):
            inv[r] = c
        return SignedPerm(tuple(inv), tuple(self.signs[inv[j]] for j in range(self.n)))

    def kron(self, other: SignedPerm) -> SignedPerm:
        """Kronecker product; column (ca*nb + cb) maps to row perm_a[ca]*nb + perm_b[cb]."""
        nb = other.n
        perm = []
        signs = []
        for ca in range(self.n):
            for cb in range(nb):
                perm.append(self.perm[ca] * nb + other.perm[cb])
                signs.append(self.signs[ca] * other.signs[cb])
        return SignedPerm(tuple(perm), tuple(signs))

    def is_identity_perm(self) -> bool:
        return all(r == c for c, r in enumerate(self.perm))

    def to_dense(self) -> list[list[int]]:
        """Dense integer matrix, for inspection and cross-checks only."""
        rows = [[0] * self.n for _ in range(self.n)]
        for c in range(self.n):
            rows[self.perm[c]][c] = self.signs[c]
        return rows


_GENERATORS = {
    "I2": SignedPerm((0, 1), (1, 1)),
    "E1": SignedPerm((1, 0), (1, -1)),
    "E2": SignedPerm((1, 0), (1, 1)),
}
_GENERATORS["E1E2"] = _GENERATORS["E1"] * _GENERATORS["E2"]


def generator(which: str) -> SignedPerm:
    """One of the 2x2 matrices I2, E1, E2, E1E2 generating the order-8 signed group."""
    try:
        return _GENERATORS[which]
    except KeyError:
        raise ValueError(f"unknown generator {which!r}") from None


I2 = _GENERATORS["I2"]
E1 = _GENERATORS["E1"]
E2 = _GENERATORS["E2"]
E1E2 = _GENERATORS["E1E2"]

# base-4 digit -> Kronecker factor, in coset order 0:I, 1:E1, 2:E2, 3:E1E2
_FACTORS = (I2, E1, E2, E1E2)


def bit_pairs(m: int, value: int) -> tuple[int, ...]:
    """Base-4 digits of value, most significant first.

    value is read as a 2m-bit string split into m bit pairs; raises if it
    does not fit in 2m bits.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0 <= value < 1 << (2 * m):
        raise ValueError(f"index {value} out of range for m={m}")
    return tuple((value >> (2 * (m - 1 - k))) & 3 for k in range(m))


def from_bit_pairs(digits) -> int:
    """Inverse of bit_pairs: reassemble base-4 digits into an index."""
    value = 0
    for d in digits:
        if not 0 <= d <= 3:
            raise ValueError(f"bit pair {d} out of range")
        value = (value << 2) | d
    return value


def gamma(m: int, i: int) -> SignedPerm:
    """Basis matrix of order 2^m with positive sign, selected by index i.

    The most significant base-4 digit of i picks the leftmost Kronecker
    factor, so gamma(m, 1) = I2^(m-1 factors) kron E1.
    """
    out = None
    for d in bit_pairs(m, i):
        f = _FACTORS[d]
        out = f if out is None else out.kron(f)
    return out


def classify(a: SignedPerm) -> SymmetryClass:
    """Sort a basis element (or a product of two) into its symmetry class.

    Anything that is neither symmetric nor skew is not such a matrix and
    is rejected.
    """
    t = a.transpose()
    if t == -a:
        return SymmetryClass.SKEW
    if t == a:
        if a.is_identity_perm():
            return SymmetryClass.DIAGONAL
        return SymmetryClass.SYMMETRIC_OFF_DIAGONAL
    raise ValueError("matrix is neither symmetric nor skew")


def diagonal_count(m: int) -> int:
    """Number of indices whose basis matrix is diagonal; equals 2^m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(
        1
        for i in range(1 << (2 * m))
        if classify(gamma(m, i)) is SymmetryClass.DIAGONAL
    )
