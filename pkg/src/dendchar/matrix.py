"""Dense exact matrices over the integers and rationals.

Entries are Python ints or ``Fraction`` values held in a numpy object array.
Integer products are routed through float64 BLAS or int64 kernels whenever an
a-priori bound on the result proves the fast kernel exact; otherwise they fall
back to object arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = ["ExactMatrix"]

# |entry| bounds under which a dot product of length k is exact
_FLOAT_EXACT = 2**53
_INT64_EXACT = 2**62


def _is_intlike(x) -> bool:
    return isinstance(x, (int, np.integer)) or (isinstance(x, Fraction) and x.denominator == 1)


def _to_object(a: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    out[...] = [[int(v) for v in row] for row in a] if a.ndim == 2 else [int(v) for v in a]
    return out


def _normalize(a: np.ndarray) -> np.ndarray:
    """Object array with ints where possible (integral Fractions collapse)."""
    flat = a.ravel()
    out = np.empty(flat.shape, dtype=object)
    for i, v in enumerate(flat):
        if isinstance(v, Fraction):
            out[i] = v.numerator if v.denominator == 1 else v
        elif isinstance(v, (int, np.integer)):
            out[i] = int(v)
        elif isinstance(v, float) and v.is_integer():
            out[i] = int(v)
        else:
            out[i] = Fraction(v)
    return out.reshape(a.shape)


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(np.abs(a).max())


class ExactMatrix:
    """Immutable dense matrix with exact entries.

    ``_ints`` caches an int64 copy when every entry is an integer of modest
    size; the fast multiplication paths work off that copy.
    """

    __slots__ = ("_a", "_ints", "_integral")

    def __init__(self, rows):
        if isinstance(rows, ExactMatrix):
            a = rows._a
        elif isinstance(rows, np.ndarray) and rows.dtype != object:
            if not np.issubdtype(rows.dtype, np.integer):
                raise TypeError("numeric arrays must be integer typed; pass Fractions for rationals")
            a = _to_object(np.atleast_2d(rows))
        else:
            a = _normalize(np.array(rows, dtype=object))
            if a.ndim == 1 and a.size == 0:
                a = a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError("ExactMatrix needs a 2-d array")
        a.flags.writeable = False
        self._a = a
        self._integral = all(isinstance(v, int) for v in a.flat)
        self._ints = None
        if self._integral and _max_abs(a) < 2**62:
            self._ints = a.astype(np.int64)

    @classmethod
    def _from_int64(cls, a: np.ndarray) -> ExactMatrix:
        m = cls.__new__(cls)
        obj = _to_object(a)
        obj.flags.writeable = False
        m._a = obj
        m._ints = a
        m._integral = True
        return m

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls._from_int64(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls._from_int64(np.zeros((rows, cols), dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def is_integral(self) -> bool:
        return self._integral

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, idx):
        return self._a[idx]

    def tolist(self) -> list[list]:
        return self._a.tolist()

    def to_object_array(self) -> np.ndarray:
        return self._a.copy()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self._ints is not None and other._ints is not None:
            return bool(np.array_equal(self._ints, other._ints))
        return bool((self._a == other._a).all())

    __hash__ = None

    def __repr__(self) -> str:
        return f"ExactMatrix({self.tolist()})"

    @property
    def T(self) -> ExactMatrix:
        if self._ints is not None:
            return ExactMatrix._from_int64(np.ascontiguousarray(self._ints.T))
        return ExactMatrix(self._a.T)

    def __neg__(self) -> ExactMatrix:
        if self._ints is not None:
            return ExactMatrix._from_int64(-self._ints)
        return ExactMatrix(-self._a)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self._a + other._a)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self._a - other._a)

    def scale(self, c) -> ExactMatrix:
        if isinstance(c, int) and self._ints is not None and abs(c) * _max_abs(self._ints) < 2**62:
            return ExactMatrix._from_int64(self._ints * c)
        return ExactMatrix(self._a * c)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        if self._ints is not None:
            return int(np.trace(self._ints))
        return sum(self._a.diagonal().tolist(), 0)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        k = self.shape[1]
        if self._ints is not None and other._ints is not None:
            bound = _max_abs(self._ints) * _max_abs(other._ints) * max(k, 1)
            if bound < _FLOAT_EXACT:
                prod = self._ints.astype(np.float64) @ other._ints.astype(np.float64)
                return ExactMatrix._from_int64(prod.astype(np.int64))
            if bound < _INT64_EXACT:
                return ExactMatrix._from_int64(self._ints @ other._ints)
        return ExactMatrix(self._a.dot(other._a))

    def __pow__(self, k: int) -> ExactMatrix:
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative powers are not supported; invert explicitly")
        result = ExactMatrix.identity(self.shape[0])
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def is_identity(self) -> bool:
        return self.is_square() and self == ExactMatrix.identity(self.shape[0])

    def is_upper_unitriangular(self) -> bool:
        if not self.is_square():
            return False
        a = self._ints if self._ints is not None else self._a
        n = self.shape[0]
        return bool(all(a[i, i] == 1 for i in range(n)) and not np.tril(a, -1).any())

    def inverse_unitriangular(self) -> ExactMatrix:
        """Inverse of a unit upper triangular matrix by back-substitution.

        Row i of X = self^{-1} is e_i - sum_{j > i} self[i, j] X[j]; each row
        is one vector-matrix product.
        """
        if not self.is_upper_unitriangular():
            raise ValueError("matrix is not unit upper triangular")
        n = self.shape[0]
        if self._ints is not None:
            x = np.zeros((n, n), dtype=np.int64)
            row_l1 = np.abs(self._ints).sum(axis=1)
            xmax = 0
            for i in range(n - 1, -1, -1):
                if int(row_l1[i]) * max(xmax, 1) >= _INT64_EXACT:
                    break
                row = -(self._ints[i, i + 1:] @ x[i + 1:])
                row[i] += 1
                x[i] = row
                xmax = max(xmax, int(np.abs(row).max()))
            else:
                return ExactMatrix._from_int64(x)
        a = self._a
        x = np.zeros((n, n), dtype=object)
        for i in range(n - 1, -1, -1):
            row = -(a[i, i + 1:].dot(x[i + 1:])) if i + 1 < n else np.zeros(n, dtype=object)
            row[i] += 1
            x[i] = row
        return ExactMatrix(x)

    def matvec_object(self, v: np.ndarray) -> np.ndarray:
        return self._a.dot(v)
