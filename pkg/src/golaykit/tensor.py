"""Exact Gaussian-integer tensor arithmetic.

Multidimensional arrays over Z[i] with the operations needed to build
complementary arrays: negation, conjugate-flip involution, aperiodic
(full) convolution, Kronecker product, concatenation, interleaving and
checked superposition.  All arithmetic is integer-exact; no floating
point is used anywhere in this module.

Entries are stored as two integer ndarrays (real and imaginary parts)
in row-major order with the last index varying fastest.  Arrays are
immutable once constructed.  int64 storage is used when safe and a
Python-object (big-int) fallback keeps results exact otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    Collision,
    HalvingError,
    NonPolyphase,
    ParseError,
    QuarteringError,
    RankMismatch,
    ShapeMismatch,
)

__all__ = [
    "GaussInt",
    "Alphabet",
    "Tensor",
    "add",
    "negate",
    "involute",
    "convolve",
    "kron",
    "concat",
    "interleave",
    "checked_superpose",
    "halve",
    "quarter",
    "upsample",
    "reshape_to_sequence",
    "embed",
    "supports_disjoint",
    "supports_conjoint",
    "quasi_symmetric",
    "alphabet_of",
    "tensor_to_obj",
    "tensor_from_obj",
]

# Beyond this magnitude int64 products with desk-scale entry counts can
# no longer be bounded inside 2**63, so ops switch to object dtype.
_SAFE_COMPONENT = 1 << 20


@dataclass(frozen=True)
class GaussInt:
    """A Gaussian integer re + im*i."""

    re: int
    im: int = 0

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """Squared magnitude re**2 + im**2."""
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ONE = GaussInt(1, 0)
ZERO = GaussInt(0, 0)
I_UNIT = GaussInt(0, 1)

# Branch order used by the searchers and anywhere a canonical entry
# ordering is needed: 1, -1, i, -i.
UNIT_ORDER = (GaussInt(1, 0), GaussInt(-1, 0), GaussInt(0, 1), GaussInt(0, -1))


class Alphabet(Enum):
    """Entry alphabets, from most to least restrictive."""

    BINARY = "binary"
    QUATERNARY = "quaternary"
    POLYPHASE4_WITH_ZEROS = "polyphase4-with-zeros"
    GENERAL = "general"

    @classmethod
    def from_tag(cls, tag: str) -> "Alphabet":
        for member in cls:
            if member.value == tag:
                return member
        raise ParseError(f"unknown alphabet tag: {tag!r}")

    def admits(self, other: "Alphabet") -> bool:
        """True when every array over `other` is also over this alphabet."""
        order = [
            Alphabet.BINARY,
            Alphabet.QUATERNARY,
            Alphabet.POLYPHASE4_WITH_ZEROS,
            Alphabet.GENERAL,
        ]
        return order.index(other) <= order.index(self)


def _validate_shape(shape: Sequence[int]) -> tuple[int, ...]:
    shape = tuple(int(s) for s in shape)
    if len(shape) == 0:
        raise ShapeMismatch("rank must be at least 1")
    if any(s < 1 for s in shape):
        raise ShapeMismatch(f"all dimensions must be positive, got {shape}")
    return shape


def _as_plane(values: np.ndarray) -> np.ndarray:
    """Copy to int64 when it fits, else to object dtype, exactly."""
    arr = np.asarray(values)
    if arr.dtype == object:
        if all(isinstance(v, int) for v in arr.flat):
            big = any(abs(v) > np.iinfo(np.int64).max for v in arr.flat)
            return arr.copy() if big else arr.astype(np.int64)
        raise ParseError("entries must be integers")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ParseError("entries must be integers")
    return arr.astype(np.int64)


class Tensor:
    """Immutable multidimensional array over Z[i].

    Stored as two same-shape integer ndarrays `re` and `im`, row-major
    with the last index varying fastest.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: np.ndarray, im: np.ndarray):
        re = _as_plane(re)
        im = _as_plane(im)
        if re.shape != im.shape:
            raise ShapeMismatch("real and imaginary parts must have equal shapes")
        _validate_shape(re.shape)
        re.flags.writeable = False
        im.flags.writeable = False
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor is immutable")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.re.shape)

    @property
    def rank(self) -> int:
        return self.re.ndim

    @property
    def size(self) -> int:
        return int(self.re.size)

    @classmethod
    def from_entries(
        cls, shape: Sequence[int], entries: Iterable[GaussInt | int | complex | tuple]
    ) -> "Tensor":
        """Build from a flat row-major entry list."""
        shape = _validate_shape(shape)
        res, ims = [], []
        for e in entries:
            g = _coerce_entry(e)
            res.append(g.re)
            ims.append(g.im)
        n = int(np.prod(shape))
        if len(res) != n:
            raise ShapeMismatch(f"expected {n} entries for shape {shape}, got {len(res)}")
        re = np.array(res, dtype=object).reshape(shape)
        im = np.array(ims, dtype=object).reshape(shape)
        return cls(re, im)

    @classmethod
    def sequence(cls, values: Iterable[GaussInt | int | complex | tuple]) -> "Tensor":
        """1-D convenience constructor."""
        vals = list(values)
        return cls.from_entries((len(vals),), vals)

    @classmethod
    def zeros(cls, shape: Sequence[int]) -> "Tensor":
        shape = _validate_shape(shape)
        return cls(np.zeros(shape, dtype=np.int64), np.zeros(shape, dtype=np.int64))

    @classmethod
    def unit(cls, shape: Sequence[int]) -> "Tensor":
        """All-ones array (every entry 1)."""
        shape = _validate_shape(shape)
        return cls(np.ones(shape, dtype=np.int64), np.zeros(shape, dtype=np.int64))

    def __getitem__(self, idx) -> GaussInt:
        r = self.re[idx]
        i = self.im[idx]
        if isinstance(r, np.ndarray):
            raise IndexError("full multi-index required")
        return GaussInt(int(r), int(i))

    def entries(self) -> list[GaussInt]:
        """Row-major flat entry list."""
        return [GaussInt(int(r), int(i)) for r, i in zip(self.re.flat, self.im.flat)]

    def support(self) -> np.ndarray:
        """Boolean mask of nonzero positions."""
        return (self.re != 0) | (self.im != 0)

    def max_component(self) -> int:
        m = 0
        for plane in (self.re, self.im):
            if plane.size:
                m = max(m, int(np.max(np.abs(plane.astype(object)))))
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self.re, other.re)
            and np.array_equal(self.im, other.im)
        )

    def __hash__(self) -> int:
        return hash((self.shape, tuple(int(v) for v in self.re.flat),
                     tuple(int(v) for v in self.im.flat)))

    def __neg__(self) -> "Tensor":
        return negate(self)

    def __add__(self, other: "Tensor") -> "Tensor":
        return add(self, other)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return add(self, negate(other))

    def __repr__(self) -> str:
        if self.rank == 1 and self.size <= 16:
            return f"Tensor([{', '.join(map(repr, self.entries()))}])"
        return f"Tensor(shape={self.shape})"


def _coerce_entry(e) -> GaussInt:
    if isinstance(e, GaussInt):
        return e
    if isinstance(e, (int, np.integer)):
        return GaussInt(int(e), 0)
    if isinstance(e, complex):
        if e.real != int(e.real) or e.imag != int(e.imag):
            raise ParseError(f"non-integer entry: {e}")
        return GaussInt(int(e.real), int(e.imag))
    if isinstance(e, (tuple, list)) and len(e) == 2:
        return GaussInt(int(e[0]), int(e[1]))
    raise ParseError(f"cannot interpret entry: {e!r}")


def _same_shape(a: Tensor, b: Tensor) -> None:
    if a.rank != b.rank:
        raise RankMismatch(f"ranks differ: {a.rank} vs {b.rank}")
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes differ: {a.shape} vs {b.shape}")


def add(a: Tensor, b: Tensor) -> Tensor:
    """Entrywise sum; shapes must match exactly."""
    _same_shape(a, b)
    return Tensor(a.re + b.re, a.im + b.im)


def negate(a: Tensor) -> Tensor:
    return Tensor(-a.re, -a.im)


def involute(a: Tensor) -> Tensor:
    """Conjugate every entry and reverse every axis.

    Self-inverse; the polynomial of the result is z^(s-1) * conj-poly,
    which is what makes products A * involute(A) encode autocorrelation.
    """
    rev = tuple(slice(None, None, -1) for _ in range(a.rank))
    return Tensor(a.re[rev], -a.im[rev])


def _needs_object(a: Tensor, b: Tensor) -> bool:
    if a.re.dtype == object or b.re.dtype == object:
        return True
    return a.max_component() >= _SAFE_COMPONENT or b.max_component() >= _SAFE_COMPONENT


def convolve(a: Tensor, b: Tensor) -> Tensor:
    """Full aperiodic convolution; output dims are s_k + t_k - 1.

    Direct shift-and-add over the nonzero entries of the smaller
    operand: exact integer arithmetic, no transforms.
    """
    if a.rank != b.rank:
        raise RankMismatch(f"ranks differ: {a.rank} vs {b.rank}")
    if b.size < a.size:
        a, b = b, a
    out_shape = tuple(sa + sb - 1 for sa, sb in zip(a.shape, b.shape))
    dtype = object if _needs_object(a, b) else np.int64
    out_re = np.zeros(out_shape, dtype=dtype)
    out_im = np.zeros(out_shape, dtype=dtype)
    a_re = a.re.astype(dtype) if dtype == object else a.re
    a_im = a.im.astype(dtype) if dtype == object else a.im
    b_re = b.re.astype(dtype) if dtype == object else b.re
    b_im = b.im.astype(dtype) if dtype == object else b.im
    for idx in np.argwhere((a.re != 0) | (a.im != 0)):
        window = tuple(slice(int(i), int(i) + t) for i, t in zip(idx, b.shape))
        ar = a_re[tuple(idx)]
        ai = a_im[tuple(idx)]
        out_re[window] += ar * b_re - ai * b_im
        out_im[window] += ar * b_im + ai * b_re
    return Tensor(out_re, out_im)


def kron(a: Tensor, b: Tensor) -> Tensor:
    """Kronecker product; index k_l = i_l * t_l + j_l, dims multiply."""
    if a.rank != b.rank:
        raise RankMismatch(f"ranks differ: {a.rank} vs {b.rank}")
    if _needs_object(a, b):
        a_re, a_im = a.re.astype(object), a.im.astype(object)
        b_re, b_im = b.re.astype(object), b.im.astype(object)
    else:
        a_re, a_im, b_re, b_im = a.re, a.im, b.re, b.im
    return Tensor(
        np.kron(a_re, b_re) - np.kron(a_im, b_im),
        np.kron(a_re, b_im) + np.kron(a_im, b_re),
    )


def concat(a: Tensor, b: Tensor, dim: int) -> Tensor:
    """Concatenate along axis `dim`; other dims must agree."""
    if a.rank != b.rank:
        raise RankMismatch(f"ranks differ: {a.rank} vs {b.rank}")
    if not 0 <= dim < a.rank:
        raise ShapeMismatch(f"dim {dim} out of range for rank {a.rank}")
    for k in range(a.rank):
        if k != dim and a.shape[k] != b.shape[k]:
            raise ShapeMismatch(
                f"shapes {a.shape} and {b.shape} differ off the concat axis"
            )
    return Tensor(
        np.concatenate([a.re, b.re], axis=dim),
        np.concatenate([a.im, b.im], axis=dim),
    )


def interleave(a: Tensor, b: Tensor, dim: int) -> Tensor:
    """Alternate entries of a and b along `dim`, a first.

    Sizes along `dim` must be equal (result 2s) or differ by one with a
    longer (result 2s+1, pattern a b a b ... a).
    """
    if a.rank != b.rank:
        raise RankMismatch(f"ranks differ: {a.rank} vs {b.rank}")
    if not 0 <= dim < a.rank:
        raise ShapeMismatch(f"dim {dim} out of range for rank {a.rank}")
    for k in range(a.rank):
        if k != dim and a.shape[k] != b.shape[k]:
            raise ShapeMismatch(
                f"shapes {a.shape} and {b.shape} differ off the interleave axis"
            )
    sa, sb = a.shape[dim], b.shape[dim]
    if sa not in (sb, sb + 1):
        raise ShapeMismatch(
            f"interleave needs sizes s,s or s+1,s along dim {dim}; got {sa},{sb}"
        )
    out_shape = list(a.shape)
    out_shape[dim] = sa + sb
    dtype = object if (a.re.dtype == object or b.re.dtype == object) else np.int64
    out_re = np.zeros(out_shape, dtype=dtype)
    out_im = np.zeros(out_shape, dtype=dtype)

    def lanes(start):
        sl = [slice(None)] * a.rank
        sl[dim] = slice(start, None, 2)
        return tuple(sl)

    out_re[lanes(0)] = a.re
    out_im[lanes(0)] = a.im
    out_re[lanes(1)] = b.re
    out_im[lanes(1)] = b.im
    return Tensor(out_re, out_im)


def checked_superpose(*terms: Tensor) -> Tensor:
    """Sum of same-shape terms whose supports must not overlap.

    Raises Collision with the first offending position (row-major) if
    any two terms are simultaneously nonzero somewhere.
    """
    if not terms:
        raise ShapeMismatch("checked_superpose needs at least one term")
    first = terms[0]
    for t in terms[1:]:
        _same_shape(first, t)
    counts = np.zeros(first.shape, dtype=np.int64)
    for t in terms:
        counts += t.support().astype(np.int64)
    if np.any(counts > 1):
        pos = np.argwhere(counts > 1)[0]
        raise Collision(tuple(int(p) for p in pos))
    out = terms[0]
    for t in terms[1:]:
        out = add(out, t)
    return out


def _exact_div(a: Tensor, k: int, err) -> Tensor:
    for plane in (a.re, a.im):
        rem = plane % k
        if np.any(rem != 0):
            pos = np.argwhere(rem != 0)[0]
            raise err(f"entry at {tuple(int(p) for p in pos)} not divisible by {k}")
    return Tensor(a.re // k, a.im // k)


def halve(a: Tensor) -> Tensor:
    """Exact division by 2; HalvingError if any component is odd."""
    return _exact_div(a, 2, HalvingError)


def quarter(a: Tensor) -> Tensor:
    """Exact division by 4; QuarteringError on any non-multiple of 4."""
    return _exact_div(a, 4, QuarteringError)


def upsample(a: Tensor, factors: Sequence[int]) -> Tensor:
    """Insert factors[k]-1 zeros between entries along each axis.

    Output dims are (s_k - 1) * factors[k] + 1, so that
    convolve(upsample(a, t.shape), t) == kron(a, t).
    """
    factors = tuple(int(f) for f in factors)
    if len(factors) != a.rank:
        raise RankMismatch("one factor per axis required")
    if any(f < 1 for f in factors):
        raise ShapeMismatch("factors must be positive")
    out_shape = tuple((s - 1) * f + 1 for s, f in zip(a.shape, factors))
    dtype = object if a.re.dtype == object else np.int64
    out_re = np.zeros(out_shape, dtype=dtype)
    out_im = np.zeros(out_shape, dtype=dtype)
    lanes = tuple(slice(None, None, f) for f in factors)
    out_re[lanes] = a.re
    out_im[lanes] = a.im
    return Tensor(out_re, out_im)


def reshape_to_sequence(a: Tensor) -> Tensor:
    """Read a rank-2 array out column by column as one sequence.

    Entry (i, j) lands at position i + j * s1.  Complementarity is
    preserved for pairs whose first dimension matches the column length.
    """
    if a.rank != 2:
        raise RankMismatch(f"expected rank 2, got {a.rank}")
    return Tensor(a.re.ravel(order="F"), a.im.ravel(order="F"))


def embed(a: Tensor, rank: int, axis: int) -> Tensor:
    """Place a 1-D tensor along `axis` of a rank-`rank` array of 1s elsewhere."""
    if a.rank != 1:
        raise RankMismatch("embed expects a 1-D tensor")
    if not 0 <= axis < rank:
        raise ShapeMismatch(f"axis {axis} out of range for rank {rank}")
    shape = [1] * rank
    shape[axis] = a.shape[0]
    return Tensor(a.re.reshape(shape), a.im.reshape(shape))


def supports_disjoint(a: Tensor, b: Tensor) -> bool:
    """True when a and b are never both nonzero at the same position."""
    _same_shape(a, b)
    return not np.any(a.support() & b.support())


def supports_conjoint(a: Tensor, b: Tensor) -> bool:
    """True when a and b have identical supports."""
    _same_shape(a, b)
    return bool(np.array_equal(a.support(), b.support()))


def quasi_symmetric(a: Tensor) -> bool:
    """True when the support is invariant under reversing every axis."""
    rev = tuple(slice(None, None, -1) for _ in range(a.rank))
    s = a.support()
    return bool(np.array_equal(s, s[rev]))


def alphabet_of(a: Tensor) -> Alphabet:
    """Most restrictive alphabet the entries satisfy."""
    re, im = a.re, a.im
    zero = (re == 0) & (im == 0)
    real_unit = (np.abs(re) == 1) & (im == 0)
    imag_unit = (re == 0) & (np.abs(im) == 1)
    if bool(np.all(real_unit)):
        return Alphabet.BINARY
    if bool(np.all(real_unit | imag_unit)):
        return Alphabet.QUATERNARY
    if bool(np.all(real_unit | imag_unit | zero)):
        return Alphabet.POLYPHASE4_WITH_ZEROS
    return Alphabet.GENERAL


def tensor_to_obj(a: Tensor, alphabet: Alphabet | None = None) -> dict:
    """Plain-dict form of the gca-tensor/1 wire format."""
    if alphabet is None:
        alphabet = alphabet_of(a)
    return {
        "format": "gca-tensor/1",
        "shape": list(a.shape),
        "order": "row-major-last-fastest",
        "entries": [[g.re, g.im] for g in a.entries()],
        "alphabet": alphabet.value,
    }


def tensor_from_obj(obj: dict) -> Tensor:
    """Parse the gca-tensor/1 wire format; ParseError on any mismatch."""
    if not isinstance(obj, dict):
        raise ParseError("tensor document must be an object")
    if obj.get("format") != "gca-tensor/1":
        raise ParseError(f"unsupported format: {obj.get('format')!r}")
    order = obj.get("order", "row-major-last-fastest")
    if order != "row-major-last-fastest":
        raise ParseError(f"unsupported entry order: {order!r}")
    try:
        shape = _validate_shape(obj["shape"])
        entries = obj["entries"]
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed tensor document: {e}") from None
    t = Tensor.from_entries(shape, [tuple(e) for e in entries])
    tag = obj.get("alphabet")
    if tag is not None:
        declared = Alphabet.from_tag(tag)
        if not declared.admits(alphabet_of(t)):
            raise ParseError(
                f"entries do not satisfy declared alphabet {declared.value!r}"
            )
    return t
