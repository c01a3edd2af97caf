"""Exact rational sparse linear algebra.

Everything downstream (primitive spaces, homology ranks, antipode
recursions) reduces to kernel and rank computations over the rationals,
so this module is deliberately float-free: scalars are ``fractions.Fraction``
throughout and elimination is plain rational Gaussian elimination brought
to reduced row echelon form, which is unique and hence reproducible.

All values are immutable after construction and all functions are pure,
so concurrent use needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Scalar = Fraction | int

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(c: Scalar | str) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def canon(key) -> str:
    """Canonical sort string for a basis key (tuples recurse)."""
    if isinstance(key, tuple):
        return "(" + " ; ".join(canon(k) for k in key) + ")"
    return str(key)


class LinComb:
    """Finitely supported map from basis keys to rationals.

    Zero coefficients are never stored, so two equal combinations have
    identical term dicts. Keys may be anything hashable whose ``str`` is
    canonical (equal elements stringify identically).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] | None = None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                c = as_fraction(c)
                if c:
                    acc = data.get(k, ZERO) + c
                    if acc:
                        data[k] = acc
                    else:
                        data.pop(k, None)
        self.terms = data

    @classmethod
    def basis(cls, key, coeff: Scalar = 1) -> "LinComb":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def items(self):
        return self.terms.items()

    def support(self) -> list:
        return sorted(self.terms, key=canon)

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k, ZERO) + c
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
        res = LinComb.__new__(LinComb)
        res.terms = out
        return res

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __rmul__(self, c: Scalar) -> "LinComb":
        c = as_fraction(c)
        res = LinComb.__new__(LinComb)
        res.terms = {} if not c else {k: c * v for k, v in self.terms.items()}
        return res

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_keys(self, fn) -> "LinComb":
        """Relabel basis keys through ``fn`` (merging collisions)."""
        return LinComb((fn(k), c) for k, c in self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k in self.support():
            c = self.terms[k]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = f"{k}" if mag == 1 else f"{mag} {k}"
            bits.append((sign, body))
        first_sign, first_body = bits[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in bits[1:]:
            out += f" {sign} {body}"
        return out


def lc_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lc_scale(c: Scalar, a: LinComb) -> LinComb:
    return as_fraction(c) * a


class TensorElement:
    """LinComb over n-tuples of basis keys, tagged with its arity."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        if arity < 1:
            raise ValueError(f"tensor arity must be >= 1, got {arity}")
        self.arity = arity
        lc = terms if isinstance(terms, LinComb) else LinComb(terms)
        for key in lc.terms:
            if not isinstance(key, tuple) or len(key) != arity:
                raise ValueError(f"tensor key {key!r} does not have arity {arity}")
        self.terms = lc

    @classmethod
    def zero(cls, arity: int) -> "TensorElement":
        return cls(arity)

    def is_zero(self) -> bool:
        return self.terms.is_zero()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, key) -> Fraction:
        return self.terms.coeff(key)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.arity != other.arity:
            raise ValueError("tensor arities differ")
        out = TensorElement.__new__(TensorElement)
        out.arity = self.arity
        out.terms = self.terms + other.terms
        return out

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-1) * other

    def __rmul__(self, c: Scalar) -> "TensorElement":
        out = TensorElement.__new__(TensorElement)
        out.arity = self.arity
        out.terms = as_fraction(c) * self.terms
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, self.terms))

    def map_slot(self, slot: int, fn, out_arity: int) -> "TensorElement":
        """Apply ``fn: key -> TensorElement`` to one slot, splicing the result in.

        The output arity is ``self.arity - 1 + out_arity``.
        """
        acc = LinComb()
        for key, c in self.terms.items():
            image = fn(key[slot])
            if image.arity != out_arity:
                raise ValueError("slot image has unexpected arity")
            for sub, d in image.items():
                acc = acc + LinComb.basis(key[:slot] + sub + key[slot + 1 :], c * d)
        return TensorElement(self.arity - 1 + out_arity, acc)

    def to_json(self, key_str=canon) -> dict:
        return {
            "arity": self.arity,
            "terms": [
                {"keys": [key_str(k) for k in key], "coeff": str(self.terms.terms[key])}
                for key in self.terms.support()
            ],
        }

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        lines = []
        for key in self.terms.support():
            lines.append(" (x) ".join(str(k) for k in key) + f" : {self.terms.terms[key]}")
        return " + ".join(lines)


def tensor_product(a: LinComb, b: LinComb) -> TensorElement:
    """Pair two linear combinations into an arity-2 tensor."""
    terms = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            terms[(ka, kb)] = ca * cb
    return TensorElement(2, terms)


@dataclass(frozen=True)
class SparseMatrix:
    """Sparse exact matrix; no zero entries are stored."""

    nrows: int
    ncols: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.entries.items():
            if not (0 <= i < self.nrows and 0 <= j < self.ncols):
                raise ValueError(f"entry ({i}, {j}) out of bounds")
            c = as_fraction(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> "SparseMatrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                if c:
                    entries[(i, j)] = as_fraction(c)
        return cls(nrows, ncols, entries)

    def row_dicts(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [dict() for _ in range(self.nrows)]
        for (i, j), c in self.entries.items():
            rows[i][j] = c
        return rows

    def apply(self, vec: LinComb) -> LinComb:
        """Multiply by a vector given as a LinComb over column indices."""
        out: dict[int, Fraction] = {}
        for (i, j), c in self.entries.items():
            v = vec.coeff(j)
            if v:
                acc = out.get(i, ZERO) + c * v
                if acc:
                    out[i] = acc
                else:
                    out.pop(i, None)
        return LinComb(out)


def _rref(rows: list[dict[int, Fraction]], ncols: int) -> tuple[list[dict[int, Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (pivot rows, pivot columns)."""
    pivot_rows: list[dict[int, Fraction]] = []
    pivot_cols: list[int] = []
    live = [r for r in rows if r]
    for col in range(ncols):
        pivot = None
        for idx, row in enumerate(live):
            if col in row:
                pivot = idx
                break
        if pivot is None:
            continue
        row = live.pop(pivot)
        inv = ONE / row[col]
        row = {j: inv * c for j, c in row.items()}
        # clear the column everywhere else (rows already reduced included)
        for other in pivot_rows + live:
            f = other.get(col)
            if f is None:
                continue
            for j, c in row.items():
                acc = other.get(j, ZERO) - f * c
                if acc:
                    other[j] = acc
                else:
                    other.pop(j, None)
        pivot_rows.append(row)
        pivot_cols.append(col)
        live = [r for r in live if r]
        if not live:
            break
    return pivot_rows, pivot_cols


def rank(m: SparseMatrix) -> int:
    """Exact rank over the rationals."""
    _, pivots = _rref(m.row_dicts(), m.ncols)
    return len(pivots)


def kernel_basis(m: SparseMatrix) -> list[LinComb]:
    """Exact basis of the null space, as LinCombs over column indices.

    Vectors come from the reduced echelon form: one per free column, with
    coefficient 1 on the free column, ordered by free column index. This
    normalization is unique, so results are reproducible across runs.
    """
    rows, pivot_cols = _rref(m.row_dicts(), m.ncols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = {free: ONE}
        for row, pcol in zip(rows, pivot_cols):
            c = row.get(free)
            if c:
                vec[pcol] = -c
        basis.append(LinComb(vec))
    return basis


def intersect_kernels(ms: Sequence[SparseMatrix]) -> list[LinComb]:
    """Basis of the intersection of null spaces (kernel of the stacked matrix)."""
    if not ms:
        raise ValueError("need at least one matrix")
    ncols = ms[0].ncols
    for m in ms:
        if m.ncols != ncols:
            raise ValueError("matrices must share the same column universe")
    entries = {}
    offset = 0
    for m in ms:
        for (i, j), c in m.entries.items():
            entries[(offset + i, j)] = c
        offset += m.nrows
    return kernel_basis(SparseMatrix(offset, ncols, entries))


def matrix_of_images(images: Sequence[LinComb]) -> tuple[SparseMatrix, list]:
    """Matrix of a linear map from the images of ordered basis vectors.

    Column j holds ``images[j]``; rows are the union of output keys, ordered
    canonically. Returns the matrix together with the row key list.
    """
    row_keys = sorted({k for img in images for k in img.terms}, key=canon)
    index = {k: i for i, k in enumerate(row_keys)}
    entries = {}
    for j, img in enumerate(images):
        for k, c in img.items():
            entries[(index[k], j)] = c
    return SparseMatrix(len(row_keys), len(images), entries), row_keys


def kernel_of_operator(basis: Sequence, images: Sequence[LinComb]) -> list[LinComb]:
    """Kernel of an operator given on an ordered basis, re-keyed to that basis."""
    matrix, _ = matrix_of_images(images)
    return [vec.map_keys(lambda j: basis[j]) for vec in kernel_basis(matrix)]
