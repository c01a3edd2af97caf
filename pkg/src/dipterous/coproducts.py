"""The semi-infinitesimal coproduct on the free two-product algebra.

The coproduct is defined recursively: it vanishes on generators, and on a
product it satisfies

    delta(x <> y) = x1 (x) (x2 <> y)  +  (x * y1) (x) y2  +  t * (x (x) y)

for both operations <>, where the middle product is always the associative
one and Sweedler sums are implied. The deformation weight t defaults to 1.
Evaluation always runs through the canonical basis splitting; independence
from the splitting (and coassociativity) are verified by the test suite
rather than assumed.

On top of the coproduct: iterated coproducts and the kernel filtration,
primitive-space bases, the bracket operations whose iterates realize the
planar-tree (corolla) basis of the primitives, the projection idempotent
onto primitives, and the section/corestriction pair onto the tensor
coalgebra of words, which yields the dimension bookkeeping

    forests_n = sum over compositions of products of primitive dims.

Memo tables are keyed by (basis key, t); writes are idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    LinComb,
    SparseMatrix,
    TensorElement,
    kernel_basis,
    matrix_of_images,
    rank,
)
from .freealg import (
    DiptBasis,
    apply_op,
    apply_op_basis,
    decompose_basis,
    dipt_basis_of_degree,
    gen_elem,
    star,
    star_basis,
    succ,
)
from .series import composition_sum
from .trees import LEAF, Forest, PlanarTree, corolla, enumerate_trees


@dataclass(frozen=True)
class CoproductParams:
    """Deformation weight of the x (x) y summand; the main case is t = 1."""

    t: Fraction = Fraction(1)


DEFAULT = CoproductParams()

_DELTA: dict[tuple[DiptBasis, Fraction], TensorElement] = {}


def delta_basis(x: DiptBasis, t: Fraction = Fraction(1)) -> TensorElement:
    key = (x, t)
    cached = _DELTA.get(key)
    if cached is not None:
        return cached
    if x.degree == 1:
        out = TensorElement.zero(2)
    else:
        op, left, right = decompose_basis(x)
        terms = LinComb()
        for (a, b), c in delta_basis(left, t).items():
            terms = terms + LinComb.basis((a, apply_op_basis(op, b, right)), c)
        for (a, b), c in delta_basis(right, t).items():
            terms = terms + LinComb.basis((star_basis(left, a), b), c)
        if t:
            terms = terms + LinComb.basis((left, right), t)
        out = TensorElement(2, terms)
    _DELTA[key] = out
    return out


def delta(x: LinComb, params: CoproductParams = DEFAULT) -> TensorElement:
    out = TensorElement.zero(2)
    for key, c in x.items():
        out = out + c * delta_basis(key, params.t)
    return out


def semi_inf_rhs(op: str, x: LinComb, y: LinComb, params: CoproductParams = DEFAULT) -> TensorElement:
    """Right side of the defining relation, computed from delta(x) and delta(y).

    Used to check that the recursive coproduct is compatible with both
    operations on arbitrary (not just canonical) products.
    """
    acc = []
    for (a, b), c in delta(x, params).items():
        for k, d in apply_op(op, LinComb.basis(b), y).items():
            acc.append(((a, k), c * d))
    for (a, b), c in delta(y, params).items():
        for k, d in star(x, LinComb.basis(a)).items():
            acc.append(((k, b), c * d))
    if params.t:
        for kx, cx in x.items():
            for ky, cy in y.items():
                acc.append(((kx, ky), params.t * cx * cy))
    return TensorElement(2, acc)


def delta_iter(x: LinComb, n: int, params: CoproductParams = DEFAULT) -> TensorElement:
    """Left-iterated coproduct of arity n + 1."""
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    out = delta(x, params)
    for _ in range(n - 1):
        out = out.map_slot(0, lambda k: delta_basis(k, params.t), 2)
    return out


def delta_matrix(r: int, n: int, params: CoproductParams = DEFAULT) -> tuple[SparseMatrix, list[DiptBasis]]:
    """Matrix of the r-fold iterated coproduct on the degree-n component."""
    basis = dipt_basis_of_degree(n)
    images = [delta_iter(LinComb.basis(b), r, params).terms for b in basis]
    matrix, _ = matrix_of_images(images)
    return matrix, basis


def filtration_dim(r: int, n: int, params: CoproductParams = DEFAULT) -> int:
    """Dimension of the r-th filtration step within degree n."""
    if r < 1 or n < 1:
        raise ValueError("filtration level and degree must be >= 1")
    if r >= n:
        return len(dipt_basis_of_degree(n))
    matrix, _ = delta_matrix(r, n, params)
    return len(kernel_basis(matrix))


def prim_basis(n: int, params: CoproductParams = DEFAULT) -> list[LinComb]:
    """Echelon basis of the coproduct kernel on the degree-n component."""
    matrix, basis = delta_matrix(1, n, params)
    return [vec.map_keys(lambda j: basis[j]) for vec in kernel_basis(matrix)]


def triangle(x: LinComb, y: LinComb) -> LinComb:
    """succ minus star; on primitives this is the binary bracket."""
    return succ(x, y) - star(x, y)


def bracket(xs: Sequence[LinComb]) -> LinComb:
    """Nested bracket: x1 tri (x2 succ (x3 succ ... (x_{n-1} succ x_n)))."""
    if len(xs) < 2:
        raise ValueError("brackets need at least 2 arguments")
    inner = xs[-1]
    for x in reversed(xs[1:-1]):
        inner = succ(x, inner)
    return triangle(xs[0], inner)


def mag_tree_to_primitive(t: PlanarTree, gen: int = 0) -> LinComb:
    """Interpret a planar tree as an iterated bracket of generators."""
    if t.is_leaf:
        return gen_elem(gen)
    return bracket([mag_tree_to_primitive(c, gen) for c in t.children])


def mag_bracket_rank(n: int) -> int:
    """Rank of the bracket images of all degree-n planar trees."""
    images = [mag_tree_to_primitive(t) for t in enumerate_trees(n)]
    matrix, _ = matrix_of_images(images)
    return rank(matrix)


def corolla_iso_check(n: int) -> bool:
    """The n-bracket of n generators is corolla-led.

    Its single-tree component must be exactly the n-corolla with
    coefficient 1; every other term must be a multi-tree forest.
    """
    if n < 2:
        raise ValueError("corollas need arity >= 2")
    img = bracket([gen_elem()] * n)
    corolla_key = DiptBasis(Forest((corolla(n),)), (0,) * n)
    for key, c in img.items():
        if len(key.forest.trees) == 1:
            if key != corolla_key or c != 1:
                return False
    return img.coeff(corolla_key) == 1


_E: dict[DiptBasis, LinComb] = {}


def e_idempotent(x: LinComb) -> LinComb:
    """Projection onto primitives: e(x) = x - x1 * e(x2), recursively."""
    out = LinComb()
    for key, c in x.items():
        out = out + c * _e_basis(key)
    return out


def _e_basis(x: DiptBasis) -> LinComb:
    cached = _E.get(x)
    if cached is not None:
        return cached
    out = LinComb.basis(x)
    for (a, b), c in delta_basis(x).items():
        out = out - c * star(LinComb.basis(a), _e_basis(b))
    _E[x] = out
    return out


def asc_deconcat(word: tuple[int, ...]) -> TensorElement:
    """Deconcatenation sum of a word; zero on single letters."""
    if len(word) < 1:
        raise ValueError("words are nonempty")
    return TensorElement(
        2, {(word[:k], word[k:]): 1 for k in range(1, len(word))}
    )


def s_section(word: tuple[int, ...]) -> LinComb:
    """The all-leaf forest tagged with the word; a coalgebra section."""
    n = len(word)
    if n < 1:
        raise ValueError("words are nonempty")
    return LinComb.basis(DiptBasis(Forest((LEAF,) * n), tuple(word)))


def phi_corestrict(x: LinComb) -> LinComb:
    """Corestriction onto words: project iterated coproducts to generators.

    For a homogeneous element of degree n only the n-fold generator tuples
    survive, so the image of a degree-n element is a combination of
    length-n words. Satisfies phi(s_section(w)) = w.
    """
    out = LinComb()
    for key, c in x.items():
        n = key.degree
        if n == 1:
            out = out + LinComb.basis((key.word[0],), c)
            continue
        for tup, d in delta_iter(LinComb.basis(key), n - 1).items():
            if all(k.degree == 1 for k in tup):
                word = tuple(k.word[0] for k in tup)
                out = out + LinComb.basis(word, c * d)
    return out


def phi_tensor(te: TensorElement) -> TensorElement:
    """Apply the corestriction to both slots of an arity-2 tensor."""
    out = TensorElement.zero(2)
    for (a, b), c in te.items():
        fa = phi_corestrict(LinComb.basis(a))
        fb = phi_corestrict(LinComb.basis(b))
        for ka, ca in fa.items():
            for kb, cb in fb.items():
                out = out + (c * ca * cb) * TensorElement(2, {(ka, kb): 1})
    return out


@dataclass(frozen=True)
class PbwReport:
    forest_dims: tuple[int, ...]
    prim_dims: tuple[int, ...]
    composed: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.forest_dims == self.composed


def pbw_dim_check(max_n: int, params: CoproductParams = DEFAULT) -> PbwReport:
    """Forest dims must equal composition sums of computed primitive dims."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    prim = [len(prim_basis(n, params)) for n in range(1, max_n + 1)]
    forests = [len(dipt_basis_of_degree(n)) for n in range(1, max_n + 1)]
    composed = [composition_sum(prim, n) for n in range(1, max_n + 1)]
    return PbwReport(tuple(forests), tuple(prim), tuple(composed))
