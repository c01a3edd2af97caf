"""The Koszul-dual free algebra and the chain complex of the free algebra.

The dual algebra lives on (word, tag) pairs with tag either the unit or a
single generator: products follow three rules (word concatenation on
untagged pairs for the associative product, and two absorption rules for
the one-sided product) and vanish on every other basis combination, which
makes the four vanishing identities

    (x > y) * z = 0,   x > (y * z) = 0,   x * (y > z) = 0,   (x > y) > z = 0

hold on the nose. Its dimensions are 1, 2, 2, 2, ...

The chain complex of the free two-product algebra has modules
C_n = K{*,>} (x) D^(x)n for n >= 2 and C_1 = D. Face maps multiply
adjacent slots: the * symbol always uses the associative product, the >
symbol uses it except at the last position, where the one-sided product
applies. The differential is the alternating face sum; a contracting
homotopy peels the last slot through the canonical basis splitting and
certifies exactness above degree one, i.e. Betti numbers (1, 0, 0, ...)
in arity 1 and zero in higher arities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .linalg import LinComb, matrix_of_images, rank
from .freealg import (
    DiptBasis,
    decompose_basis,
    dipt_basis_of_degree,
    star_basis,
    succ_basis,
    word_str,
)
from .trees import Forest

SYM_STAR = "*"
SYM_SUCC = ">"


# ---------------------------------------------------------------------------
# Free Koszul-dual algebra on (word, tag) pairs.


@dataclass(frozen=True)
class QNBasis:
    """A nonempty word with an optional trailing generator tag."""

    word: tuple[int, ...]
    tag: int | None = None

    def __post_init__(self):
        if not self.word:
            raise ValueError("words are nonempty")

    @property
    def degree(self) -> int:
        return len(self.word) + (0 if self.tag is None else 1)

    def __str__(self) -> str:
        tag = "1" if self.tag is None else word_str((self.tag,))
        return f"{word_str(self.word)} @ {tag}"


def qn_generator(i: int = 0) -> QNBasis:
    return QNBasis((i,), None)


def qn_star_basis(a: QNBasis, b: QNBasis) -> LinComb:
    if a.tag is None and b.tag is None:
        return LinComb.basis(QNBasis(a.word + b.word, None))
    return LinComb()


def qn_succ_basis(a: QNBasis, b: QNBasis) -> LinComb:
    if a.tag is not None:
        return LinComb()
    if b.tag is not None and len(b.word) >= 2:
        return LinComb.basis(QNBasis(a.word + b.word, b.tag))
    if b.tag is None and len(b.word) == 1:
        return LinComb.basis(QNBasis(a.word, b.word[0]))
    return LinComb()


def _qn_bilinear(op: Callable[[QNBasis, QNBasis], LinComb]):
    def apply(x: LinComb, y: LinComb) -> LinComb:
        out = LinComb()
        for ka, ca in x.items():
            for kb, cb in y.items():
                out = out + (ca * cb) * op(ka, kb)
        return out

    return apply


qn_star = _qn_bilinear(qn_star_basis)
qn_succ = _qn_bilinear(qn_succ_basis)


def qn_basis_of_degree(n: int, num_gens: int = 1) -> list[QNBasis]:
    if n < 1:
        raise ValueError("degree must be >= 1")
    words: list[tuple[int, ...]] = [()]
    for _ in range(n):
        words = [w + (i,) for w in words for i in range(num_gens)]
    out = [QNBasis(w, None) for w in words]
    if n >= 2:
        shorter: list[tuple[int, ...]] = [()]
        for _ in range(n - 1):
            shorter = [w + (i,) for w in shorter for i in range(num_gens)]
        out += [QNBasis(w, i) for w in shorter for i in range(num_gens)]
    return sorted(out, key=str)


def qn_dim_table(max_n: int) -> list[int]:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    return [len(qn_basis_of_degree(n)) for n in range(1, max_n + 1)]


def qn_universal_image(b: QNBasis, target_star, target_succ, generators):
    """Evaluate via word (x) 1 = product of generators, word (x) v = (...) > v."""
    head = generators[b.word[0]]
    for i in b.word[1:]:
        head = target_star(head, generators[i])
    if b.tag is None:
        return head
    return target_succ(head, generators[b.tag])


# ---------------------------------------------------------------------------
# Chain complex.


@dataclass(frozen=True)
class ChainKey:
    """Basis chain: a symbol with n >= 2 algebra slots, or a bare slot."""

    symbol: str | None
    slots: tuple[DiptBasis, ...]

    def __post_init__(self):
        if not self.slots:
            raise ValueError("chains need at least one slot")
        if (self.symbol is None) != (len(self.slots) == 1):
            raise ValueError("the symbol is carried exactly in arity >= 2")
        if self.symbol not in (None, SYM_STAR, SYM_SUCC):
            raise ValueError(f"unknown symbol {self.symbol!r}")

    @property
    def arity(self) -> int:
        return len(self.slots)

    @property
    def weight(self) -> int:
        return sum(s.degree for s in self.slots)

    def __str__(self) -> str:
        if self.symbol is None:
            return str(self.slots[0])
        return f"{self.symbol}<" + " ; ".join(str(s) for s in self.slots) + ">"


def chain(symbol: str | None, slots: Iterable[DiptBasis]) -> ChainKey:
    slots = tuple(slots)
    if len(slots) == 1:
        return ChainKey(None, slots)
    return ChainKey(symbol, slots)


def chain_basis(arity: int, weight: int, num_gens: int = 1) -> list[ChainKey]:
    """All basis chains of the given arity whose slot degrees sum to weight."""
    if arity < 1 or weight < arity:
        return []
    if arity == 1:
        return [ChainKey(None, (b,)) for b in dipt_basis_of_degree(weight, num_gens)]

    def slot_tuples(rest: int, parts: int):
        if parts == 1:
            yield from ((b,) for b in dipt_basis_of_degree(rest, num_gens))
            return
        for head in range(1, rest - parts + 2):
            for b in dipt_basis_of_degree(head, num_gens):
                for tail in slot_tuples(rest - head, parts - 1):
                    yield (b,) + tail

    out = [
        ChainKey(sym, slots)
        for sym in (SYM_STAR, SYM_SUCC)
        for slots in slot_tuples(weight, arity)
    ]
    return sorted(out, key=str)


def face_basis(i: int, key: ChainKey) -> ChainKey:
    """The i-th face (1-indexed), merging slots i and i+1."""
    n = key.arity
    if not 1 <= i <= n - 1:
        raise ValueError(f"face index {i} out of range for arity {n}")
    use_succ = key.symbol == SYM_SUCC and i == n - 1
    merge = succ_basis if use_succ else star_basis
    merged = merge(key.slots[i - 1], key.slots[i])
    slots = key.slots[: i - 1] + (merged,) + key.slots[i + 1 :]
    return chain(key.symbol, slots)


def face(i: int, c: LinComb) -> LinComb:
    return c.map_keys(lambda key: face_basis(i, key))


def differential(c: LinComb) -> LinComb:
    """Alternating sum of faces; zero on arity-1 chains."""
    out = LinComb()
    for key, coeff in c.items():
        for i in range(1, key.arity):
            sign = 1 if i % 2 == 1 else -1
            out = out + LinComb.basis(face_basis(i, key), sign * coeff)
    return out


def homotopy_basis(key: ChainKey) -> LinComb:
    """Contracting homotopy: peel the last slot once via the canonical splitting.

    For the > symbol the last slot must be a single non-leaf tree u, which
    splits as u = A > B; for the * symbol it must be a multi-tree forest,
    splitting off its last tree. Anything else (in particular a bare
    generator) maps to zero. Arity-1 chains pick the symbol matching the
    peeling case. The sign is (-1)^(n+1) for input arity n.
    """
    n = key.arity
    u = key.slots[-1]
    trees = u.forest.trees
    sign = 1 if (n + 1) % 2 == 0 else -1
    if key.symbol in (SYM_SUCC, None) and len(trees) == 1 and not trees[0].is_leaf:
        _, left, right = decompose_basis(u)
        out_key = ChainKey(SYM_SUCC, key.slots[:-1] + (left, right))
        return LinComb.basis(out_key, sign)
    if key.symbol in (SYM_STAR, None) and len(trees) >= 2:
        d = trees[-1].degree
        left = DiptBasis(Forest(trees[:-1]), u.word[: u.degree - d])
        right = DiptBasis(Forest(trees[-1:]), u.word[u.degree - d :])
        out_key = ChainKey(SYM_STAR, key.slots[:-1] + (left, right))
        return LinComb.basis(out_key, sign)
    return LinComb()


def homotopy(c: LinComb) -> LinComb:
    out = LinComb()
    for key, coeff in c.items():
        out = out + coeff * homotopy_basis(key)
    return out


def differential_matrix(arity: int, weight: int):
    """Matrix of d on the (arity, weight) piece; columns follow chain_basis."""
    basis = chain_basis(arity, weight)
    images = [differential(LinComb.basis(b)) for b in basis]
    matrix, _ = matrix_of_images(images)
    return matrix, basis


def homology_rank(arity: int, weight: int) -> int:
    """dim ker(d) - rank(d one arity up) on the graded piece, exactly."""
    if arity < 1 or weight < arity:
        raise ValueError("need arity >= 1 and weight >= arity")
    dim_here = len(chain_basis(arity, weight))
    if arity == 1:
        kernel_dim = dim_here
    else:
        matrix, _ = differential_matrix(arity, weight)
        kernel_dim = dim_here - rank(matrix)
    above, _ = differential_matrix(arity + 1, weight)
    return kernel_dim - rank(above)


@dataclass(frozen=True)
class KoszulReport:
    pieces: tuple[dict, ...]
    square_zero_ok: bool
    simplicial_ok: bool
    homotopy_ok: bool
    betti_ok: bool
    witness: str | None = None

    @property
    def koszul_ok(self) -> bool:
        return (
            self.square_zero_ok
            and self.simplicial_ok
            and self.homotopy_ok
            and self.betti_ok
        )

    def to_json(self) -> dict:
        out = {"pieces": list(self.pieces), "koszul_ok": self.koszul_ok}
        if self.witness:
            out["witness"] = self.witness
        return out


def koszul_report(
    max_arity: int = 4,
    weight_cap: int = 5,
    homotopy_arity_cap: int = 4,
    homotopy_weight_cap: int = 4,
    tamper: Callable[[LinComb], LinComb] | None = None,
) -> KoszulReport:
    """Exactness certificate: d^2 = 0, simplicial identities, dh + hd = id,
    and the Betti table on all graded pieces within the caps.

    ``tamper`` post-processes every differential (test hook for negative
    controls); the identity leaves the certificate intact.
    """
    d = differential if tamper is None else (lambda c: tamper(differential(c)))
    witness = None

    square_zero_ok = True
    simplicial_ok = True
    for arity in range(2, max_arity + 2):
        for weight in range(arity, weight_cap + 1):
            for b in chain_basis(arity, weight):
                if arity >= 2 and d(d(LinComb.basis(b))):
                    square_zero_ok = False
                    witness = witness or f"d^2 != 0 on {b}"
                for i in range(1, arity):
                    for j in range(i + 1, arity):
                        lhs = face(i, face(j, LinComb.basis(b)))
                        rhs = face(j - 1, face(i, LinComb.basis(b)))
                        if lhs != rhs:
                            simplicial_ok = False
                            witness = witness or f"d_{i} d_{j} != d_{j-1} d_{i} on {b}"

    homotopy_ok = True
    for arity in range(2, homotopy_arity_cap + 1):
        for weight in range(arity, homotopy_weight_cap + 1):
            for b in chain_basis(arity, weight):
                x = LinComb.basis(b)
                if d(homotopy(x)) + homotopy(d(x)) != x:
                    homotopy_ok = False
                    witness = witness or f"dh + hd != id on {b}"

    pieces = []
    betti_ok = True
    for arity in range(1, max_arity + 1):
        for weight in range(arity, weight_cap + 1):
            basis = chain_basis(arity, weight)
            if arity == 1:
                kernel_dim = len(basis)
            else:
                images = [d(LinComb.basis(b)) for b in basis]
                matrix, _ = matrix_of_images(images)
                kernel_dim = len(basis) - rank(matrix)
            above = chain_basis(arity + 1, weight)
            above_matrix, _ = matrix_of_images([d(LinComb.basis(b)) for b in above])
            image_rank = rank(above_matrix)
            betti = kernel_dim - image_rank
            expected = 1 if (arity == 1 and weight == 1) else 0
            if betti != expected:
                betti_ok = False
                witness = witness or (
                    f"betti({arity}, {weight}) = {betti}, expected {expected}"
                )
            pieces.append(
                {
                    "arity": arity,
                    "weight": weight,
                    "kernel": kernel_dim,
                    "image": image_rank,
                    "betti": betti,
                }
            )

    return KoszulReport(
        tuple(pieces), square_zero_ok, simplicial_ok, homotopy_ok, betti_ok, witness
    )
