"""Modular data: construction from even lattices, exact verification, fusion,
and colored framed-link invariants.

The central object pairs an unnormalized Hopf-link matrix with a vector of
twists. Everything else (quantum dimensions, global dimension, Gauss sums,
fusion multiplicities, charge conjugation) is derived from those two fields
and checked with exact cyclotomic arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import cyclo
from .cyclo import Cyclotomic, dot, root_of_unity, sum_values
from .errors import (
    NoLatticeProvenance,
    NonIntegralFusion,
    NotModular,
    NotProbabilistic,
    RankTooLarge,
    ValidationError,
)
from .lattice import (
    DiscriminantGroup,
    GramMatrix,
    bilinear_mod1,
    direct_sum,
    discriminant_group,
    quadratic_mod2,
)

__all__ = [
    "ModularData", "FusionTensor", "FramedLink", "GaussData",
    "RelationCheck", "RelationReport", "LatticeProvenance",
    "from_lattice", "quantum_dimensions", "gauss_data", "verlinde_fusion",
    "fusion_matrix", "fusion_probabilities", "dual_permutation",
    "check_modular_relations", "check_unitarity", "framed_link",
    "colored_link_invariant", "canonical_form", "direct_sum",
]

Label = int  # labels are plain indices; 0 is always the tensor unit


@dataclass(frozen=True)
class LatticeProvenance:
    gram: GramMatrix
    group: DiscriminantGroup


@dataclass(frozen=True)
class ModularData:
    """Rank, unnormalized Hopf-link matrix and twist vector.

    Row 0 of the matrix lists the quantum dimensions. Construction checks the
    cheap invariants (shape, symmetry, unit entries, twists are roots of
    unity); nondegeneracy is established by the verification operations.
    """

    rank: int
    s_tilde: tuple[tuple[Cyclotomic, ...], ...]
    twists: tuple[Cyclotomic, ...]
    provenance: LatticeProvenance | None = None
    label_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.rank < 1 or len(self.s_tilde) != self.rank or len(self.twists) != self.rank:
            raise ValidationError("rank does not match matrix and twist sizes")
        if any(len(row) != self.rank for row in self.s_tilde):
            raise ValidationError("s_tilde is not square")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.s_tilde[i][j] != self.s_tilde[j][i]:
                    raise ValidationError(f"s_tilde is not symmetric at ({i},{j})")
        if self.s_tilde[0][0] != 1:
            raise ValidationError("s_tilde[0][0] must be 1")
        if self.twists[0] != 1:
            raise ValidationError("twist of the tensor unit must be 1")
        for i, t in enumerate(self.twists):
            if t.root_exponent() is None:
                raise ValidationError(f"twist {i} is not a root of unity")
        if self.label_names is not None and len(self.label_names) != self.rank:
            raise ValidationError("label_names length does not match rank")


def from_lattice(gram: GramMatrix) -> ModularData:
    """Pointed modular data of an even lattice: rank |det B|, all d_i = 1.

    Entry (i,j) is e(<v_i, v_j> mod 1) and twist i is e((v_i^t B v_i mod 2)/2),
    over the canonical discriminant-group enumeration.
    """
    group = discriminant_group(gram)
    reps = group.representatives
    # B*v is integral for every representative; precompute the integer images.
    images = [tuple(int(x) for x in gram.apply(v)) for v in reps]
    rows = []
    for i, v in enumerate(reps):
        row = []
        for j in range(group.order):
            pairing = sum((a * b for a, b in zip(v, images[j])), Fraction(0)) % 1
            row.append(root_of_unity(pairing))
        rows.append(tuple(row))
    twists = tuple(
        root_of_unity(quadratic_mod2(gram, v) / 2) for v in reps
    )
    return ModularData(
        rank=group.order,
        s_tilde=tuple(rows),
        twists=twists,
        provenance=LatticeProvenance(gram, group),
    )


def quantum_dimensions(md: ModularData) -> tuple[Cyclotomic, ...]:
    """Unknot invariants d_i: row 0 of the Hopf-link matrix."""
    return md.s_tilde[0]


@dataclass(frozen=True)
class GaussData:
    d_squared: Cyclotomic
    p_plus: Cyclotomic
    p_minus: Cyclotomic
    identity_holds: bool


def gauss_data(md: ModularData) -> GaussData:
    """Global dimension D^2 = sum d_i^2, Gauss sums p+- = sum theta_i^{+-1} d_i^2,
    and the exact check p+ * p- == D^2."""
    dims = quantum_dimensions(md)
    squares = [d * d for d in dims]
    d_squared = sum_values(squares)
    p_plus = sum_values(t * s for t, s in zip(md.twists, squares))
    # twists are roots of unity, so conjugation is inversion
    p_minus = sum_values(t.conjugate() * s for t, s in zip(md.twists, squares))
    identity = (p_plus * p_minus - d_squared).is_zero()
    return GaussData(d_squared, p_plus, p_minus, identity)


@dataclass(frozen=True)
class FusionTensor:
    """Non-negative integer multiplicities, indexed [i][j][k]."""

    multiplicities: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def rank(self) -> int:
        return len(self.multiplicities)

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.multiplicities[i][j][k]


def verlinde_fusion(md: ModularData) -> FusionTensor:
    """Reconstruct fusion multiplicities from the Hopf-link matrix:

        N_{i,j}^k = (1/D^2) * sum_a S~_{ia} S~_{ja} conj(S~_{ka}) / d_a

    Every entry must come out a non-negative integer; anything else means the
    input is not modular data and NonIntegralFusion is raised.
    """
    rank = md.rank
    s = md.s_tilde
    dims = quantum_dimensions(md)
    if any(d.is_zero() for d in dims):
        raise ValidationError("zero quantum dimension")
    gauss = gauss_data(md)
    if gauss.d_squared.is_zero():
        raise NotModular("global dimension is zero")
    inv_d2 = gauss.d_squared.inverse()
    inv_dims = [d.inverse() for d in dims]
    # conj(S~_{ka})/d_a, precomputed per (k, a)
    weighted = [
        tuple(s[k][a].conjugate() * inv_dims[a] for a in range(rank))
        for k in range(rank)
    ]
    table = [[None] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i, rank):
            prods = [s[i][a] * s[j][a] for a in range(rank)]
            entries = []
            for k in range(rank):
                value = dot(prods, weighted[k]) * inv_d2
                if not value.is_rational_integer() or value.as_rational() < 0:
                    raise NonIntegralFusion(
                        f"N({i},{j})^{k} = {value} is not a non-negative integer"
                    )
                entries.append(int(value.as_rational()))
            table[i][j] = tuple(entries)
            table[j][i] = tuple(entries)
    return FusionTensor(tuple(tuple(row) for row in table))


def fusion_matrix(ft: FusionTensor, i: Label) -> tuple[tuple[int, ...], ...]:
    """The matrix N_i with (N_i)_{j,k} = N_{i,j}^k."""
    rank = ft.rank
    return tuple(tuple(ft[i, j, k] for k in range(rank)) for j in range(rank))


def fusion_probabilities(
    md: ModularData, ft: FusionTensor, i: Label, j: Label
) -> tuple[tuple[Label, Fraction], ...]:
    """Outcome distribution of fusing i with j: P(k) = N_{i,j}^k d_k / (d_i d_j).

    Normalisation to 1 follows from the dimension identity; weights that are
    not non-negative rationals are rejected.
    """
    dims = quantum_dimensions(md)
    denom = dims[i] * dims[j]
    if denom.is_zero():
        raise NotProbabilistic("zero quantum dimension in the denominator")
    inv = denom.inverse()
    outcomes = []
    for k in range(md.rank):
        mult = ft[i, j, k]
        if mult == 0:
            continue
        weight = dims[k] * inv * mult
        if not weight.is_rational():
            raise NotProbabilistic(f"weight for outcome {k} is irrational: {weight}")
        w = weight.as_rational()
        if w < 0:
            raise NotProbabilistic(f"weight for outcome {k} is negative: {w}")
        outcomes.append((k, w))
    return tuple(outcomes)


def _matrix_square(md: ModularData) -> list[list[Cyclotomic]]:
    rank = md.rank
    s = md.s_tilde
    return [[dot(s[i], s[j]) for j in range(rank)] for i in range(rank)]


def _conjugation_from_square(square, d_squared) -> tuple[int, ...]:
    rank = len(square)
    perm = []
    for i in range(rank):
        hits = [j for j in range(rank) if not square[i][j].is_zero()]
        if len(hits) != 1 or square[i][hits[0]] != d_squared:
            raise NotModular(f"row {i} of S~^2 is not D^2 times a unit vector")
        perm.append(hits[0])
    if perm[0] != 0:
        raise NotModular("charge conjugation does not fix the tensor unit")
    if any(perm[perm[i]] != i for i in range(rank)):
        raise NotModular("charge conjugation is not an involution")
    return tuple(perm)


def dual_permutation(md: ModularData) -> tuple[int, ...]:
    """Charge conjugation C with S~^2 = D^2 * C.

    Raises NotModular unless S~^2 / D^2 is a permutation matrix fixing 0 with
    C^2 = identity.
    """
    return _conjugation_from_square(_matrix_square(md), gauss_data(md).d_squared)


def check_unitarity(md: ModularData) -> bool:
    """Exact check of S~ * conj(S~)^t = D^2 * I."""
    rank = md.rank
    s = md.s_tilde
    conj_rows = [tuple(x.conjugate() for x in row) for row in s]
    d_squared = gauss_data(md).d_squared
    for i in range(rank):
        for j in range(i, rank):
            value = dot(s[i], conj_rows[j])
            expected = d_squared if i == j else Cyclotomic.zero()
            if value != expected:
                return False
    return True


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.passed)


def check_modular_relations(md: ModularData) -> RelationReport:
    """Exact verification of the contract relations behind the projective
    modular-group action:

        (S~ T)^3 = p+ * S~^2 * C = p+ * D^2 * I,
        S~^2 = D^2 * C,   C^2 = I,   T diagonal with T[0][0] = 1.

    The cube relation carries the charge-conjugation factor; without it the
    identity only holds when every label is self-dual. Failures are report
    entries, never exceptions.
    """
    checks = []
    rank = md.rank
    s = md.s_tilde

    checks.append(RelationCheck(
        "twists_unit", md.twists[0] == 1, "twist of the unit is 1"))

    symmetric = all(
        s[i][j] == s[j][i] for i in range(rank) for j in range(i + 1, rank)
    )
    checks.append(RelationCheck("s_symmetric", symmetric, "S~ = S~^t"))

    gauss = gauss_data(md)
    square = _matrix_square(md)

    try:
        perm = _conjugation_from_square(square, gauss.d_squared)
        checks.append(RelationCheck(
            "charge_conjugation", True, "S~^2 = D^2 C with C a permutation"))
        checks.append(RelationCheck(
            "conjugation_involution", all(perm[perm[i]] == i for i in range(rank)),
            "C^2 = I"))
    except NotModular as exc:
        checks.append(RelationCheck("charge_conjugation", False, str(exc)))
        checks.append(RelationCheck("conjugation_involution", False, "C undefined"))

    # (S~ T)^3 compared against p+ D^2 I (= p+ S~^2 C), all exact.
    st = [[s[i][j] * md.twists[j] for j in range(rank)] for i in range(rank)]
    st_cols = [tuple(st[i][j] for i in range(rank)) for j in range(rank)]
    st2 = [[dot(st[i], st_cols[j]) for j in range(rank)] for i in range(rank)]
    st3 = [[dot(st2[i], st_cols[j]) for j in range(rank)] for i in range(rank)]
    scalar = gauss.p_plus * gauss.d_squared
    zero = Cyclotomic.zero()
    cubed_ok = all(
        st3[i][j] == (scalar if i == j else zero)
        for i in range(rank) for j in range(rank)
    )
    checks.append(RelationCheck("st_cubed", cubed_ok, "(S~ T)^3 = p+ D^2 I"))

    return RelationReport(tuple(checks))


@dataclass(frozen=True)
class FramedLink:
    """Symmetric linking matrix (framings on the diagonal) plus a coloring."""

    linking: tuple[tuple[int, ...], ...]
    colors: tuple[Label, ...]

    def __post_init__(self):
        m = len(self.linking)
        if any(len(row) != m for row in self.linking):
            raise ValidationError("linking matrix is not square")
        for i in range(m):
            for j in range(i + 1, m):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValidationError("linking matrix is not symmetric")
        if len(self.colors) != m:
            raise ValidationError("need one color per link component")

    @property
    def components(self) -> int:
        return len(self.linking)


def framed_link(linking, colors) -> FramedLink:
    return FramedLink(
        tuple(tuple(int(x) for x in row) for row in linking),
        tuple(int(c) for c in colors),
    )


def colored_link_invariant(md: ModularData, link: FramedLink) -> Cyclotomic:
    """Invariant of a colored framed link for lattice-constructed data.

    Framing of component i contributes its self-pairing exponent halved,
    each crossing pair its mutual pairing:

        e( sum_i L_ii q(v_i)/2  +  sum_{i<j} L_ij b(v_i, v_j) )

    Unnormalized: the empty link maps to 1, the 0-framed unknot to d_i = 1
    and the Hopf link to the matrix entry.
    """
    if md.provenance is None:
        raise NoLatticeProvenance("link invariants need lattice-constructed data")
    if any(not 0 <= c < md.rank for c in link.colors):
        raise ValidationError("link color out of range")
    gram = md.provenance.gram
    reps = md.provenance.group.representatives
    exponent = Fraction(0)
    for i in range(link.components):
        v = reps[link.colors[i]]
        exponent += link.linking[i][i] * quadratic_mod2(gram, v) / 2
        for j in range(i + 1, link.components):
            w = reps[link.colors[j]]
            exponent += link.linking[i][j] * bilinear_mod1(gram, v, w)
    return root_of_unity(exponent)


def canonical_form(md: ModularData, max_rank: int = 8) -> bytes:
    """Lexicographically minimal serialization of (twists, s_tilde) over all
    relabelings that fix the tensor unit.

    Two modular data are equivalent iff their canonical forms agree. The
    search is exhaustive over (rank-1)! permutations, hence the rank bound.
    """
    if md.rank > max_rank:
        raise RankTooLarge(f"rank {md.rank} exceeds the bound {max_rank}")
    rank = md.rank
    twist_tok = [cyclo.format_root(t) for t in md.twists]
    s_tok = [[cyclo.format_value(x) for x in row] for row in md.s_tilde]
    best = None
    for tail in itertools.permutations(range(1, rank)):
        perm = (0,) + tail
        twists = ",".join(twist_tok[p] for p in perm)
        rows = ";".join(
            ",".join(s_tok[perm[i]][perm[j]] for j in range(rank))
            for i in range(rank)
        )
        candidate = f"twists:{twists}|s:{rows}"
        if best is None or candidate < best:
            best = candidate
    return best.encode("ascii")
