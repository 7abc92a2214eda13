"""Finite-dimensional left modules and their morphisms.

A ModuleRep stores one dim x dim action matrix per algebra basis element.
All constructions (kernels, quotients, duals, covers, envelopes) produce
explicit matrices with deterministic bases, so downstream invariants are
bit-reproducible.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import Algebra, column_span_basis, opposite
from .errors import InputError, InternalCheckError, UnsupportedFieldError
from .linalg import PrimeMatrix, nullspace, rref, solve

__all__ = [
    "ModuleRep",
    "Morphism",
    "IsoVerdict",
    "StandardModules",
    "zero_module",
    "regular_module",
    "direct_sum",
    "submodule",
    "quotient_module",
    "hom_space",
    "hom_space_full",
    "kernel",
    "image",
    "cokernel",
    "dualize",
    "standard_modules",
    "rad_module",
    "top",
    "soc",
    "top_multiplicities",
    "soc_multiplicities",
    "projective_cover",
    "injective_envelope",
    "summand_test",
    "is_isomorphic",
    "tensor_over_algebra",
    "TensorResult",
    "enveloping_module",
    "module_over_tensor",
    "endo_structure_constants",
]


class ModuleRep:
    """Left module over a basic algebra, given by action matrices."""

    def __init__(self, algebra: Algebra, action: np.ndarray, validate: bool = False):
        self.algebra = algebra
        action = np.asarray(action, dtype=np.int64) % algebra.field.p
        if action.ndim != 3 or action.shape[0] != algebra.dim or action.shape[1] != action.shape[2]:
            raise InputError("action tensor has wrong shape")
        self.action = action
        self.dim = action.shape[1]
        if validate:
            self.check()

    def act(self, x: np.ndarray) -> np.ndarray:
        """Matrix of the action of the algebra element with coordinates x."""
        p = self.algebra.field.p
        return np.einsum("a,aij->ij", np.asarray(x, dtype=np.int64) % p, self.action) % p

    def act_mat(self, x: np.ndarray) -> PrimeMatrix:
        return PrimeMatrix(self.algebra.field, self.act(x))

    def is_zero(self) -> bool:
        return self.dim == 0

    def check(self):
        """Assert the action respects structure constants and the unit."""
        alg = self.algebra
        p = alg.field.p
        lhs = np.einsum("aij,bjk->abik", self.action, self.action) % p
        rhs = np.einsum("abc,cik->abik", alg.mult, self.action) % p
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere((lhs != rhs).any(axis=(2, 3)))[0]
            raise InputError(
                f"action violates structure constants on basis pair "
                f"({alg.labels[bad[0]]}, {alg.labels[bad[1]]})"
            )
        if not np.array_equal(self.act(alg.unit), np.eye(self.dim, dtype=np.int64)):
            raise InputError("unit does not act as the identity")

    def content_hash(self) -> str:
        h = hashlib.sha256()
        h.update(b"module")
        h.update(self.algebra.content_hash().encode())
        h.update(self.dim.to_bytes(8, "little"))
        h.update(self.action.tobytes())
        return h.hexdigest()

    def __repr__(self) -> str:
        return f"ModuleRep(dim={self.dim} over dim-{self.algebra.dim} algebra)"


@dataclass
class Morphism:
    """Linear map intertwining two module actions; map is target.dim x source.dim."""

    source: ModuleRep
    target: ModuleRep
    map: PrimeMatrix

    def __post_init__(self):
        if self.map.rows != self.target.dim or self.map.cols != self.source.dim:
            raise InputError("morphism matrix has wrong shape")

    def check(self):
        for a in range(self.source.algebra.dim):
            lhs = (self.map.a @ self.source.action[a]) % self.map.field.p
            rhs = (self.target.action[a] @ self.map.a) % self.map.field.p
            if not np.array_equal(lhs, rhs):
                raise InputError(
                    f"map does not intertwine basis element "
                    f"{self.source.algebra.labels[a]}"
                )

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        if other.target is not self.source and other.target.dim != self.source.dim:
            raise InputError("morphisms not composable")
        return Morphism(other.source, self.target, self.map @ other.map)

    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.map.is_invertible()

    @staticmethod
    def identity(m: ModuleRep) -> "Morphism":
        return Morphism(m, m, m.algebra.field.identity(m.dim))

    @staticmethod
    def zero(source: ModuleRep, target: ModuleRep) -> "Morphism":
        return Morphism(source, target, source.algebra.field.zeros(target.dim, source.dim))


# ---------------------------------------------------------------------------
# elementary constructions


def zero_module(algebra: Algebra) -> ModuleRep:
    return ModuleRep(algebra, np.zeros((algebra.dim, 0, 0), dtype=np.int64))


def regular_module(algebra: Algebra) -> ModuleRep:
    return ModuleRep(algebra, algebra.regular_action())


def direct_sum(mods: list[ModuleRep]) -> tuple[ModuleRep, list[Morphism], list[Morphism]]:
    """Block sum with the canonical inclusions and projections."""
    if not mods:
        raise InputError("direct sum of an empty list needs an algebra; use zero_module")
    alg = mods[0].algebra
    for m in mods:
        if m.algebra is not alg and m.algebra.content_hash() != alg.content_hash():
            raise InputError("direct sum of modules over different algebras")
    dims = [m.dim for m in mods]
    total = sum(dims)
    action = np.zeros((alg.dim, total, total), dtype=np.int64)
    offs = np.cumsum([0] + dims)
    for t, m in enumerate(mods):
        action[:, offs[t] : offs[t + 1], offs[t] : offs[t + 1]] = m.action
    big = ModuleRep(alg, action)
    incs, projs = [], []
    for t, m in enumerate(mods):
        inc = np.zeros((total, m.dim), dtype=np.int64)
        inc[offs[t] : offs[t + 1]] = np.eye(m.dim, dtype=np.int64)
        incs.append(Morphism(m, big, PrimeMatrix(alg.field, inc)))
        projs.append(Morphism(big, m, PrimeMatrix(alg.field, inc.T.copy())))
    return big, incs, projs


def submodule(m: ModuleRep, basis: PrimeMatrix) -> tuple[ModuleRep, Morphism]:
    """Module structure on an invariant subspace; columns of basis must be
    independent and closed under the action."""
    alg = m.algebra
    if basis.cols == 0:
        sub = zero_module(alg)
        return sub, Morphism(sub, m, basis)
    action = np.zeros((alg.dim, basis.cols, basis.cols), dtype=np.int64)
    for a in range(alg.dim):
        moved = PrimeMatrix(alg.field, (m.action[a] @ basis.a) % alg.field.p)
        coords = solve(basis, moved)
        if coords is None:
            raise InputError("subspace is not invariant under the action")
        action[a] = coords.a
    sub = ModuleRep(alg, action)
    return sub, Morphism(sub, m, basis)


def _complement_projection(field, sub: PrimeMatrix, dim: int) -> tuple[PrimeMatrix, PrimeMatrix]:
    """Projection dim -> q and section q -> dim for the quotient by span(sub).

    The quotient basis is the image of the non-pivot standard basis vectors;
    a vector is reduced by the rref rows of the subspace and then read off at
    the free coordinates.
    """
    red, rank, pivots = rref(sub.transpose())
    free = [c for c in range(dim) if c not in pivots]
    rows = red.a[:rank]
    # x  ->  x - sum_i x[p_i] * row_i, then select free coordinates
    reducer = np.eye(dim, dtype=np.int64)
    for i, c in enumerate(pivots):
        reducer -= np.outer(rows[i], _unit(dim, c))
    reducer %= field.p
    proj = reducer[free, :]
    sec = np.zeros((dim, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        sec[f, k] = 1
    return PrimeMatrix(field, proj), PrimeMatrix(field, sec)


def _unit(dim: int, j: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.int64)
    v[j] = 1
    return v


def quotient_module(m: ModuleRep, sub: PrimeMatrix) -> tuple[ModuleRep, Morphism, PrimeMatrix]:
    """Quotient of m by the invariant subspace spanned by sub's columns.

    Returns (quotient, projection morphism, section matrix); the section
    picks the deterministic complement basis (non-pivot coordinates).
    """
    alg = m.algebra
    proj, sec = _complement_projection(alg.field, sub, m.dim)
    q = proj.rows
    action = np.zeros((alg.dim, q, q), dtype=np.int64)
    for a in range(alg.dim):
        action[a] = (proj.a @ m.action[a] @ sec.a) % alg.field.p
    quot = ModuleRep(alg, action)
    return quot, Morphism(m, quot, proj), sec


# ---------------------------------------------------------------------------
# hom spaces


def _generators(alg: Algebra) -> list[np.ndarray]:
    """Elements generating the algebra: idempotents plus a radical basis.
    Intertwining with these implies intertwining with everything."""
    gens = [e for e in alg.idempotents]
    try:
        r = alg.radical()
    except UnsupportedFieldError:
        return [alg.basis_vector(i) for i in range(alg.dim)]
    gens.extend(r.a[:, j] for j in range(r.cols))
    return gens


class HomSpace:
    """Basis of Hom_A(m, n) with coordinate bookkeeping.

    Vectorisation is row-major on (n.dim, m.dim) matrices; the basis is the
    deterministic nullspace basis of the stacked intertwining constraints.
    """

    def __init__(self, m: ModuleRep, n: ModuleRep):
        if m.algebra is not n.algebra and m.algebra.content_hash() != n.algebra.content_hash():
            raise InputError("hom space needs modules over the same algebra")
        self.source = m
        self.target = n
        alg = m.algebra
        p = alg.field.p
        nm = n.dim * m.dim
        if nm == 0:
            self.matrix = alg.field.zeros(0, 0)
            self.dim = 0
            return
        blocks = []
        for g in _generators(alg):
            rho_m = m.act(g)
            rho_n = n.act(g)
            blocks.append(
                (np.kron(np.eye(n.dim, dtype=np.int64), rho_m.T) - np.kron(rho_n, np.eye(m.dim, dtype=np.int64)))
                % p
            )
        constraints = PrimeMatrix(alg.field, np.vstack(blocks) if blocks else np.zeros((0, nm), dtype=np.int64))
        self.matrix = nullspace(constraints)
        self.dim = self.matrix.cols

    def basis_map(self, j: int) -> PrimeMatrix:
        return PrimeMatrix(
            self.source.algebra.field,
            self.matrix.a[:, j].reshape(self.target.dim, self.source.dim).copy(),
        )

    def morphisms(self) -> list[Morphism]:
        return [Morphism(self.source, self.target, self.basis_map(j)) for j in range(self.dim)]

    def coords(self, f: PrimeMatrix) -> np.ndarray:
        """Coordinates of an intertwiner in this basis."""
        if self.dim == 0:
            if f.a.any():
                raise InputError("map is not in the hom space")
            return np.zeros(0, dtype=np.int64)
        vec = PrimeMatrix(self.matrix.field, f.a.reshape(-1, 1).copy())
        c = solve(self.matrix, vec)
        if c is None:
            raise InputError("map is not in the hom space")
        return c.a[:, 0]

    def from_coords(self, c: np.ndarray) -> PrimeMatrix:
        p = self.matrix.field.p
        vec = (self.matrix.a @ (np.asarray(c, dtype=np.int64) % p)) % p
        return PrimeMatrix(self.matrix.field, vec.reshape(self.target.dim, self.source.dim))


def hom_space_full(m: ModuleRep, n: ModuleRep) -> HomSpace:
    return HomSpace(m, n)


def hom_space(m: ModuleRep, n: ModuleRep) -> list[Morphism]:
    return HomSpace(m, n).morphisms()


# ---------------------------------------------------------------------------
# kernels, images, cokernels, duality


def kernel(f: Morphism) -> tuple[ModuleRep, Morphism]:
    basis = nullspace(f.map)
    return submodule(f.source, basis)


def image(f: Morphism) -> tuple[ModuleRep, Morphism]:
    basis = column_span_basis(f.map)
    return submodule(f.target, basis)


def cokernel(f: Morphism) -> tuple[ModuleRep, Morphism]:
    basis = column_span_basis(f.map)
    quot, proj, _ = quotient_module(f.target, basis)
    return quot, proj


def dualize(m: ModuleRep) -> ModuleRep:
    """k-linear dual, a module over the opposite algebra (transposed action).
    Dualizing twice returns equal matrices over the original algebra."""
    return ModuleRep(opposite(m.algebra), np.transpose(m.action, (0, 2, 1)).copy())


# ---------------------------------------------------------------------------
# socle, top, radical of a module


def rad_module(m: ModuleRep) -> tuple[ModuleRep, Morphism]:
    """rad(m) = (radical of the algebra) . m, as a submodule."""
    r = m.algebra.radical()
    if r.cols == 0 or m.dim == 0:
        sub = zero_module(m.algebra)
        return sub, Morphism(sub, m, m.algebra.field.zeros(m.dim, 0))
    cols = np.hstack([m.act(r.a[:, j]) for j in range(r.cols)])
    basis = column_span_basis(PrimeMatrix(m.algebra.field, cols % m.algebra.field.p))
    return submodule(m, basis)


def top(m: ModuleRep) -> tuple[ModuleRep, Morphism]:
    _, inc = rad_module(m)
    quot, proj, _ = quotient_module(m, inc.map)
    return quot, proj


def soc(m: ModuleRep) -> tuple[ModuleRep, Morphism]:
    """Joint kernel of the radical action."""
    r = m.algebra.radical()
    if r.cols == 0:
        return submodule(m, m.algebra.field.identity(m.dim))
    stacked = np.vstack([m.act(r.a[:, j]) for j in range(r.cols)])
    basis = nullspace(PrimeMatrix(m.algebra.field, stacked))
    return submodule(m, basis)


def _semisimple_multiplicities(m: ModuleRep) -> list[int]:
    """Multiplicity of each simple S(i) in a semisimple module: dim e_i.m."""
    out = []
    for e in m.algebra.idempotents:
        out.append(PrimeMatrix(m.algebra.field, m.act(e)).rank())
    return out


def top_multiplicities(m: ModuleRep) -> list[int]:
    t, _ = top(m)
    return _semisimple_multiplicities(t)


def soc_multiplicities(m: ModuleRep) -> list[int]:
    s, _ = soc(m)
    return _semisimple_multiplicities(s)


# ---------------------------------------------------------------------------
# standard modules


@dataclass
class StandardModules:
    """P(i), S(i), I(i) per idempotent, the regular module and its dual."""

    regular: ModuleRep
    coregular: ModuleRep  # D(A) as a left module
    projectives: list[ModuleRep]
    proj_bases: list[PrimeMatrix]  # basis of A.e_i in algebra coordinates
    simples: list[ModuleRep]
    injectives: list[ModuleRep]


def standard_modules(a: Algebra) -> StandardModules:
    cached = getattr(a, "_std_cache", None)
    if cached is not None:
        return cached
    reg = regular_module(a)
    projectives, proj_bases, simples = [], [], []
    for e in a.idempotents:
        basis = column_span_basis(PrimeMatrix(a.field, a.right_mult(e)))
        pi, _ = submodule(reg, basis)
        projectives.append(pi)
        proj_bases.append(basis)
        si, _ = top(pi)
        simples.append(si)
    op = opposite(a)
    op_std_proj = []
    reg_op = regular_module(op)
    for e in op.idempotents:
        basis = column_span_basis(PrimeMatrix(a.field, op.right_mult(e)))
        pi_op, _ = submodule(reg_op, basis)
        op_std_proj.append(pi_op)
    injectives = [dualize(pi_op) for pi_op in op_std_proj]
    coregular = dualize(reg_op)
    std = StandardModules(reg, coregular, projectives, proj_bases, simples, injectives)
    a._std_cache = std
    return std


# ---------------------------------------------------------------------------
# projective covers and injective envelopes


@dataclass
class Cover:
    """A projective cover P -> m (or dually m -> I), with the vertex index
    of each indecomposable summand of the projective (injective) side."""

    morphism: Morphism
    summands: list[int]

    @property
    def projective(self) -> ModuleRep:
        return self.morphism.source


def projective_cover(m: ModuleRep) -> Cover:
    alg = m.algebra
    std = standard_modules(alg)
    t, proj_top = top(m)
    pieces: list[ModuleRep] = []
    vertex_of: list[int] = []
    gen_images: list[np.ndarray] = []
    for i, e in enumerate(alg.idempotents):
        block = column_span_basis(PrimeMatrix(alg.field, t.act(e)))
        for j in range(block.cols):
            v = PrimeMatrix(alg.field, block.a[:, j].reshape(-1, 1))
            lift = solve(proj_top.map, v)
            if lift is None:
                raise InternalCheckError("projective cover lift failed")
            w = (m.act(e) @ lift.a[:, 0]) % alg.field.p
            pieces.append(std.projectives[i])
            vertex_of.append(i)
            gen_images.append(w)
    if not pieces:
        z = zero_module(alg)
        return Cover(Morphism(z, m, alg.field.zeros(m.dim, 0)), [])
    big, _, _ = direct_sum(pieces)
    cols = []
    for idx, w in enumerate(gen_images):
        basis = std.proj_bases[vertex_of[idx]]
        block = np.zeros((m.dim, basis.cols), dtype=np.int64)
        for j in range(basis.cols):
            block[:, j] = (m.act(basis.a[:, j]) @ w) % alg.field.p
        cols.append(block)
    mat = PrimeMatrix(alg.field, np.hstack(cols) if cols else np.zeros((m.dim, 0), dtype=np.int64))
    return Cover(Morphism(big, m, mat), vertex_of)


def injective_envelope(m: ModuleRep) -> Cover:
    """Essential embedding of m into a sum of I(i), via the dual cover."""
    md = dualize(m)
    cov = projective_cover(md)
    target = dualize(cov.projective)
    emb = Morphism(m, target, cov.morphism.map.transpose())
    return Cover(emb, list(cov.summands))


# ---------------------------------------------------------------------------
# summand and isomorphism tests


def endo_structure_constants(hs: HomSpace) -> np.ndarray:
    """Structure constants of End(m) in the hom basis, with f*g = f o g."""
    d = hs.dim
    mult = np.zeros((d, d, d), dtype=np.int64)
    maps = [hs.basis_map(j) for j in range(d)]
    for i in range(d):
        for j in range(d):
            mult[i, j] = hs.coords(maps[i] @ maps[j])
    return mult


def _endo_radical_dim(hs: HomSpace) -> tuple[int, PrimeMatrix]:
    """Dimension and basis of rad End(m) via the trace form; needs p > dim End."""
    alg = hs.source.algebra
    p = alg.field.p
    d = hs.dim
    if p <= d:
        raise UnsupportedFieldError(f"endomorphism radical needs p > {d}")
    mult = endo_structure_constants(hs)
    left = np.transpose(mult, (0, 2, 1)) % p
    gram = np.einsum("aij,bji->ab", left, left) % p
    rad = nullspace(PrimeMatrix(alg.field, gram))
    return rad.cols, rad


def summand_test(p_mod: ModuleRep, m: ModuleRep) -> bool:
    """True iff p (with local endomorphism algebra) splits off m.

    Tests whether some composite p -> m -> p of hom-basis elements is
    invertible; the span of those composites is a two-sided ideal of the
    local algebra End(p), so it either meets the units or lies in the
    radical.
    """
    if p_mod.dim == 0:
        raise InputError("summand test needs a nonzero module with local endomorphisms")
    end_p = hom_space_full(p_mod, p_mod)
    rad_dim, _ = _endo_radical_dim(end_p)
    if rad_dim != end_p.dim - 1:
        raise InputError(
            "endomorphism algebra is not local (decompose the module first): "
            f"dim End = {end_p.dim}, dim rad End = {rad_dim}"
        )
    if m.dim == 0:
        return False
    to_m = hom_space_full(p_mod, m)
    from_m = hom_space_full(m, p_mod)
    for i in range(from_m.dim):
        g = from_m.basis_map(i)
        for j in range(to_m.dim):
            f = to_m.basis_map(j)
            if (g @ f).is_invertible():
                return True
    return False


@dataclass(frozen=True)
class IsoVerdict:
    """Result of a (possibly randomized) isomorphism test."""

    isomorphic: bool
    certified: bool  # exact verdict (dimension obstruction or explicit iso)
    trials: int
    seed: int
    failure_bound: str  # probability bound when the negative is uncertified

    def __bool__(self) -> bool:
        return self.isomorphic


def is_isomorphic(m: ModuleRep, n: ModuleRep, seed: int = 0, trials: int = 24) -> IsoVerdict:
    """Randomized isomorphism test over a large prime field.

    Searches for an invertible element among seeded random combinations of a
    Hom(m, n) basis; a hit certifies isomorphism.  A miss after all trials is
    declared non-isomorphic with failure probability at most (dim/p)^trials.
    """
    p = m.algebra.field.p
    if m.dim != n.dim:
        return IsoVerdict(False, True, 0, seed, "0")
    if m.dim == 0:
        return IsoVerdict(True, True, 0, seed, "0")
    h_mn = hom_space_full(m, n)
    h_nm = hom_space_full(n, m)
    if h_mn.dim != h_nm.dim or h_mn.dim == 0:
        return IsoVerdict(False, True, 0, seed, "0")
    rng = random.Random(seed)
    for t in range(1, trials + 1):
        coeffs = np.array([rng.randrange(p) for _ in range(h_mn.dim)], dtype=np.int64)
        cand = h_mn.from_coords(coeffs)
        if cand.is_invertible():
            return IsoVerdict(True, True, t, seed, "0")
    # isomorphic modules have Hom(m, n) of the same dimension as End(m),
    # so a mismatch upgrades the negative to a certificate
    if h_mn.dim != hom_space_full(m, m).dim:
        return IsoVerdict(False, True, trials, seed, "0")
    return IsoVerdict(False, False, trials, seed, f"({m.dim}/{p})^{trials}")


# ---------------------------------------------------------------------------
# tensor products over the algebra


@dataclass
class TensorResult:
    """x (x)_A y as an explicit quotient of the vector-space tensor product."""

    dim: int
    proj: PrimeMatrix  # (x.dim * y.dim) -> dim
    sec: PrimeMatrix
    module: Optional[ModuleRep]  # present when a commuting left action was given


def tensor_over_algebra(
    x_right: ModuleRep,
    y: ModuleRep,
    left: Optional[tuple[Algebra, np.ndarray]] = None,
) -> TensorResult:
    """Tensor over A of a right module (given as a module over A^op) with a
    left module.

    ``left`` optionally supplies (B, matrices) for a left B-action on x that
    commutes with the right A-action; the quotient then inherits it.
    """
    a_op = x_right.algebra
    a = opposite(a_op)
    if y.algebra is not a and y.algebra.content_hash() != a.content_hash():
        raise InputError("tensor factors are not over matching algebras")
    field = a.field
    p = field.p
    dx, dy = x_right.dim, y.dim
    big = dx * dy
    rels = []
    eye_x = np.eye(dx, dtype=np.int64)
    eye_y = np.eye(dy, dtype=np.int64)
    for i in range(a.dim):
        g = a.basis_vector(i)
        r = (np.kron(x_right.act(g), eye_y) - np.kron(eye_x, y.act(g))) % p
        rels.append(r)
    relmat = PrimeMatrix(field, np.hstack(rels) if rels else np.zeros((big, 0), dtype=np.int64))
    sub = column_span_basis(relmat)
    proj, sec = _complement_projection(field, sub, big)
    module = None
    if left is not None:
        b_alg, left_action = left
        action = np.zeros((b_alg.dim, proj.rows, proj.rows), dtype=np.int64)
        for bi in range(b_alg.dim):
            action[bi] = (proj.a @ np.kron(left_action[bi] % p, eye_y) @ sec.a) % p
        module = ModuleRep(b_alg, action)
    return TensorResult(proj.rows, proj, sec, module)


def enveloping_module(a: Algebra, env: Optional[Algebra] = None) -> ModuleRep:
    """The algebra as a left module over its enveloping algebra A (x) A^op:
    the pair (u, v) acts by z -> u z v."""
    from .algebra import enveloping as _env

    if env is None:
        env = _env(a)
    p = a.field.p
    action = np.zeros((env.dim, a.dim, a.dim), dtype=np.int64)
    for u in range(a.dim):
        lu = a.left_mult(a.basis_vector(u))
        for v in range(a.dim):
            rv = a.right_mult(a.basis_vector(v))
            action[u * a.dim + v] = (lu @ rv) % p
    return ModuleRep(env, action)


def module_over_tensor(axb: Algebra, left_dim_a: int, left_action: np.ndarray, right_action: np.ndarray) -> ModuleRep:
    """Module over a tensor algebra A (x) B from commuting actions.

    ``left_action`` has one matrix per A basis element, ``right_action`` one
    per B basis element; the pair basis (u, v) acts by their product.
    """
    dim_b = axb.dim // left_dim_a
    d = left_action.shape[1]
    p = axb.field.p
    action = np.zeros((axb.dim, d, d), dtype=np.int64)
    for u in range(left_dim_a):
        for v in range(dim_b):
            action[u * dim_b + v] = (left_action[u] @ right_action[v]) % p
    return ModuleRep(axb, action)
