"""Orthogonal and independent representations of graphs: verification,
locality, and exact solvers for the orthogonality dimension, its local
variant, and minrank over prime fields.

An orthogonal representation assigns to each vertex a vector with nonzero
self inner product, orthogonal across every edge.  Its locality is the
maximum rank of the vectors on a closed neighborhood.  Searches enumerate
one representative per scalar class (scaling a vector by a nonzero field
element changes nothing), restrict to anisotropic vectors, and break the
coordinate-permutation symmetry on the first assigned vertex.

Rational vectors are accepted for verification only: they certify
statements over the reals exactly, but are never searched for.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import CapExceededError, ParamResult, check_proper, local_lower_bound, max_clique
from .fields import Field, PrimeField
from .graphs import Graph, _bits, complement
from .linalg import EchelonBasis

DEFAULT_OD_VERTEX_CAP = 16
DEFAULT_OD_DIM_CAP = 6
DEFAULT_LOCAL_OD_VERTEX_CAP = 12
DEFAULT_MINRANK_CAP = 12


@dataclass(frozen=True)
class Representation:
    """Vertex-to-vector assignment over a field; kind 'orthogonal' or 'independent'."""

    field: Field
    t: int
    vectors: tuple
    kind: str = "orthogonal"

    def __post_init__(self):
        object.__setattr__(
            self, "vectors", tuple(tuple(self.field.element(x) for x in v) for v in self.vectors)
        )
        for v in self.vectors:
            if len(v) != self.t:
                raise ValueError(f"vector of length {len(v)}, expected {self.t}")


@dataclass(frozen=True)
class LocalOdResult:
    """Exact-under-cap local orthogonality dimension with witness."""

    value: int
    witness: Representation
    dim_cap: int
    exact_under_cap: bool
    lower_bound_reason: str


# -- verification -------------------------------------------------------------


def orthogonality_violations(g: Graph, rep: Representation) -> list[str]:
    """Violation report for the orthogonal-representation conditions; empty means valid."""
    if len(rep.vectors) != g.n:
        raise ValueError(f"representation covers {len(rep.vectors)} vertices, graph has {g.n}")
    f = rep.field
    out = []
    for v in range(g.n):
        if f.inner(rep.vectors[v], rep.vectors[v]) == f.zero:
            out.append(f"vertex {v}: self-orthogonal vector")
    for u, v in g.edges():
        if f.inner(rep.vectors[u], rep.vectors[v]) != f.zero:
            out.append(f"edge ({u},{v}): vectors not orthogonal")
    return out


def independence_violations(g: Graph, rep: Representation) -> list[str]:
    """Violations of the independent-representation condition: each vector must
    lie outside the span of its neighbors' vectors."""
    if len(rep.vectors) != g.n:
        raise ValueError(f"representation covers {len(rep.vectors)} vertices, graph has {g.n}")
    f = rep.field
    out = []
    for v in range(g.n):
        basis = EchelonBasis(f, rep.t, (rep.vectors[u] for u in _bits(g.adj[v])))
        if basis.contains(rep.vectors[v]):
            out.append(f"vertex {v}: vector lies in the span of its neighbors")
    return out


def rep_locality(g: Graph, rep: Representation) -> int:
    """Maximum rank of the vectors on a closed neighborhood."""
    bad = orthogonality_violations(g, rep)
    if bad:
        raise ValueError("invalid orthogonal representation: " + "; ".join(bad))
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        basis = EchelonBasis(rep.field, rep.t, (rep.vectors[u] for u in _bits(g.closed(v))))
        best = max(best, basis.dim)
    return best


def coloring_to_rep(g: Graph, colors: Sequence[int], field: Field) -> Representation:
    """Standard-basis representation induced by a proper coloring: color class i
    gets e_i.  Valid over every field; locality equals the coloring locality."""
    check_proper(g, colors)
    palette = sorted(set(colors))
    index = {c: i for i, c in enumerate(palette)}
    t = len(palette)
    f = field
    vecs = []
    for v in range(g.n):
        e = [f.zero] * t
        e[index[colors[v]]] = f.one
        vecs.append(tuple(e))
    return Representation(field, t, tuple(vecs))


# -- vector-space search backends --------------------------------------------


class _BitSpace:
    """GF(2)-specific backend: vectors are int bitmasks, rank via xor echelon."""

    def __init__(self, t: int):
        self.t = t
        self.cands = [v for v in range(1, 1 << t) if v.bit_count() & 1]
        # one representative per coordinate-permutation orbit: weight-w suffix blocks
        self.first_cands = [(1 << w) - 1 for w in range(1, t + 1, 2)]

    @staticmethod
    def is_ortho(u: int, v: int) -> bool:
        return (u & v).bit_count() & 1 == 0

    empty_basis: tuple = ()

    @staticmethod
    def reduce(basis: tuple, v: int) -> int:
        for row in basis:
            if v >> (row.bit_length() - 1) & 1:
                v ^= row
        return v

    @classmethod
    def extend(cls, basis: tuple, v: int) -> tuple:
        r = cls.reduce(basis, v)
        if r == 0:
            return basis
        out = list(basis)
        out.append(r)
        out.sort(key=int.bit_length, reverse=True)
        return tuple(out)

    @classmethod
    def in_span(cls, basis: tuple, v: int) -> bool:
        return cls.reduce(basis, v) == 0

    def to_tuple(self, v: int) -> tuple:
        return tuple(v >> i & 1 for i in range(self.t))


class _TupleSpace:
    """Generic prime-field backend: vectors are tuples, echelon with leading-1 rows."""

    def __init__(self, field: PrimeField, t: int):
        self.field = field
        self.t = t
        q = field.size
        cands = []
        for v in itertools.product(range(q), repeat=t):
            nz = next((x for x in v if x), None)
            if nz != 1:  # one representative per scalar class
                continue
            if field.inner(v, v) != 0:
                cands.append(v)
        self.cands = cands
        firsts = []
        seen = set()
        for v in itertools.combinations_with_replacement(range(q), t):
            if not any(v):
                continue
            if field.inner(v, v) == 0:
                continue
            scale = field.inv(next(x for x in v if x))
            rep = tuple(field.mul(scale, x) for x in v)
            # normalize within the scalar class to the stored representative form
            canon = self._projective(rep)
            if canon not in seen:
                seen.add(canon)
                firsts.append(canon)
        self.first_cands = firsts

    def _projective(self, v: tuple) -> tuple:
        scale = self.field.inv(next(x for x in v if x))
        return tuple(self.field.mul(scale, x) for x in v)

    def is_ortho(self, u: tuple, v: tuple) -> bool:
        return self.field.inner(u, v) == 0

    empty_basis: tuple = ()

    def reduce(self, basis: tuple, v: tuple):
        f = self.field
        v = list(v)
        for row, p in basis:
            c = v[p]
            if c:
                for j in range(p, self.t):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return tuple(v)

    def extend(self, basis: tuple, v: tuple) -> tuple:
        f = self.field
        r = self.reduce(basis, v)
        pivot = next((j for j, x in enumerate(r) if x), None)
        if pivot is None:
            return basis
        c = f.inv(r[pivot])
        row = tuple(f.mul(c, x) for x in r)
        return basis + ((row, pivot),)

    def in_span(self, basis: tuple, v: tuple) -> bool:
        return not any(self.reduce(basis, v))

    def to_tuple(self, v: tuple) -> tuple:
        return v


def _space(field: PrimeField, t: int):
    if field.size is None:
        raise ValueError("searches require a finite prime field")
    return _BitSpace(t) if field.size == 2 else _TupleSpace(field, t)


def _search_order(g: Graph) -> list[int]:
    """Static vertex order: start at max degree, then greedily maximize
    adjacency to already-ordered vertices (ties by degree, then index)."""
    if g.n == 0:
        return []
    order = [max(range(g.n), key=lambda v: (g.degree(v), -v))]
    placed = 1 << order[0]
    while len(order) < g.n:
        nxt = max(
            (v for v in range(g.n) if not placed >> v & 1),
            key=lambda v: ((g.adj[v] & placed).bit_count(), g.degree(v), -v),
        )
        order.append(nxt)
        placed |= 1 << nxt
    return order


def find_orthogonal_rep(
    g: Graph,
    field: PrimeField,
    t: int,
    locality: Optional[int] = None,
) -> Optional[Representation]:
    """Backtracking search for an orthogonal representation of g in F^t,
    optionally constrained to closed-neighborhood rank at most `locality`.
    Returns a witness or None after exhausting the (projectively reduced)
    space."""
    sp = _space(field, t)
    n = g.n
    if n == 0:
        return Representation(field, t, ())
    if locality is not None and locality < 1:
        return None
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    assigned: dict[int, object] = {}
    closed = [g.closed(v) for v in range(n)]
    bases = [sp.empty_basis] * n if locality is not None else None

    def candidates(v: int):
        first = not assigned
        pool = sp.first_cands if first else sp.cands
        nbrs = [assigned[u] for u in _bits(g.adj[v]) if u in assigned]
        tight = []
        if locality is not None:
            tight = [bases[w] for w in _bits(closed[v]) if len(bases[w]) >= locality]
        for vec in pool:
            if any(not sp.is_ortho(vec, u) for u in nbrs):
                continue
            if any(not sp.in_span(b, vec) for b in tight):
                continue
            yield vec

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for vec in candidates(v):
            assigned[v] = vec
            saved = None
            ok = True
            if bases is not None:
                saved = []
                for w in _bits(closed[v]):
                    saved.append((w, bases[w]))
                    nb = sp.extend(bases[w], vec)
                    if len(nb) > locality:
                        ok = False
                        bases[w] = nb
                        break
                    bases[w] = nb
            if ok and rec(i + 1):
                return True
            if saved is not None:
                for w, old in saved:
                    bases[w] = old
            del assigned[v]
        return False

    if not rec(0):
        return None
    return Representation(field, t, tuple(sp.to_tuple(assigned[v]) for v in range(n)))


def enumerate_orthogonal_reps(g: Graph, field: PrimeField, t: int):
    """Yield every orthogonal representation of g in F^t, one per scalar class
    of each vector (no further symmetry reduction)."""
    sp = _space(field, t)
    n = g.n
    assigned: list = [None] * n

    def rec(v: int):
        if v == n:
            yield Representation(field, t, tuple(sp.to_tuple(x) for x in assigned))
            return
        nbrs = [assigned[u] for u in _bits(g.adj[v]) if u < v]
        for vec in sp.cands:
            if all(sp.is_ortho(vec, u) for u in nbrs):
                assigned[v] = vec
                yield from rec(v + 1)
                assigned[v] = None

    yield from rec(0)


# -- parameters ---------------------------------------------------------------


def orthogonality_dimension(
    g: Graph,
    field: PrimeField,
    vertex_cap: int = DEFAULT_OD_VERTEX_CAP,
    dim_cap: int = DEFAULT_OD_DIM_CAP,
) -> ParamResult:
    """Exact orthogonality dimension: least t admitting a representation in F^t."""
    if g.n > vertex_cap:
        raise CapExceededError(f"orthogonality_dimension vertex cap {vertex_cap} exceeded (n={g.n})")
    if g.n == 0:
        return ParamResult("od", 0, (), "exhausted-search")
    omega = max_clique(g).value
    reason = "clique"
    for t in range(max(omega, 1), dim_cap + 1):
        rep = find_orthogonal_rep(g, field, t)
        if rep is not None:
            return ParamResult("od", t, rep.vectors, reason)
        reason = "exhausted-search"
    raise CapExceededError(f"no orthogonal representation within dimension cap {dim_cap}")


def local_orthogonality_dimension(
    g: Graph,
    field: PrimeField,
    dim_cap: Optional[int] = None,
    vertex_cap: int = DEFAULT_LOCAL_OD_VERTEX_CAP,
) -> LocalOdResult:
    """Exact-under-cap local orthogonality dimension: least achievable
    closed-neighborhood rank over representations in F^t, t <= dim_cap.

    Whether ambient dimension n always suffices for the optimum over a finite
    field is open, so results carry the cap honestly in exact_under_cap.
    """
    if g.n > vertex_cap:
        raise CapExceededError(f"local_orthogonality_dimension vertex cap {vertex_cap} exceeded (n={g.n})")
    if dim_cap is None:
        dim_cap = max(g.n, 1)
    lb, reason = local_lower_bound(g)
    if g.n == 0:
        return LocalOdResult(0, Representation(field, 0, ()), dim_cap, True, "bipartite-test")
    for ell in range(max(lb, 1), g.n + 1):
        for t in range(ell, dim_cap + 1):
            rep = find_orthogonal_rep(g, field, t, locality=ell)
            if rep is not None:
                return LocalOdResult(ell, rep, dim_cap, True, reason)
        reason = "exhausted-search"
    raise CapExceededError(f"no representation found with dimension cap {dim_cap}")


def has_local_rep(g: Graph, field: PrimeField, ell: int, dim_cap: Optional[int] = None) -> bool:
    """Decision: does g admit an orthogonal representation over F with
    locality <= ell in some dimension t <= dim_cap (default n)?"""
    if dim_cap is None:
        dim_cap = max(g.n, 1)
    return any(
        find_orthogonal_rep(g, field, t, locality=ell) is not None
        for t in range(max(ell, 1), dim_cap + 1)
    )


# -- minrank via independent representations ----------------------------------


def find_independent_rep(g: Graph, field: PrimeField, t: int) -> Optional[Representation]:
    """Backtracking search for a t-dimensional independent representation of g.

    Independence constraints are invariant under any invertible linear map and
    per-vertex scaling, so vectors are enumerated in a normal form: each new
    vector is either inside the span of the previously assigned ones (support
    in the first r coordinates, leading coefficient 1) or the fresh basis
    vector e_{r+1}."""
    n = g.n
    if n == 0:
        return Representation(field, t, (), kind="independent")
    if t < 1:
        return None
    q = field.size
    order = _search_order(g)
    assigned: dict[int, tuple] = {}
    nbr_basis = [EchelonBasis(field, t) for _ in range(n)]

    span_cands: list[list[tuple]] = [[]]  # per rank r: projective vectors with support in first r coords
    for r in range(1, t + 1):
        reps = []
        for v in itertools.product(range(q), repeat=r):
            if next((x for x in v if x), None) == 1:
                reps.append(tuple(v) + (0,) * (t - r))
        span_cands.append(reps)

    def rec(i: int, rank: int) -> bool:
        if i == n:
            return True
        v = order[i]
        options = [(vec, rank) for vec in span_cands[rank]]
        if rank < t:
            fresh = [field.zero] * t
            fresh[rank] = field.one
            options.append((tuple(fresh), rank + 1))
        for vec, new_rank in options:
            if nbr_basis[v].contains(vec):
                continue
            # adding vec to neighbors' spans must not swallow an assigned neighbor
            saved = []
            ok = True
            for u in _bits(g.adj[v]):
                saved.append((u, nbr_basis[u].copy()))
                nbr_basis[u].add(vec)
                if u in assigned and nbr_basis[u].contains(assigned[u]):
                    ok = False
                    break
            if ok:
                assigned[v] = vec
                if rec(i + 1, new_rank):
                    return True
                del assigned[v]
            for u, old in saved:
                nbr_basis[u] = old
        return False

    if not rec(0, 0):
        return None
    return Representation(field, t, tuple(assigned[v] for v in range(n)), kind="independent")


def minrank(g: Graph, field: PrimeField, cap: int = DEFAULT_MINRANK_CAP) -> ParamResult:
    """Exact minrank of g over F: the least t for which the complement admits
    a t-dimensional independent representation.  The witness is that
    representation (feed it to indexcoding.representing_matrix for a matrix)."""
    if g.n > cap:
        raise CapExceededError(f"minrank cap {cap} exceeded (n={g.n})")
    if g.n == 0:
        return ParamResult("minrank", 0, (), "exhausted-search")
    h = complement(g)
    reason = "exhausted-search"
    for t in range(1, g.n + 1):
        rep = find_independent_rep(h, field, t)
        if rep is not None:
            return ParamResult("minrank", t, rep.vectors, reason if t > 1 else "exhausted-search")
    raise AssertionError("unreachable: standard basis is always an independent representation")
