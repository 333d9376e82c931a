"""Linear index codes for a side-information graph G over a finite field.

A matrix M represents G when its diagonal is nonzero and M[i][j] = 0 for
distinct non-adjacent i, j.  Broadcasting the rank(M) independent rows of M
lets receiver i recover x_i from the broadcast plus the side information
{x_j : j adjacent to i}: each row M_i is a combination of the broadcast
rows, and its off-diagonal support lies inside N(i).

Three routes to a representing matrix are provided:
  * an exact minrank witness (optimal length),
  * a proper coloring of the complement combined with a generic vector
    family (Vandermonde when the field is large enough, else the greedy
    Schulman family, adding ceil(log_q n) dimensions),
  * randomized compression of an orthogonal representation with locality l
    down to l + ceil(log_q n) dimensions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import check_proper, coloring_locality
from .fields import PrimeField
from .graphs import Graph, _bits, complement
from .linalg import (
    EchelonBasis,
    Matrix,
    ceil_log,
    nullspace_basis,
    random_matrix,
    schulman_vectors,
    solve_row,
    vandermonde,
)
from .ortho import Representation, independence_violations, orthogonality_violations, rep_locality


class RepresentingPatternError(ValueError):
    """Matrix does not represent the side-information graph."""


def check_representing(g: Graph, m: Matrix) -> None:
    if m.nrows != g.n or m.ncols != g.n:
        raise RepresentingPatternError(f"matrix is {m.nrows}x{m.ncols}, graph has {g.n} vertices")
    zero = m.field.zero
    for i in range(g.n):
        if m[i, i] == zero:
            raise RepresentingPatternError(f"zero diagonal entry at {i}")
        for j in range(g.n):
            if i != j and not g.has_edge(i, j) and m[i, j] != zero:
                raise RepresentingPatternError(f"nonzero entry at non-adjacent pair ({i},{j})")


@dataclass(frozen=True)
class IndexCode:
    """Broadcast matrix B (length x n), representing matrix M, and per-receiver
    decoding coefficients lambda_i with lambda_i . B = M_i."""

    field: PrimeField
    graph: Graph
    matrix: Matrix
    encode_matrix: Matrix
    decode_coeffs: tuple

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def length(self) -> int:
        return self.encode_matrix.nrows


def representing_matrix(g: Graph, rep: Representation) -> Matrix:
    """Representing matrix for g built from an independent representation of
    the complement of g.

    For each vertex i, y_i is the lexicographically smallest vector that is
    orthogonal to the vectors of i's non-neighbors and not orthogonal to
    u_i; then M[i][j] = <y_i, u_j>."""
    h = complement(g)
    bad = independence_violations(h, rep)
    if bad:
        raise ValueError("not an independent representation of the complement: " + "; ".join(bad))
    f = rep.field
    rows = []
    for i in range(g.n):
        nbr_vecs = [rep.vectors[u] for u in _bits(h.adj[i])]
        null = nullspace_basis(Matrix(f, tuple(nbr_vecs))) if nbr_vecs else [
            tuple(f.one if k == j else f.zero for k in range(rep.t)) for j in range(rep.t)
        ]
        y = _smallest_combination(f, null, rep.vectors[i])
        rows.append(tuple(f.inner(y, rep.vectors[j]) for j in range(g.n)))
    m = Matrix(f, tuple(rows))
    check_representing(g, m)
    return m


def _smallest_combination(field: PrimeField, basis: Sequence[tuple], target: tuple):
    """Lexicographically smallest vector in span(basis) with nonzero inner
    product against target."""
    import itertools

    t = len(target)
    best = None
    for coeffs in itertools.product(range(field.size), repeat=len(basis)):
        y = [field.zero] * t
        for c, b in zip(coeffs, basis):
            if c:
                for k in range(t):
                    y[k] = field.add(y[k], field.mul(c, b[k]))
        y = tuple(y)
        if field.inner(y, target) != field.zero and (best is None or y < best):
            best = y
    if best is None:
        raise ValueError("no dual vector exists; representation is not independent")
    return best


def build_code(g: Graph, m: Matrix) -> IndexCode:
    """Index code from a representing matrix: broadcast the first rank(M)
    linearly independent rows of M (deterministic elimination order)."""
    check_representing(g, m)
    f = m.field
    basis = EchelonBasis(f, g.n)
    b_rows = []
    for row in m.rows:
        if not basis.add(row):
            b_rows.append(row)
    coeffs = []
    for i in range(g.n):
        lam = solve_row(b_rows, m.rows[i], f)
        assert lam is not None  # rows of B span the row space of M
        coeffs.append(lam)
    return IndexCode(f, g, m, Matrix(f, tuple(b_rows)), tuple(coeffs))


def encode(code: IndexCode, x: Sequence) -> tuple:
    """Broadcast word y = B x for a message x in F^n."""
    if len(x) != code.n:
        raise ValueError(f"message length {len(x)} != n={code.n}")
    return code.encode_matrix.mul_vec(x)


def decode_one(code: IndexCode, i: int, y: Sequence, side_info: dict) -> object:
    """Recover x_i from the broadcast y and the side information
    {j: x_j for j in N(i)}."""
    f = code.field
    if set(side_info) != set(_bits(code.graph.adj[i])):
        raise ValueError(f"side information must cover exactly the neighbors of {i}")
    total = f.inner(code.decode_coeffs[i], y)  # = M_i . x
    for j, xj in side_info.items():
        total = f.sub(total, f.mul(code.matrix[i, j], xj))
    return f.div(total, code.matrix[i, i])


# -- code constructions -------------------------------------------------------


def code_from_minrank_witness(g: Graph, rep: Representation) -> IndexCode:
    return build_code(g, representing_matrix(g, rep))


def code_from_local_coloring(g: Graph, colors: Sequence[int], vectors: Sequence[tuple], field: PrimeField) -> IndexCode:
    """Index code from a proper coloring of the complement of g plus a vector
    per color, provided the vectors indexed by every closed neighborhood (in
    the complement) are linearly independent.  Code length <= dim of the
    vectors."""
    h = complement(g)
    check_proper(h, colors)
    palette = sorted(set(colors))
    if len(vectors) < len(palette):
        raise ValueError(f"{len(palette)} colors but only {len(vectors)} vectors")
    index = {c: k for k, c in enumerate(palette)}
    t = len(vectors[0])
    for v in range(h.n):
        basis = EchelonBasis(field, t)
        for u in _bits(h.closed(v)):
            basis.add(vectors[index[colors[u]]])
        wanted = {index[colors[u]] for u in _bits(h.closed(v))}
        if basis.dim != len(wanted):
            raise ValueError(f"closed-neighborhood vectors of vertex {v} are dependent")
    rep = Representation(
        field, t, tuple(vectors[index[colors[v]]] for v in range(h.n)), kind="independent"
    )
    return code_from_minrank_witness(g, rep)


def code_from_coloring(g: Graph, colors: Sequence[int], field: PrimeField) -> IndexCode:
    """Convenience route: Vandermonde vectors when the field has at least as
    many elements as colors, otherwise the Schulman family over the
    closed-neighborhood color sets of the complement."""
    h = complement(g)
    check_proper(h, colors)
    palette = sorted(set(colors))
    index = {c: k for k, c in enumerate(palette)}
    m = len(palette)
    ell = coloring_locality(h, colors)
    if field.size >= m:
        vectors = vandermonde(m, ell, field)
    else:
        sets = [{index[colors[u]] for u in _bits(h.closed(v))} for v in range(h.n)]
        vectors = schulman_vectors(sets, m, ell, field)
    return code_from_local_coloring(g, colors, vectors, field)


def code_by_method(g: Graph, field: PrimeField, method: str, seed: int = 0) -> IndexCode:
    """One-call code construction for a side-information graph.

    'minrank' solves for the optimal length; 'local' colors the complement
    with optimal locality and applies a generic vector family; 'compress'
    randomly compresses the coloring-induced orthogonal representation of
    the complement."""
    from .coloring import local_chromatic_number
    from .ortho import Representation as Rep, coloring_to_rep, minrank

    if method == "minrank":
        res = minrank(g, field)
        rep = Rep(field, res.value, res.witness, kind="independent")
        return code_from_minrank_witness(g, rep)
    if method == "local":
        colors = local_chromatic_number(complement(g)).witness
        return code_from_coloring(g, list(colors), field)
    if method == "compress":
        h = complement(g)
        colors = local_chromatic_number(h).witness
        rep = coloring_to_rep(h, list(colors), field)
        compressed = compress_representation(h, rep, seed=seed)
        return code_from_minrank_witness(g, compressed.rep)
    raise ValueError(f"unknown method {method!r}; expected minrank, local, or compress")


# -- randomized compression ---------------------------------------------------


@dataclass(frozen=True)
class CompressionResult:
    attempts: int
    rep: Representation  # independent, dimension locality + ceil(log_q n)


def compress_attempt(g: Graph, rep: Representation, m: int, seed: int) -> Optional[Representation]:
    """One compression trial: w_v -> A w_v for a seeded uniform A in F^(m x t);
    returns the image as an independent representation of g, or None."""
    a = random_matrix(m, rep.t, rep.field, seed)
    mapped = Representation(
        rep.field, m, tuple(a.mul_vec(v) for v in rep.vectors), kind="independent"
    )
    return mapped if not independence_violations(g, mapped) else None


def compress_representation(g: Graph, rep: Representation, seed: int = 0, retries: int = 64) -> CompressionResult:
    """Compress an orthogonal representation of g with locality l to an
    independent representation in dimension l + ceil(log_q n); each failed
    attempt (probability at most 1/q) reruns with the next derived seed."""
    bad = orthogonality_violations(g, rep)
    if bad:
        raise ValueError("invalid orthogonal representation: " + "; ".join(bad))
    ell = rep_locality(g, rep)
    m = ell + ceil_log(rep.field.size, g.n)
    for k in range(retries):
        mapped = compress_attempt(g, rep, m, seed + k)
        if mapped is not None:
            return CompressionResult(k + 1, mapped)
    raise RuntimeError(f"compression failed {retries} times (probability <= q^-{retries})")


# -- simulation ---------------------------------------------------------------


@dataclass(frozen=True)
class SimulationReport:
    trials: int
    failures: int
    length: int


def simulate(code: IndexCode, trials: int, seed: int = 0) -> SimulationReport:
    """Round-trip uniformly random messages through encode/decode for every
    receiver; failures must be zero for a valid code."""
    rng = random.Random(seed)
    q = code.field.size
    failures = 0
    for _ in range(trials):
        x = [rng.randrange(q) for _ in range(code.n)]
        y = encode(code, x)
        for i in range(code.n):
            side = {j: x[j] for j in _bits(code.graph.adj[i])}
            if decode_one(code, i, y, side) != x[i]:
                failures += 1
    return SimulationReport(trials, failures, code.length)
