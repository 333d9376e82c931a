"""Exact chromatic number, exact local chromatic number, and max-clique,
with witnesses that re-verify independently of the search path.

The local chromatic number of a coloring is the maximum number of distinct
colors on a closed neighborhood.  No published algorithm exists for the
exact local chromatic number; the decision procedure here backtracks over
proper colorings with at most n colors, introduces a new color only as the
smallest unused index, and prunes on per-closed-neighborhood color counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, _bits

DEFAULT_CHI_CAP = 64
DEFAULT_CHI_LOCAL_CAP = 56
DEFAULT_CLIQUE_CAP = 64


class CapExceededError(ValueError):
    """Instance exceeds the configured exact-solver size cap."""


class ImproperColoringError(ValueError):
    """A claimed proper coloring has two adjacent vertices sharing a color."""


@dataclass(frozen=True)
class ParamResult:
    """Exact value of a graph parameter with a machine-checkable witness."""

    param: str
    value: int
    witness: tuple
    lower_bound_reason: str  # exhausted-search | clique | odd-cycle | bipartite-test | theorem-citation
    exact: bool = True


def check_proper(g: Graph, colors: Sequence[int]) -> None:
    if len(colors) != g.n:
        raise ImproperColoringError(f"coloring length {len(colors)} != n={g.n}")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            raise ImproperColoringError(f"adjacent vertices {u},{v} share color {colors[u]}")


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    try:
        check_proper(g, colors)
    except ImproperColoringError:
        return False
    return True


def coloring_locality(g: Graph, colors: Sequence[int]) -> int:
    """Maximum number of colors on a closed neighborhood; requires properness."""
    check_proper(g, colors)
    if g.n == 0:
        return 0
    return max(len({colors[u] for u in _bits(g.closed(v))}) for v in range(g.n))


def num_colors(colors: Sequence[int]) -> int:
    return len(set(colors))


# -- max clique ---------------------------------------------------------------


def max_clique(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> ParamResult:
    """Exact maximum clique by branch and bound with a greedy coloring bound."""
    if g.n > cap:
        raise CapExceededError(f"max_clique cap {cap} exceeded (n={g.n})")
    if g.n == 0:
        return ParamResult("omega", 0, (), "exhausted-search")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best: list[int] = []

    def color_bound(cand: int, order_in: list[int]) -> list[tuple[int, int]]:
        # greedy coloring of the candidate set; returns (vertex, color-count-so-far)
        classes: list[int] = []  # bitmask per color class
        labeled = []
        for v in order_in:
            for ci, cmask in enumerate(classes):
                if not (cmask & g.adj[v]):
                    classes[ci] |= 1 << v
                    labeled.append((v, ci + 1))
                    break
            else:
                classes.append(1 << v)
                labeled.append((v, len(classes)))
        return labeled

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        members = [v for v in order if cand >> v & 1]
        labeled = color_bound(cand, members)
        for v, bound in reversed(labeled):
            if len(clique) + bound <= len(best):
                return
            clique.append(v)
            sub = cand & g.adj[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return ParamResult("omega", len(best), tuple(sorted(best)), "exhausted-search")


# -- chromatic number ---------------------------------------------------------


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy; proper, not necessarily optimal."""
    n = g.n
    colors = [-1] * n
    sat = [0] * n  # bitmask of neighbor colors
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (sat[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in _bits(g.adj[v]):
            sat[u] |= 1 << c
    return colors


def k_colorable(g: Graph, k: int) -> Optional[list[int]]:
    """Backtracking k-colorability decision with DSATUR branching and
    smallest-unused-index symmetry breaking; returns a coloring or None."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    sat = [0] * n
    used = 0

    def pick() -> Optional[int]:
        best_v, best_key = None, None
        for u in range(n):
            if colors[u] >= 0:
                continue
            key = (-(sat[u].bit_count()), -g.degree(u), u)
            if best_key is None or key < best_key:
                best_v, best_key = u, key
        return best_v

    def rec() -> bool:
        nonlocal used
        v = pick()
        if v is None:
            return True
        limit = min(k, used + 1)
        for c in range(limit):
            if sat[v] >> c & 1:
                continue
            colors[v] = c
            prev_used = used
            used = max(used, c + 1)
            touched = []
            dead = False
            for u in _bits(g.adj[v]):
                if colors[u] < 0 and not (sat[u] >> c & 1):
                    sat[u] |= 1 << c
                    touched.append(u)
                    if sat[u].bit_count() >= k:
                        # u would have no color left only if all k colors hit
                        if sat[u] == (1 << k) - 1:
                            dead = True
            if not dead and rec():
                return True
            for u in touched:
                sat[u] &= ~(1 << c)
            used = prev_used
            colors[v] = -1
        return False

    return colors.copy() if rec() else None


def chromatic_number(g: Graph, cap: int = DEFAULT_CHI_CAP) -> ParamResult:
    """Exact chromatic number; lower bound certified by exhausting
    (value-1)-colorability unless the clique bound already meets the value."""
    if g.n > cap:
        raise CapExceededError(f"chromatic_number cap {cap} exceeded (n={g.n})")
    if g.n == 0:
        return ParamResult("chi", 0, (), "exhausted-search")
    ub_witness = greedy_coloring(g)
    ub = num_colors(ub_witness)
    omega = max_clique(g, cap=cap).value
    reason = "clique"
    for k in range(omega, ub):
        found = k_colorable(g, k)
        if found is not None:
            return ParamResult("chi", k, tuple(found), reason)
        reason = "exhausted-search"
    return ParamResult("chi", ub, tuple(ub_witness), reason if ub > omega else "clique")


# -- local chromatic number ---------------------------------------------------


def locality_decision(g: Graph, ell: int, max_colors: Optional[int] = None) -> Optional[list[int]]:
    """Proper coloring of g whose every closed neighborhood carries at most
    ell distinct colors, or None if none exists.

    Backtracking with most-constrained-vertex branching.  Colors on saturated
    closed neighborhoods (already ell distinct colors) constrain every
    uncolored member to those colors, which is the main pruning device.
    """
    n = g.n
    if n == 0:
        return []
    if ell < 1:
        return None
    if max_colors is None:
        max_colors = n  # any proper coloring can be assumed to use <= n colors
    closed = [g.closed(v) for v in range(n)]
    colors = [-1] * n
    nbr_mask = [0] * n  # colors taken by assigned neighbors
    seen_mask = [0] * n  # colors among assigned vertices of the closed neighborhood
    seen_cnt = [0] * n
    used = 0

    def allowed(v: int) -> tuple[int, bool]:
        mask = ((1 << used) - 1) & ~nbr_mask[v]
        can_new = used < max_colors
        for w in _bits(closed[v]):
            if seen_cnt[w] >= ell:
                mask &= seen_mask[w]
                can_new = False
        return mask, can_new

    def rec() -> bool:
        nonlocal used
        best_v, best_opts, best_cnt = None, None, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            mask, can_new = allowed(v)
            cnt = mask.bit_count() + (1 if can_new else 0)
            if cnt == 0:
                return False
            if best_cnt is None or cnt < best_cnt:
                best_v, best_opts, best_cnt = v, (mask, can_new), cnt
                if cnt == 1:
                    break
        if best_v is None:
            return True
        v = best_v
        mask, can_new = best_opts
        options = _bits(mask)
        if can_new:
            options.append(used)
        for c in options:
            colors[v] = c
            prev_used = used
            used = max(used, c + 1)
            touched = []
            for w in _bits(closed[v]):
                if not (seen_mask[w] >> c & 1):
                    seen_mask[w] |= 1 << c
                    seen_cnt[w] += 1
                    touched.append(w)
            for u in _bits(g.adj[v]):
                nbr_mask[u] |= 1 << c
            ok = all(seen_cnt[w] <= ell for w in touched)
            if ok and rec():
                return True
            for w in touched:
                seen_mask[w] &= ~(1 << c)
                seen_cnt[w] -= 1
            for u in _bits(g.adj[v]):
                nbr_mask[u] = 0
                for x in _bits(g.adj[u]):
                    if colors[x] >= 0 and x != v:
                        nbr_mask[u] |= 1 << colors[x]
            used = prev_used
            colors[v] = -1
        return False

    return colors.copy() if rec() else None


def local_lower_bound(g: Graph, omega: Optional[int] = None) -> tuple[int, str]:
    """Analytic lower bound on the local chromatic number (and on the local
    orthogonality dimension over every field): edge, odd cycle, clique."""
    if g.n == 0 or g.num_edges == 0:
        return (1 if g.n else 0), "bipartite-test"
    bound, reason = 2, "bipartite-test"
    if g.bipartition() is None:
        bound, reason = 3, "odd-cycle"
    if omega is None:
        omega = max_clique(g).value
    if omega > bound:
        bound, reason = omega, "clique"
    return bound, reason


def local_chromatic_number(g: Graph, cap: int = DEFAULT_CHI_LOCAL_CAP) -> ParamResult:
    """Exact local chromatic number with a witness coloring."""
    if g.n > cap:
        raise CapExceededError(f"local_chromatic_number cap {cap} exceeded (n={g.n})")
    if g.n == 0:
        return ParamResult("chi_local", 0, (), "exhausted-search")
    omega = max_clique(g, cap=max(cap, g.n)).value
    lb, reason = local_lower_bound(g, omega)
    chi = chromatic_number(g, cap=max(cap, g.n))
    ub_witness = list(chi.witness)
    ub = coloring_locality(g, ub_witness)
    for ell in range(lb, ub):
        found = locality_decision(g, ell)
        if found is not None:
            return ParamResult("chi_local", ell, tuple(found), reason)
        reason = "exhausted-search"
    return ParamResult("chi_local", ub, tuple(ub_witness), reason)
