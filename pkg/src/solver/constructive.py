"""
Certified constructive tree covers for uniform (r,k)-colourings.

The bipartite cover follows the star-pairing arguments: stars centred at
the two ends of a fixed edge ``vw`` in a common colour pool are joined through
the colours of ``vw``. Every "star" is taken as the maximal monochromatic
component at its centre, so a recipe is a list of ``(colour, anchor)`` pairs
that is resolved to components, deduplicated and checked at the end. A recipe
that fails its own coverage check raises :class:`CoverConstructionError`.

Fixed choices: ``vw`` is the lexicographically first edge, colour sets are
taken smallest-first, and searches scan vertices in increasing order.
"""

from math import comb
from typing import List, Optional, Tuple

from colouring.colour_set import colour_set, full_set, k_subsets, members, smallest
from colouring.components import spanning_tree
from colouring.errors import CoverConstructionError, ParameterError
from colouring.model import CoverCertificate, MonoComponent, SetColouring
from colouring.reductions import bipartite_between
from colouring.validation import validate
from logger import get_logger
from solver.exact import verify_cover

logger = get_logger(__name__)

Recipe = List[Tuple[int, int]]


def bipartite_bound(r: int, k: int) -> int:
    if k >= r:
        return 1
    if 2 * k >= r:
        return r - k + 1
    if 5 * k >= 2 * r:
        return 2 * r - 3 * k + 1
    return 2 * r - 3 * k + 2


def complete_bound(r: int, k: int, n: int) -> int:
    if k >= r or n == 1:
        return 1
    if 2 * k >= r - 1 or (r == 2 * k + 2 and k >= 2):
        return r - k
    return r - k + 1


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _covered(colouring: SetColouring, recipe: Recipe) -> int:
    mask = 0
    for colour, anchor in recipe:
        mask |= colouring.component_containing(colour, anchor)
    return mask


def _covers(colouring: SetColouring, recipe: Recipe) -> bool:
    return _covered(colouring, recipe) == colouring.host.all_vertices


def _require_uniform(colouring: SetColouring, bipartite: bool) -> Tuple[int, int]:
    if colouring.host.is_bipartite != bipartite:
        kind = "complete bipartite" if bipartite else "complete"
        raise ParameterError(f"expected a {kind} host, got {colouring.host.describe()}")
    problems = validate(colouring)
    if colouring.k is None or problems:
        raise ParameterError(f"constructive covers need a valid uniform colouring: {problems[:1]}")
    return colouring.r, colouring.k


def _finish(colouring: SetColouring, recipe: Recipe, bound: int, regime: str) -> CoverCertificate:
    chosen: List[Tuple[int, int]] = []
    seen = set()
    for colour, anchor in recipe:
        mask = colouring.component_containing(colour, anchor)
        if mask not in seen:
            seen.add(mask)
            chosen.append((colour, mask))
    # Drop pieces whose vertices the others already reach, latest first.
    for i in range(len(chosen) - 1, -1, -1):
        rest = 0
        for j, (_, mask) in enumerate(chosen):
            if j != i:
                rest |= mask
        if chosen[i][1] & ~rest == 0 and len(chosen) > 1:
            del chosen[i]
    certificate = CoverCertificate(
        tuple(MonoComponent(c, mask, spanning_tree(colouring, c, mask)) for c, mask in chosen)
    ).canonical()
    problems = verify_cover(colouring, certificate)
    if problems:
        raise CoverConstructionError(f"{regime}: {problems[0]}")
    if certificate.size > bound:
        raise CoverConstructionError(f"{regime}: {certificate.size} trees exceed the bound {bound}")
    logger.debug("%s cover of %s: %d trees (bound %d)", regime, colouring.describe(), certificate.size, bound)
    return certificate


# Bipartite hosts


def _missing_set_recipe(colouring: SetColouring, v: int) -> Optional[Recipe]:
    """
    Cover of size 2r-3k+1 from a vertex that misses some k-set on its edges.

    Looks for the first k-set C that no edge at ``v`` carries exactly while
    some edge ``vw`` avoids it. Stars at ``v`` use the colours outside C and
    stars at ``w`` the same colours plus min(C); ``vw`` joins k pairs.
    """
    r, k = colouring.r, colouring.k
    neighbours = [u for u in colouring.host.neighbours(v) if u != v]
    present = {colouring.colour_set(v, u) for u in neighbours}
    if len(present) == comb(r, k):
        return None
    full = full_set(r)
    for missing in k_subsets(r, k):
        if missing in present:
            continue
        w = next((u for u in neighbours if not colouring.colour_set(v, u) & missing), None)
        if w is None:
            continue
        outside = full & ~missing
        recipe = [(c, v) for c in members(outside)]
        recipe += [(c, w) for c in members(outside | (missing & -missing))]
        return recipe
    return None


def _paired_stars_recipe(colouring: SetColouring, v: int, w: int) -> Recipe:
    """Stars at v and w over the colours of vw plus the next smallest colours; 2r-3k+2 trees."""
    r, k = colouring.r, colouring.k
    edge = colouring.colour_set(v, w)
    extra = members(full_set(r) & ~edge)[: r - 2 * k + 1]
    return [(c, v) for c in members(edge)] + [(c, v) for c in extra] + [(c, w) for c in extra]


def _half_or_more_recipe(colouring: SetColouring, v: int, w: int) -> Recipe:
    """r-k+1 trees when 2k >= r."""
    r, k = colouring.r, colouring.k
    edge = colouring.colour_set(v, w)
    if 2 * k > r:
        return [(c, v) for c in members(edge)[: r - k + 1]]

    # r = 2k: the k components through vw, plus one piece for what they miss.
    recipe = [(c, v) for c in members(edge)]
    left = colouring.host.all_vertices & ~_covered(colouring, recipe)
    if not left:
        return recipe
    left_a = left & colouring.host.side_mask("A")
    left_b = left & colouring.host.side_mask("B")
    others = members(full_set(r) & ~edge)
    if not left_a:
        return recipe + [(others[0], v)]
    if not left_b:
        return recipe + [(others[0], w)]
    for c in others:
        if colouring.component_containing(c, v) == colouring.component_containing(c, w):
            return recipe + [(c, v)]
    # Every edge among the leftovers carries exactly the colours of vw.
    return recipe + [(smallest(edge), _lowest(left_a))]


def _two_k_plus_p_recipe(colouring: SetColouring, v: int, w: int) -> Recipe:
    """2r-3k+1 trees when 2r/5 <= k < r/2."""
    r, k = colouring.r, colouring.k
    host = colouring.host
    full = full_set(r)
    p2 = 2 * (r - 2 * k)
    side_a, side_b = host.side_mask("A"), host.side_mask("B")
    edge = colouring.colour_set(v, w)
    recipe = [(c, v) for c in members(edge)]
    c0 = _covered(colouring, recipe)
    rest_a, rest_b = side_a & ~c0, side_b & ~c0
    others = members(full & ~edge)
    if not rest_a and not rest_b:
        return recipe
    if not rest_a:
        return recipe + [(c, v) for c in others[: r - 2 * k + 1]]
    if not rest_b:
        return recipe + [(c, w) for c in others[: r - 2 * k + 1]]

    v1 = _lowest(rest_a)
    if not any(colouring.colour_set(v1, x) == edge for x in host.side_b):
        found = _missing_set_recipe(colouring, v1)
        if found is None:
            raise CoverConstructionError(f"vertex {v1} misses the colours of vw but no k-set avoids an edge")
        return found
    trial = recipe + [(c, v1) for c in members(edge)[:p2]]
    if _covers(colouring, trial):
        return trial

    pair = next(
        ((a, b) for a in members(rest_a) for b in members(rest_b)
         if (colouring.colour_set(a, b) & ~edge).bit_count() >= p2),
        None,
    )
    if pair is None:
        raise CoverConstructionError("no edge between the leftovers carries 2(r-2k) new colours")
    v1, w1 = pair
    fresh = members(colouring.colour_set(v1, w1) & ~edge)[:p2]
    recipe += [(c, v1) for c in fresh]
    covered = _covered(colouring, recipe)
    left_a, left_b = side_a & ~covered, side_b & ~covered
    spare = full & ~edge & ~colour_set(fresh)
    if not left_a and not left_b:
        return recipe
    if not left_b:
        return recipe + [(smallest(spare), w)]
    if not left_a:
        return recipe + [(smallest(spare), v)]

    for a in members(left_a):
        for b in members(left_b):
            hits = colouring.colour_set(a, b) & spare
            if hits:
                return recipe + [(smallest(hits), w)]
    for a in members(left_a):
        hits = colouring.colour_set(a, w1) & spare
        if hits:
            return recipe + [(smallest(hits), w)]
    for b in members(left_b):
        hits = colouring.colour_set(v1, b) & spare
        if hits:
            return recipe + [(smallest(hits), v)]
    for a in members(left_a):
        for b in members(left_b):
            hits = colouring.colour_set(a, b) & edge
            if hits:
                return recipe + [(smallest(hits), w1)]
    # All leftover edges carry every colour picked at v1 w1.
    return recipe + [(fresh[0], _lowest(left_a))]


def bipartite_regime(r: int, k: int) -> str:
    if k >= r:
        return "single colour"
    if 2 * k >= r:
        return "half or more"
    if 5 * k >= 2 * r:
        return "two-k-plus-p"
    return "paired stars"


def constructive_cover_bipartite(colouring: SetColouring) -> CoverCertificate:
    """
    A cover of a uniform colouring of K_{n,m} within :func:`bipartite_bound`.

    That is r-k+1 trees for k >= r/2, 2r-3k+1 for 2r/5 <= k < r/2 and
    2r-3k+2 below, where a vertex missing some k-set still gives 2r-3k+1.
    """
    r, k = _require_uniform(colouring, bipartite=True)
    v, w = colouring.host.edges[0]
    regime = bipartite_regime(r, k)
    if k >= r:
        recipe = [(0, v)]
    elif regime == "half or more":
        recipe = _half_or_more_recipe(colouring, v, w)
    elif regime == "two-k-plus-p":
        recipe = _two_k_plus_p_recipe(colouring, v, w)
    else:
        recipe = _missing_set_recipe(colouring, v) or _paired_stars_recipe(colouring, v, w)
    return _finish(colouring, recipe, bipartite_bound(r, k), regime)


# Complete hosts


def _split_recipe(colouring: SetColouring) -> Recipe:
    """
    r-k trees when 2k >= r-1.

    Fix the component X of vertex 0 in the smallest colour c of edge 01. The
    edges between X and the rest never carry c, so they form an
    (r-1,k)-coloured complete bipartite graph; its cover lifts to K_n.
    """
    c = smallest(colouring.colour_set(0, 1))
    fixed = colouring.component_containing(c, 0)
    rest = colouring.host.all_vertices & ~fixed
    if not rest:
        return [(c, 0)]
    kept = [x for x in range(colouring.r) if x != c]
    sub, vertex_map, colour_map = bipartite_between(colouring, members(fixed), members(rest), kept, colouring.k)
    sub_cover = constructive_cover_bipartite(sub)
    return [(colour_map[t.colour], vertex_map[t.smallest_vertex]) for t in sub_cover.trees]


def _almost_half_recipe(colouring: SetColouring, fixed_colour: int) -> Optional[Recipe]:
    """
    k+2 = r-k trees when r = 2k+2, k >= 2; None when this choice of fixed colour fails.

    X is the ``fixed_colour`` component of vertex 0 and vw the first edge
    leaving it. Components at v in the colours of vw cover all but A' (in X)
    and B' (outside X). A vertex w' of B' whose edges to v and w share a
    colour s adds the s-component; one more piece closes the cover.
    """
    r = colouring.r
    host = colouring.host
    everything = host.all_vertices
    full = full_set(r)
    x_mask = colouring.component_containing(fixed_colour, 0)
    outside = everything & ~x_mask
    if not outside:
        return [(fixed_colour, 0)]
    v, w = 0, _lowest(outside)
    edge = colouring.colour_set(v, w)
    base = [(c, v) for c in members(edge)]
    c0 = _covered(colouring, base)
    rest_a, rest_b = x_mask & ~c0, outside & ~c0
    free = full & ~edge & ~(1 << fixed_colour)
    if not rest_a and not rest_b:
        return base
    if not rest_a:
        return base + [(c, v) for c in members(free)[:2]]
    if not rest_b:
        return base + [(c, w) for c in members(free)[:2]]

    any_shared = False
    for w1 in members(rest_b):
        shared = colouring.colour_set(v, w1) & colouring.colour_set(w, w1)
        any_shared |= bool(shared)
        for s in members(shared):
            recipe = base + [(s, v)]
            covered = _covered(colouring, recipe)
            left_a, left_b = x_mask & ~covered, outside & ~covered
            spare = free & ~(1 << s)
            if not left_a and not left_b:
                return recipe
            if not left_b:
                attempts = [recipe + [(smallest(spare), w)]]
            elif not left_a:
                attempts = [recipe + [(smallest(spare), v)]]
            else:
                attempts = [
                    recipe + [(smallest(hits), v)]
                    for a in members(left_a) for b in members(left_b)
                    for hits in (colouring.colour_set(a, b) & spare,) if hits
                ][:1]
                anchor = _lowest(left_a)
                attempts += [recipe + [(c, anchor)] for c in range(r)]
            for attempt in attempts:
                if _covers(colouring, attempt):
                    return attempt
    if not any_shared:
        # Every w' sees w in the fixed colour, so its w-component sweeps B'.
        attempt = [(fixed_colour, 0)] + base + [(fixed_colour, w)]
        if _covers(colouring, attempt):
            return attempt
    return None


def complete_regime(r: int, k: int, n: int) -> str:
    if k >= r or n == 1:
        return "single colour"
    if 2 * k >= r - 1:
        return "split"
    if r == 2 * k + 2 and k >= 2:
        return "almost half"
    return "stars"


def constructive_cover_complete(colouring: SetColouring) -> CoverCertificate:
    """
    A cover of a uniform colouring of K_n within :func:`complete_bound`.

    r-k trees when k >= r/2 - 1 (with k >= 2 at equality), otherwise the
    r-k+1 components at vertex 0 over the r-k+1 smallest colours.
    """
    r, k = _require_uniform(colouring, bipartite=False)
    n = colouring.n
    regime = complete_regime(r, k, n)
    if regime == "single colour":
        recipe = [(0, 0)]
    elif regime == "split":
        recipe = _split_recipe(colouring)
    elif regime == "almost half":
        recipe = None
        for fixed_colour in range(r - 1, -1, -1):
            recipe = _almost_half_recipe(colouring, fixed_colour)
            if recipe is not None:
                break
            logger.debug("fixed colour %d gave no cover, trying the next one", fixed_colour)
        if recipe is None:
            raise CoverConstructionError("no fixed colour yields an r-k cover")
    else:
        recipe = [(c, 0) for c in range(r - k + 1)]
    return _finish(colouring, recipe, complete_bound(r, k, n), regime)


def constructive_cover(colouring: SetColouring) -> CoverCertificate:
    if colouring.host.is_bipartite:
        return constructive_cover_bipartite(colouring)
    return constructive_cover_complete(colouring)


def constructive_bound(colouring: SetColouring) -> int:
    if colouring.k is None:
        raise ParameterError("constructive bounds need a uniform colouring")
    if colouring.host.is_bipartite:
        return bipartite_bound(colouring.r, colouring.k)
    return complete_bound(colouring.r, colouring.k, colouring.n)
