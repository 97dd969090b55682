"""Independent brute-force reference implementations used by the tests.

`vg_shortest_in_class` searches the visibility graph over the domain
vertices for the shortest walk in a prescribed deformation class.  It
shares only the low-level word machinery with the library, not the
pull-tight engine, so agreement between the two is evidence rather than
tautology.
"""

from __future__ import annotations

import itertools
import math

from tautpath import PathPoly, general_position_triangulation, validate_path
from tautpath.geom import Pt, dist2, polyline_length, seg_length
from tautpath.homotopy import NotGeneralPosition, canonical_class_key, word_of


def _class_key(path: PathPoly, tri):
    w = word_of(path, tri)
    return canonical_class_key(w, tri, path.start, path.end)


def vg_shortest_in_class(d, path: PathPoly, tri=None):
    """Shortest polyline through domain vertices homotopic to `path`,
    found by branch-and-bound over the visibility graph.  Returns
    (vertices, length).  Only single-visit walks are searched, which
    covers every class whose taut form does not rewrap a corner."""
    if tri is None:
        tri = general_position_triangulation(d, [path])
    target = _class_key(path, tri)
    p, q = path.start, path.end

    nodes = [p, q]
    for _, ring in d.rings():
        for v in ring:
            if v not in nodes:
                nodes.append(v)
    n = len(nodes)

    vis = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if nodes[i] == nodes[j]:
                continue
            seg = PathPoly([nodes[i], nodes[j]], closure=True)
            ok = validate_path(seg, d).ok
            vis[i][j] = vis[j][i] = ok

    fdist = [[math.sqrt(float(dist2(a, b))) for b in nodes] for a in nodes]

    # the input path itself lies in the class, so its length bounds the
    # optimum from above
    best_len = polyline_length(path.vertices) + 1e-9
    best_walk = None
    order = sorted(range(n), key=lambda j: fdist[j][1])

    def dfs(i, walk, used, acc):
        nonlocal best_len, best_walk
        if acc + fdist[i][1] >= best_len:
            return
        if i == 1 and len(walk) >= 2:
            cand = PathPoly([nodes[t] for t in walk], closure=True)
            try:
                if _class_key(cand, tri) == target:
                    best_len = acc
                    best_walk = list(walk)
            except NotGeneralPosition:
                pass
            return
        for j in order:
            if j == 0 or (j != 1 and j in used) or not vis[i][j]:
                continue
            dfs(j, walk + [j], used | {j}, acc + fdist[i][j])

    if p == q:
        # constant walk is a valid candidate for loop classes
        cand = PathPoly([p, p])
        if _class_key(cand, tri) == target:
            best_len = 0.0
            best_walk = [0, 1]
        for j in range(2, n):
            if vis[0][j]:
                dfs(j, [0, j], {j}, fdist[0][j])
    else:
        dfs(0, [0], set(), 0.0)
    if best_walk is None:
        raise AssertionError("oracle found no walk in the class")
    return [nodes[t] for t in best_walk], best_len


def brute_len_value(pts, k: int, grid_pts=None):
    """Exhaustive family search for the bounded length restricted to the
    given vertex list.  Exponential; keep the inputs tiny."""
    if grid_pts is None:
        grid_pts = [(float(p.x), float(p.y)) if isinstance(p, Pt) else (float(p[0]), float(p[1])) for p in pts]
    m = len(grid_pts)

    def g(d):
        return d / (1.0 + d)

    def dist(i, j):
        (ax, ay), (bx, by) = grid_pts[i], grid_pts[j]
        return math.hypot(bx - ax, by - ay)

    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    best = 0.0
    for size in range(1, k + 1):
        for combo in itertools.combinations(pairs, size):
            spans = sorted(combo)
            ok = True
            for (a1, b1), (a2, b2) in zip(spans, spans[1:]):
                if b1 > a2:
                    ok = False
                    break
            if not ok:
                continue
            ds = sorted((g(dist(i, j)) for i, j in combo), reverse=True)
            val = sum(dv * 2.0 ** -(r + 1) for r, dv in enumerate(ds))
            if val > best:
                best = val
    return best
