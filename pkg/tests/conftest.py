import math
import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from tautpath import PathPoly, PolygonalDomain, triangulate
from tautpath.geom import Pt, dist2, lerp, polyline_length, rat
from tautpath.homotopy import _clearance2, validate_path


@pytest.fixture(scope="session")
def d1():
    outer = [(-5, -5), (5, -5), (5, 5), (-5, 5)]
    hole = [(-1, -1), (-1, 1), (1, 1), (1, -1)]
    return PolygonalDomain.from_coords(outer, [hole])


@pytest.fixture(scope="session")
def d1_tri(d1):
    return triangulate(d1, seed=0)


@pytest.fixture
def over_path():
    return PathPoly([Pt(-3, 0), Pt(0, 3), Pt(3, 0)])


@pytest.fixture
def under_path():
    return PathPoly([Pt(-3, 0), Pt(0, -3), Pt(3, 0)])


@pytest.fixture
def loop_path():
    return PathPoly([Pt(-3, 0), Pt(0, 3), Pt(3, 0), Pt(0, -3), Pt(-3, 0)])


def snap_rat(v: float, denom: int = 1 << 14):
    return rat(round(v * denom)) / denom


def perturb_homotopic(path: PathPoly, d: PolygonalDomain, rng: random.Random, wiggles: int = 3) -> PathPoly:
    """Insert small off-segment detour vertices.  Each wiggle stays inside
    a quarter of the path's clearance tube, so the deformation class is
    untouched while the euclidean length strictly grows."""
    verts = list(path.vertices)
    for _ in range(wiggles):
        cur = PathPoly(verts, closure=True)
        cl2 = _clearance2(cur, d)
        r = math.sqrt(float(cl2)) / 4 if cl2 is not None else 0.25
        r = min(r, 1.0)
        done = False
        for _ in range(60):
            i = rng.randrange(len(verts) - 1)
            a, b = verts[i], verts[i + 1]
            if a == b:
                continue
            t = rat(rng.randint(3, 7)) / 10
            m = lerp(a, b, t)
            ang = rng.uniform(0.0, 2 * math.pi)
            mag = r * rng.uniform(0.35, 0.95)
            off = Pt(snap_rat(math.cos(ang) * mag), snap_rat(math.sin(ang) * mag))
            if off.x == 0 and off.y == 0:
                continue
            cand = verts[: i + 1] + [m + off] + verts[i + 1 :]
            if validate_path(PathPoly(cand, closure=True), d).ok:
                verts = cand
                done = True
                break
        if not done:
            break
    return PathPoly(verts, closure=True)


def subdivide(path, max_chord: float):
    """Insert collinear vertices so no edge chord exceeds max_chord."""
    verts = getattr(path, "vertices", path)
    out = [verts[0]]
    for i in range(len(verts) - 1):
        a, b = verts[i], verts[i + 1]
        d = math.sqrt(float(dist2(a, b)))
        n = max(1, math.ceil(d / max_chord))
        for k in range(1, n + 1):
            out.append(lerp(a, b, rat(k) / n))
    return PathPoly(list(out), closure=getattr(path, "closure", True))


def arclen_sup_dist(pts_a, pts_b, samples: int = 256) -> float:
    """Sup distance between two polylines after arc-length
    reparameterization to [0, 1]."""

    def at(pts, frac):
        pp = [(float(p.x), float(p.y)) for p in pts]
        lens = [math.dist(pp[i], pp[i + 1]) for i in range(len(pp) - 1)]
        total = sum(lens)
        if total == 0:
            return pp[0]
        target = frac * total
        acc = 0.0
        for i, ln in enumerate(lens):
            if acc + ln >= target or i == len(lens) - 1:
                f = 0.0 if ln == 0 else (target - acc) / ln
                f = min(max(f, 0.0), 1.0)
                return (
                    pp[i][0] + (pp[i + 1][0] - pp[i][0]) * f,
                    pp[i][1] + (pp[i + 1][1] - pp[i][1]) * f,
                )
            acc += ln
        return pp[-1]

    worst = 0.0
    for s in range(samples + 1):
        f = s / samples
        pa, pb = at(pts_a, f), at(pts_b, f)
        worst = max(worst, math.dist(pa, pb))
    return worst


def instance_batch(count: int, seed0: int = 0, max_holes: int = 3, spread: int = 24):
    from tautpath.cli import generate_instance

    out = []
    for s in range(seed0, seed0 + count):
        holes = s % (max_holes + 1)
        verts = 8 + (s * 7) % spread
        out.append(generate_instance(s, holes=holes, vertices=verts))
    return out


# ------------------------------------------------- acceptance reporting

# criterion number -> {"name", "status", "detail"}; test_acceptance.py
# registers all nine at import so a crashed run still prints nine lines
CRITERIA: dict = {}


def crit_register(num: int, name: str):
    CRITERIA[num] = {"name": name, "status": "FAIL", "detail": "not run"}


def crit_attempt(num: int):
    CRITERIA[num]["detail"] = "started but did not finish"


def crit_pass(num: int, detail: str):
    CRITERIA[num]["status"] = "PASS"
    CRITERIA[num]["detail"] = detail


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        c = CRITERIA[num]
        terminalreporter.write_line(
            f"criterion {num} ({c['name']}): {c['status']} - {c['detail']}"
        )


def replay_persistence_violations(rep, moved_lines_only: bool = False):
    """Replay a tighten move log and flag any chord whose meeting set
    was connected at some state but split again later.  Checks every
    vertex-pair family line plus each line a move was applied along;
    `moved_lines_only` restricts to the latter."""
    from tautpath.homotopy import SleevePath, line_lifts
    from tautpath.tighten import chord_meeting_components, _family_lines

    sleeve = rep.sleeve
    states = [SleevePath(sleeve, *rep.replay_base)]
    for mv in rep.moves:
        if mv.kind == "chord":
            states.append(SleevePath(sleeve, mv.verts_after, mv.pos_after))
    p, q = states[0].verts[0], states[0].verts[-1]
    lines = [] if moved_lines_only else _family_lines(sleeve.tri, [p, q])
    lines += [mv.line for mv in rep.moves if mv.kind == "chord"]
    seen = set()
    chords = []
    for line in lines:
        if line is None or line.key in seen:
            continue
        seen.add(line.key)
        chords.extend(line_lifts(line, sleeve))
    bad = []
    for ch in chords:
        connected_at = None
        for k, sp in enumerate(states):
            n = len(chord_meeting_components(sp, ch))
            if n <= 1:
                if connected_at is None:
                    connected_at = k
            elif connected_at is not None:
                bad.append(
                    f"line {ch.line.key} copies {ch.start_pos}..{ch.end_pos}:"
                    f" connected at state {connected_at}, {n} pieces at {k}"
                )
                break
    return bad
