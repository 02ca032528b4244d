"""Independent reference computations for the nsk corpus.

Nothing here imports or shells out to the C++ library. Each routine works
directly from the raw gluing table and coordinate vectors so the numbers it
produces can be frozen into corpus metadata and compared against `nsk corpus`.

Conventions shared with the library (they are part of the file formats):
  * face f of a tetrahedron is the face opposite vertex f;
  * a gluing record j:abcd sends vertex i of the source to vertex "abcd"[i]
    of tetrahedron j;
  * coordinates per tetrahedron are [T0 T1 T2 T3 Q01|23 Q02|13 Q03|12];
  * disks of one type are stacked starting next to their cut-off vertex
    (triangles) or next to the edge ab (quads Qab|cd).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
QUAD_PAIRS = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]


# --------------------------------------------------------------------------
# gluing tables

def parse_tri(text: str):
    rows = []
    count = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if count is None:
            word, n = line.split()
            assert word == "tets"
            count = int(n)
            continue
        recs = line.split()
        assert len(recs) == 4, line
        row = []
        for rec in recs:
            tgt, perm = rec.split(":")
            row.append((int(tgt), tuple(int(c) for c in perm)))
        rows.append(row)
    assert count is not None and len(rows) == count
    return rows


def format_tri(glue, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend("% " + c for c in comment.splitlines())
    out.append(f"tets {len(glue)}")
    for row in glue:
        out.append(" ".join(f"{b}:{''.join(map(str, p))}" for b, p in row))
    return "\n".join(out) + "\n"


def inverse(p):
    inv = [0] * 4
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def parity(p) -> int:
    inv = 0
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                inv += 1
    return inv % 2


def check_table(glue) -> list[str]:
    """Direct check of the involution and face-bijection conditions."""
    errs = []
    t = len(glue)
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            if not (0 <= b < t):
                errs.append(f"tet {a} face {f}: target out of range")
                continue
            if sorted(p) != [0, 1, 2, 3]:
                errs.append(f"tet {a} face {f}: not a permutation")
                continue
            g = p[f]
            if b == a and g == f:
                errs.append(f"tet {a} face {f}: glued to itself")
            # the three vertices of face f land on the three vertices of face g
            if sorted(p[v] for v in range(4) if v != f) != [v for v in range(4) if v != g]:
                errs.append(f"tet {a} face {f}: vertices not mapped onto face {g}")
            back_b, back_p = glue[b][g]
            if back_b != a or back_p != inverse(p):
                errs.append(f"tet {a} face {f}: no inverse record")
    return errs


class UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self, items):
        out = {}
        for it in items:
            out.setdefault(self.find(it), []).append(it)
        return list(out.values())


@dataclass
class Skeleton:
    t: int
    v: int
    e: int
    f: int
    vertex_of: dict
    edge_of: dict
    face_reps: list
    edge_reversed: bool
    link_chis: list
    orientable: bool
    connected: bool


def skeleton(glue) -> Skeleton:
    t = len(glue)
    vuf, euf, fuf, end_uf = UF(), UF(), UF(), UF()
    # directed edges: (tet, i, j); merging (a,i,j) with (b,p(i),p(j))
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            fuf.union((a, f), (b, p[f]))
            others = [v for v in range(4) if v != f]
            for v in others:
                vuf.union((a, v), (b, p[v]))
            for i in others:
                for j in others:
                    if i != j:
                        euf.union((a, i, j), (b, p[i], p[j]))
                        end_uf.union((a, i, j), (b, p[i], p[j]))
    corners = [(a, v) for a in range(t) for v in range(4)]
    vclasses = vuf.classes(corners)
    vertex_of = {}
    for idx, cls in enumerate(sorted(vclasses, key=min)):
        for c in cls:
            vertex_of[c] = idx
    directed = [(a, i, j) for a in range(t) for i in range(4) for j in range(4) if i != j]
    dclasses = euf.classes(directed)
    reversed_flag = False
    for cls in dclasses:
        members = set(cls)
        if any((a, j, i) in members for (a, i, j) in cls):
            reversed_flag = True
    und = UF()
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            others = [v for v in range(4) if v != f]
            for i, j in itertools.combinations(others, 2):
                und.union((a, i, j), (b, min(p[i], p[j]), max(p[i], p[j])))
    uedges = [(a, i, j) for a in range(t) for (i, j) in EDGES]
    uclasses = und.classes(uedges)
    edge_of = {}
    for idx, cls in enumerate(sorted(uclasses, key=min)):
        for c in cls:
            edge_of[c] = idx
    fclasses = fuf.classes([(a, f) for a in range(t) for f in range(4)])
    face_reps = sorted(min(c) for c in fclasses)

    # vertex links: triangles = corners, edges = 3n/2, vertices = edge-end classes
    link_chis = []
    for idx in range(len(vclasses)):
        members = [c for c in corners if vertex_of[c] == idx]
        ends = set()
        for (a, v) in members:
            for w in range(4):
                if w != v:
                    ends.add(end_uf.find((a, v, w)))
        n = len(members)
        link_chis.append(len(ends) - 3 * n // 2 + n)

    # orientability: BFS over tets, sign flips across even gluings
    sign = {0: 1}
    orientable = True
    queue = [0]
    while queue:
        a = queue.pop()
        for f in range(4):
            b, p = glue[a][f]
            want = sign[a] if parity(p) == 1 else -sign[a]
            if b not in sign:
                sign[b] = want
                queue.append(b)
            elif sign[b] != want:
                orientable = False
    connected = len(sign) == t
    return Skeleton(t, len(vclasses), len(uclasses), len(fclasses), vertex_of, edge_of,
                    face_reps, reversed_flag, link_chis, orientable, connected)


def is_closed_manifold(glue) -> bool:
    if check_table(glue):
        return False
    sk = skeleton(glue)
    return sk.connected and not sk.edge_reversed and all(c == 2 for c in sk.link_chis)


# --------------------------------------------------------------------------
# mod-2 homology by elimination on Python integers used as row bitmasks

def gf2_rank(rows) -> int:
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        if pivot == 0:
            continue
        low = pivot & -pivot
        rank += 1
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def boundary_rows(glue, sk: Skeleton):
    t = len(glue)
    face_index = {}
    for idx, rep in enumerate(sk.face_reps):
        a, f = rep
        face_index[(a, f)] = idx
        b, p = glue[a][f]
        face_index[(b, p[f])] = idx
    d3 = []
    for a in range(t):
        row = 0
        for f in range(4):
            row ^= 1 << face_index[(a, f)]
        d3.append(row)
    d2 = []
    for (a, f) in sk.face_reps:
        row = 0
        others = [v for v in range(4) if v != f]
        for i, j in itertools.combinations(others, 2):
            row ^= 1 << sk.edge_of[(a, i, j)]
        d2.append(row)
    d1 = []
    reps = {}
    for (a, i, j), idx in sk.edge_of.items():
        reps.setdefault(idx, (a, i, j))
    for idx in range(sk.e):
        a, i, j = reps[idx]
        d1.append((1 << sk.vertex_of[(a, i)]) ^ (1 << sk.vertex_of[(a, j)]))
    return d1, d2, d3


def h1_z2_rank(glue) -> int:
    sk = skeleton(glue)
    d1, d2, _ = boundary_rows(glue, sk)
    return sk.e - gf2_rank(d1) - gf2_rank(d2)


def h1_rational_rank(glue) -> int:
    import sympy
    sk = skeleton(glue)
    # oriented boundaries for rational Betti number
    t = len(glue)
    face_index = {}
    for idx, rep in enumerate(sk.face_reps):
        face_index[rep] = idx
    d1 = sympy.zeros(sk.v, sk.e)
    reps = {}
    for (a, i, j), idx in sorted(sk.edge_of.items()):
        reps.setdefault(idx, (a, i, j))
    for idx, (a, i, j) in reps.items():
        d1[sk.vertex_of[(a, j)], idx] += 1
        d1[sk.vertex_of[(a, i)], idx] -= 1
    # orientation of edge orbit relative to its representative (a,i,j), i<j
    rep_dir = {}
    for idx, (a, i, j) in reps.items():
        rep_dir[idx] = (a, i, j)

    directed_uf = UF()
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            others = [v for v in range(4) if v != f]
            for i in others:
                for j in others:
                    if i != j:
                        directed_uf.union((a, i, j), (b, p[i], p[j]))

    def edge_sign(a, i, j):
        idx = sk.edge_of[(a, min(i, j), max(i, j))]
        ra, ri, rj = rep_dir[idx]
        return 1 if directed_uf.find((a, i, j)) == directed_uf.find((ra, ri, rj)) else -1

    d2 = sympy.zeros(sk.e, sk.f)
    for col, (a, f) in enumerate(sk.face_reps):
        x, y, z = [v for v in range(4) if v != f]
        for (i, j), s in (((y, z), 1), ((x, z), -1), ((x, y), 1)):
            d2[sk.edge_of[(a, min(i, j), max(i, j))], col] += s * edge_sign(a, i, j)
    r1 = d1.rank()
    r2 = d2.rank()
    return sk.e - r1 - r2


# --------------------------------------------------------------------------
# normal surfaces

def quad_partner(k: int, v: int) -> int:
    for pair in QUAD_PAIRS[k]:
        if v in pair:
            return pair[0] if pair[1] == v else pair[1]
    raise ValueError


def quad_side(k: int, v: int) -> int:
    return 0 if v in QUAD_PAIRS[k][0] else 1


def tet_data(x, a):
    T = x[7 * a:7 * a + 4]
    Q = x[7 * a + 4:7 * a + 7]
    nz = [k for k in range(3) if Q[k]]
    if len(nz) > 1:
        raise ValueError(f"quad condition fails in tet {a}")
    k = nz[0] if nz else None
    m = Q[k] if nz else 0
    return T, k, m


def arc_count(x, a, f, w):
    T, k, m = tet_data(x, a)
    return T[w] + (m if k is not None and quad_partner(k, f) == w else 0)


def matching_ok(glue, x) -> bool:
    for a in range(len(glue)):
        for f in range(4):
            b, p = glue[a][f]
            for w in range(4):
                if w != f and arc_count(x, a, f, w) != arc_count(x, b, p[f], p[w]):
                    return False
    return True


def admissible(x) -> bool:
    for a in range(len(x) // 7):
        if sum(1 for q in x[7 * a + 4:7 * a + 7] if q) > 1:
            return False
    return all(c >= 0 for c in x)


def disk_at_arc(x, a, f, w, r):
    T, k, m = tet_data(x, a)
    if r < T[w]:
        return (a, w, r)
    j = r - T[w]
    idx = j if quad_side(k, w) == 0 else m - 1 - j
    return (a, 4 + k, idx)


def side_facing(disk, w):
    a, typ, idx = disk
    if typ < 4:
        return 0
    return quad_side(typ - 4, w)


def disks_of(x):
    out = []
    for a in range(len(x) // 7):
        for typ in range(7):
            for i in range(x[7 * a + typ]):
                out.append((a, typ, i))
    return out


def vertex_link(glue, orbit):
    sk = skeleton(glue)
    x = [0] * (7 * len(glue))
    for (a, v), idx in sk.vertex_of.items():
        if idx == orbit:
            x[7 * a + v] += 1
    return x


def weight(glue, x) -> int:
    sk = skeleton(glue)
    per_orbit = {}
    for (a, i, j), idx in sk.edge_of.items():
        T, k, m = tet_data(x, a)
        crosses = k is not None and quad_partner(k, i) != j
        c = T[i] + T[j] + (m if crosses else 0)
        assert per_orbit.setdefault(idx, c) == c, "edge count mismatch"
    return sum(per_orbit.values())


def euler_by_cells(glue, x) -> int:
    """V - E + F of the glued disk complex."""
    t = len(glue)
    puf = UF()
    points = []
    for a in range(t):
        T, k, m = tet_data(x, a)
        for (i, j) in EDGES:
            n = T[i] + T[j] + (m if k is not None and quad_partner(k, i) != j else 0)
            points.extend((a, i, j, s) for s in range(n))
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            others = [v for v in range(4) if v != f]
            for i, j in itertools.combinations(others, 2):
                T, k, m = tet_data(x, a)
                n = T[i] + T[j] + (m if k is not None and quad_partner(k, i) != j else 0)
                bi, bj = p[i], p[j]
                for s in range(n):
                    # position s counted from i equals position s counted from p(i)
                    if bi < bj:
                        puf.union((a, i, j, s), (b, bi, bj, s))
                    else:
                        puf.union((a, i, j, s), (b, bj, bi, n - 1 - s))
    V = len(puf.classes(points))
    arcs = sum(arc_count(x, a, f, w) for a in range(t) for f in range(4) for w in range(4) if w != f)
    E = arcs // 2
    F = sum(x)
    return V - E + F


def surface_components(glue, x):
    t = len(glue)
    uf = UF()
    disks = disks_of(x)
    for d in disks:
        uf.find(d)
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            for w in range(4):
                if w == f:
                    continue
                for r in range(arc_count(x, a, f, w)):
                    uf.union(disk_at_arc(x, a, f, w, r), disk_at_arc(x, b, p[f], p[w], r))
    return uf.classes(disks)


# --------------------------------------------------------------------------
# cutting along the surface, face-piece model

def segment_piece(x, a, i, j, f, s):
    """Piece of face f (which contains edge ij) holding segment s of edge ij,
    segments numbered from i."""
    ni = arc_count(x, a, f, i)
    nj = arc_count(x, a, f, j)
    if s < ni:
        return ("strip", a, f, i, s)
    if s == ni:
        return ("central", a, f)
    return ("strip", a, f, j, ni + nj - s)


def face_pieces(x, a, f):
    out = [("central", a, f)]
    for w in range(4):
        if w != f:
            out.extend(("strip", a, f, w, r) for r in range(arc_count(x, a, f, w)))
    return out


def piece_at_corner(x, a, f, v):
    return ("strip", a, f, v, 0) if arc_count(x, a, f, v) else ("central", a, f)


def cut_summary(glue, x):
    """Returns dict with k, g, b, s, q, remnants, and per-region goodness,
    computed from face pieces and segments only."""
    t = len(glue)
    region_uf = UF()
    all_pieces = []
    segments = []
    for a in range(t):
        T, k, m = tet_data(x, a)
        for f in range(4):
            all_pieces.extend(face_pieces(x, a, f))
        for (i, j) in EDGES:
            n = T[i] + T[j] + (m if k is not None and quad_partner(k, i) != j else 0)
            f1, f2 = [f for f in range(4) if f not in (i, j)]
            for s in range(n + 1):
                p1 = segment_piece(x, a, i, j, f1, s)
                p2 = segment_piece(x, a, i, j, f2, s)
                region_uf.union(p1, p2)
                segments.append(p1)
    # regions inside tetrahedra (only same-tet unions so far)
    regions = region_uf.classes(all_pieces)
    region_id = {}
    for idx, cls in enumerate(regions):
        for pc in cls:
            region_id[pc] = idx
    piece_count = [0] * len(regions)
    seg_count = [0] * len(regions)
    for pc in all_pieces:
        piece_count[region_id[pc]] += 1
    for pc in segments:
        seg_count[region_id[pc]] += 1
    good_region = [piece_count[r] - seg_count[r] == 0 for r in range(len(regions))]

    # disk sides -> region
    side_region = {}
    for a in range(t):
        for f in range(4):
            for w in range(4):
                if w == f:
                    continue
                n = arc_count(x, a, f, w)
                for r in range(n):
                    d = disk_at_arc(x, a, f, w, r)
                    near = side_facing(d, w)
                    far_piece = ("strip", a, f, w, r + 1) if r + 1 < n else ("central", a, f)
                    for side, pc in ((near, ("strip", a, f, w, r)), (1 - near, far_piece)):
                        rid = region_id[pc]
                        assert side_region.setdefault(d + (side,), rid) == rid
    corner_region = {}
    for a in range(t):
        for v in range(4):
            rids = {region_id[piece_at_corner(x, a, f, v)] for f in range(4) if f != v}
            assert len(rids) == 1
            corner_region[(a, v)] = rids.pop()

    # components of M* - S
    comp_uf = UF()
    for rid in range(len(regions)):
        comp_uf.find(rid)
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            comp_uf.union(region_id[("central", a, f)], region_id[("central", b, p[f])])
            for w in range(4):
                if w == f:
                    continue
                for r in range(arc_count(x, a, f, w)):
                    comp_uf.union(region_id[("strip", a, f, w, r)],
                                  region_id[("strip", b, p[f], p[w], r)])
    comp_good = {}
    for rid in range(len(regions)):
        c = comp_uf.find(rid)
        comp_good[c] = comp_good.get(c, True) and good_region[rid]

    # remnants: disk sides across arc gluings
    side_uf = UF()
    for key in side_region:
        side_uf.find(key)
    for a in range(t):
        for f in range(4):
            b, p = glue[a][f]
            for w in range(4):
                if w == f:
                    continue
                for r in range(arc_count(x, a, f, w)):
                    d1 = disk_at_arc(x, a, f, w, r)
                    d2 = disk_at_arc(x, b, p[f], p[w], r)
                    n1, n2 = side_facing(d1, w), side_facing(d2, p[w])
                    side_uf.union(d1 + (n1,), d2 + (n2,))
                    side_uf.union(d1 + (1 - n1,), d2 + (1 - n2,))
    remnants = side_uf.classes(list(side_region))
    g = b = s = q = 0
    bad_per_remnant = []
    for rem in remnants:
        comps = {comp_uf.find(side_region[sd]) for sd in rem}
        assert len(comps) == 1
        good = comp_good[comps.pop()]
        bad_disks = [sd for sd in rem if not good_region[side_region[sd]]]
        if good:
            g += 1
        else:
            b += 1
            bad_per_remnant.append(len(bad_disks))
        for sd in bad_disks:
            if sd[1] < 4:
                s += 1
            else:
                q += 1
    k = len(surface_components(glue, x)) if sum(x) else 0

    # horizontal boundary of good components: remnants plus vertex-link spheres
    sk = skeleton(glue)
    horizontal = {}
    for rem in remnants:
        c = comp_uf.find(side_region[rem[0]])
        horizontal.setdefault(c, []).append("remnant")
    for orbit in range(sk.v):
        corner = min(cn for cn in sk.vertex_of if sk.vertex_of[cn] == orbit)
        c = comp_uf.find(corner_region[corner])
        horizontal.setdefault(c, []).append("link")
    flags = []
    for c, parts in horizontal.items():
        if not comp_good[c] or len(parts) != 2:
            continue
        flags.append("parallel-surfaces" if parts.count("remnant") == 2 else
                     "vertex-link-parallel" if parts.count("remnant") == 1 else "link-link")
    return {
        "k": k, "g": g, "b": b, "s": s, "q": q,
        "remnants": len(remnants),
        "regions": len(regions),
        "components": len({comp_uf.find(r) for r in range(len(regions))}),
        "good_components": sum(1 for v in comp_good.values() if v),
        "bad_per_remnant": sorted(bad_per_remnant),
        "flags": sorted(flags),
    }


def euler_formula(glue, x) -> int:
    t = len(glue)
    sk = skeleton(glue)
    arcs = 0
    for (a, f) in sk.face_reps:
        arcs += sum(arc_count(x, a, f, w) for w in range(4) if w != f)
    return weight(glue, x) - arcs + sum(x)


def enumerate_naive(glue, cap):
    t = len(glue)
    out = []
    for x in itertools.product(range(cap + 1), repeat=7 * t):
        x = list(x)
        if admissible(x) and matching_ok(glue, x):
            out.append(x)
    return out
