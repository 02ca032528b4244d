#!/usr/bin/env python3
"""Writes corpus/*.tri, corpus/*.nsc and corpus/corpus.json.

Every expected number in corpus.json is computed here by nsk_oracle.py and
tagged with where it came from. Run from the repository root:

    python3 scripts/build_corpus.py [--check]

With --check nothing is written; the script exits non-zero if the files on
disk differ from what it would produce.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
import nsk_oracle as o  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

TRIANGULATIONS = {
    "t1_1v": ("one tetrahedron, one vertex, H1(Z2) = 0",
              ["0:1023 0:1023 0:1230 0:3012"]),
    "t1_2v": ("one tetrahedron, two vertices (the 3-sphere)",
              ["0:1023 0:1023 0:0132 0:0132"]),
    "t1_l41": ("one tetrahedron, lens space L(4,1)",
               ["0:1230 0:3012 0:1230 0:3012"]),
    "t2_closed": ("two tetrahedra, one vertex, S2 x S1",
                  ["0:1230 0:3012 1:2301 1:2301", "0:2301 0:2301 1:1230 1:3012"]),
    "t2_s3_4v": ("two tetrahedra glued by the identity on every face, four vertices",
                 ["1:0123 1:0123 1:0123 1:0123", "0:0123 0:0123 0:0123 0:0123"]),
    "t2_rp3": ("two tetrahedra, two vertices, projective space",
               ["1:0132 1:0132 1:1023 1:1023", "0:0132 0:0132 0:1023 0:1023"]),
    "t2_quaternion": ("two tetrahedra, one vertex, H1(Z2) of rank 2",
                      ["1:0231 1:3102 1:1320 1:2013", "0:0312 0:2130 0:3021 0:1203"]),
    "t2_nonorientable": ("two tetrahedra, one vertex, non-orientable",
                         ["1:0132 1:0132 1:1320 1:2013", "0:0132 0:0132 0:3021 0:1203"]),
}

# A single quad in the two-vertex 3-sphere: a sphere separating the vertices
# whose two bad remnants carry one bad disk each.
ADVERSARIAL_QUAD = [0, 0, 0, 0, 1, 0, 0]


def tag(value, source, how):
    return {"value": value, "source": source, "oracle": how}


def least_weight_nonseparating_sphere(glue):
    """Least-weight non-separating normal sphere among cap-1 vectors."""
    best = None
    for x in o.enumerate_naive(glue, 1):
        if not any(x) or o.euler_formula(glue, x) != 2:
            continue
        if len(o.surface_components(glue, x)) != 1:
            continue
        cut = o.cut_summary(glue, x)
        if cut["components"] != 1:  # a separating sphere splits M*
            continue
        key = (o.weight(glue, x), x)
        if best is None or key < best:
            best = key
    return best[1]


def link_vectors(glue):
    sk = o.skeleton(glue)
    return [o.vertex_link(glue, orbit) for orbit in range(sk.v)]


def nsc_text(vectors, t, comment):
    lines = [f"% {comment}", f"surfaces {len(vectors)} tets {t}"]
    lines += [" ".join(str(c) for c in x) for x in vectors]
    return "\n".join(lines) + "\n"


def bound_expectation(glue, vectors):
    t = len(glue)
    sk = o.skeleton(glue)
    if not sk.orientable:
        return {"error": tag("non-orientable", "trivial", "orientability BFS over gluing parities")}
    x = [sum(col) for col in zip(*vectors)]
    cut = o.cut_summary(glue, x)
    rank = o.h1_z2_rank(glue)
    k, g, b, s, q = cut["k"], cut["g"], cut["b"], cut["s"], cut["q"]
    unconditional = [2 * k == g + b, rank <= t + 1, s <= 4 * t, q <= 2 * t]
    conditional = [g <= rank, 2 * b <= s + q, 2 * k <= 4 * t + 1, k <= 2 * t]
    exit_code = 1 if not all(unconditional) else (0 if all(conditional) else 2)
    how = "nsk_oracle.cut_summary (face-piece region model)"
    return {
        "k": tag(k, "derived", "nsk_oracle.surface_components"),
        "g": tag(g, "derived", how),
        "b": tag(b, "derived", how),
        "s": tag(s, "derived", how),
        "q": tag(q, "derived", how),
        "badRemnantDisks": tag(cut["bad_per_remnant"], "derived", how),
        "flags": tag(cut["flags"], "derived", how),
        "exitCode": tag(exit_code, "derived", "ledger arithmetic recomputed from the oracle values"),
    }


def build():
    files = {}
    entries = []
    for name, (comment, rows) in TRIANGULATIONS.items():
        glue = o.parse_tri("tets %d\n%s\n" % (len(rows), "\n".join(rows)))
        assert not o.check_table(glue), (name, o.check_table(glue))
        sk = o.skeleton(glue)
        assert sk.connected and not sk.edge_reversed and all(c == 2 for c in sk.link_chis), name
        t = len(glue)
        files[f"{name}.tri"] = o.format_tri(glue, comment)

        surfaces = []

        def add(file, vectors, note):
            files[file] = nsc_text(vectors, t, note)
            for x in vectors:
                assert o.admissible(x) and o.matching_ok(glue, x), (file, x)
            chi = sum(o.euler_formula(glue, x) for x in vectors)
            assert chi == sum(o.euler_by_cells(glue, x) for x in vectors), file
            surfaces.append({"file": file, "note": note,
                             "chi": tag(chi, "derived", "nsk_oracle.euler_by_cells"),
                             "bound": bound_expectation(glue, vectors)})

        links = link_vectors(glue)
        add(f"{name}_links.nsc", links, "every vertex link")
        if name == "t2_closed":
            sphere = least_weight_nonseparating_sphere(glue)
            add("t2_closed_sphere.nsc", [sphere], "non-separating 2-sphere (curated collection)")
            add("t2_closed_sphere_x2.nsc", [sphere] * 2, "two parallel copies of the sphere")
            add("t2_closed_sphere_x5.nsc", [sphere] * (2 * t + 1), "2t+1 parallel copies of the sphere")
            add("t2_closed_link_x2.nsc", [links[0]] * 2, "two copies of the vertex link")
        if name == "t1_2v":
            add("t1_2v_quad.nsc", [ADVERSARIAL_QUAD], "single quad: separating sphere with thin bad remnants")

        entries.append({
            "name": name,
            "tri": f"{name}.tri",
            "description": comment,
            "expect": {
                "t": tag(t, "trivial", "tets header"),
                "v": tag(sk.v, "derived", "nsk_oracle.skeleton union-find over corners"),
                "e": tag(sk.e, "derived", "nsk_oracle.skeleton union-find over edge identifications"),
                "f": tag(sk.f, "derived", "nsk_oracle.skeleton face classes"),
                "eN": tag(sk.e - (sk.v - 1), "derived", "edge count minus spanning-tree size v - 1"),
                "rankH1Z2": tag(o.h1_z2_rank(glue), "derived", "nsk_oracle.h1_z2_rank (bitmask elimination)"),
                "orientable": tag(sk.orientable, "derived", "nsk_oracle.skeleton orientation BFS"),
            },
            "surfaces": surfaces,
        })

    files["corpus.json"] = json.dumps({"entries": entries}, indent=2) + "\n"
    return files


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    files = build()
    stale = []
    for name, text in files.items():
        path = CORPUS / name
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            CORPUS.mkdir(exist_ok=True)
            path.write_text(text)
    if stale:
        print("out of date:", ", ".join(stale))
        return 1
    print(f"{len(files)} corpus files {'checked' if args.check else 'written'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
