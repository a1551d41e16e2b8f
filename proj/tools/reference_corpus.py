#!/usr/bin/env python3
"""Reference corpus of connected simple plane graphs for n <= 7.

Independent of the C++ enumerator: graphs come from the networkx graph atlas,
embeddings are labeled rotation systems filtered by Euler's formula, and maps
are identified up to graph automorphisms and reflection by orbit computation.

For n <= 6 every rotation system is tried. For n = 7 that is ~69M systems, so
embeddings are grown from a spanning tree by inserting the remaining edges
into faces; both methods are compared on n <= 6 before n = 7 is written.

Writes tests/data/plane_n<N>.pc (planar_code) and tests/data/reference_counts.json.
"""

import argparse
import itertools
import json
import pathlib

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.generators.atlas import graph_atlas_g


def cyclic_orders(items):
    items = sorted(items)
    if len(items) <= 1:
        yield tuple(items)
        return
    head = items[0]
    for perm in itertools.permutations(items[1:]):
        yield (head,) + perm


def normalize(rot):
    """Rotate every cyclic list to start at its smallest entry."""
    out = []
    for r in rot:
        if not r:
            out.append(())
            continue
        i = r.index(min(r))
        out.append(tuple(r[i:]) + tuple(r[:i]))
    return tuple(out)


def face_count(rot):
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    seen = set()
    faces = 0
    for u, r in enumerate(rot):
        for v in r:
            if (u, v) in seen:
                continue
            faces += 1
            d = (u, v)
            while d not in seen:
                seen.add(d)
                a, x = d
                rx = rot[x]
                d = (x, rx[(pos[x][a] + 1) % len(rx)])
    return faces


def is_spherical(rot, n, m):
    if m == 0:
        return True
    return n - m + face_count(rot) == 2


def brute_force_embeddings(g):
    n, m = g.number_of_nodes(), g.number_of_edges()
    choices = [list(cyclic_orders(g[v])) for v in range(n)]
    found = set()
    for rot in itertools.product(*choices):
        if is_spherical(rot, n, m):
            found.add(normalize(rot))
    return found


def faces_of(rot):
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    seen = set()
    faces = []
    for u, r in enumerate(rot):
        for v in r:
            if (u, v) in seen:
                continue
            face = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, x = d
                rx = rot[x]
                d = (x, rx[(pos[x][a] + 1) % len(rx)])
            faces.append(face)
    return faces


def grown_embeddings(g):
    """Spanning-tree rotations, then each extra edge inserted at a pair of
    corners of one face (corner (a -> x) means: right after a at x)."""
    n = g.number_of_nodes()
    tree = nx.bfs_tree(g, 0).to_undirected()
    extra = sorted(tuple(sorted(e)) for e in g.edges() if not tree.has_edge(*e))
    current = set()
    for rot in itertools.product(*[list(cyclic_orders(tree[v])) for v in range(n)]):
        current.add(tuple(tuple(r) for r in rot))
    for (x0, y0) in extra:
        nxt = set()
        for rot in current:
            for face in faces_of(rot):
                corners_x = [a for (a, x) in face if x == x0]
                corners_y = [b for (b, y) in face if y == y0]
                for a in corners_x:
                    for b in corners_y:
                        new = [list(r) for r in rot]
                        new[x0].insert(new[x0].index(a) + 1, y0)
                        new[y0].insert(new[y0].index(b) + 1, x0)
                        nxt.add(tuple(tuple(r) for r in new))
        current = nxt
    m = g.number_of_edges()
    out = set()
    for rot in current:
        assert is_spherical(rot, n, m)
        out.add(normalize(rot))
    return out


def automorphisms(g):
    return [dict(iso) for iso in GraphMatcher(g, g).isomorphisms_iter()]


def apply(rot, sigma, mirror):
    n = len(rot)
    out = [None] * n
    for v in range(n):
        r = [sigma[w] for w in rot[v]]
        if mirror:
            r = r[::-1]
        out[sigma[v]] = r
    return normalize(out)


def orbit_representatives(g, embeddings):
    autos = automorphisms(g)
    left = set(embeddings)
    reps = []
    while left:
        e = min(left)
        orbit = {apply(e, s, mir) for s in autos for mir in (False, True)}
        reps.append(min(orbit))
        left -= orbit
    return sorted(reps)


def planar_code(graphs_rot):
    out = bytearray(b">>planar_code<<")
    for rot in graphs_rot:
        out.append(len(rot))
        for r in rot:
            out.extend(w + 1 for w in r)
            out.append(0)
    return bytes(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"))
    ap.add_argument("--nmax", type=int, default=7)
    args = ap.parse_args()
    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    counts = {"maps": {}, "graphs": {}, "subcubic_maps": {}, "star_forest_maps": {}}
    for n in range(1, args.nmax + 1):
        reps_all = []
        graphs = 0
        for g in graph_atlas_g():
            if g.number_of_nodes() != n or not nx.is_connected(g) or not nx.check_planarity(g)[0]:
                continue
            graphs += 1
            emb = grown_embeddings(g)
            if n <= 6:
                brute = brute_force_embeddings(g)
                if brute != emb:
                    raise SystemExit(f"embedding methods disagree on {sorted(g.edges())}")
            reps_all.extend(orbit_representatives(g, emb))
        counts["maps"][n] = len(reps_all)
        counts["graphs"][n] = graphs
        counts["subcubic_maps"][n] = sum(1 for r in reps_all if all(len(x) <= 3 for x in r))
        star = 0
        for r in reps_all:
            high = [v for v in range(n) if len(r[v]) >= 4]
            h = nx.Graph()
            h.add_nodes_from(high)
            h.add_edges_from((v, w) for v in high for w in r[v] if w in high)
            if all(nx.is_tree(h.subgraph(c)) and sum(1 for v in c if h.degree(v) > 1) <= 1
                   for c in nx.connected_components(h)):
                star += 1
        counts["star_forest_maps"][n] = star
        (out_dir / f"plane_n{n}.pc").write_bytes(planar_code(reps_all))
        print(f"n={n}: {graphs} graphs, {len(reps_all)} maps")
    (out_dir / "reference_counts.json").write_text(json.dumps(counts, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
