"""Writes the JSON inputs under samples/ (except k132_fanplanar.json, which
comes from k132_drawing.py). Run from the repository root."""
import itertools
import json
import os

OUT = "samples"


def graph(vertices, edges):
    es = sorted({tuple(sorted(e)) for e in edges})
    return {"vertices": list(vertices), "edges": [list(e) for e in es]}


def path(n, prefix=""):
    vs = [prefix + str(i) for i in range(n)]
    return vs, [(vs[i], vs[i + 1]) for i in range(n - 1)]


def strong(g1, g2):
    (v1, e1), (v2, e2) = g1, g2
    adj1 = {frozenset(e) for e in e1}
    adj2 = {frozenset(e) for e in e2}
    vs = [f"{a}|{b}" for a in v1 for b in v2]
    es = []
    for (a, b), (c, d) in itertools.combinations([(a, b) for a in v1 for b in v2], 2):
        ok1 = a == c or frozenset((a, c)) in adj1
        ok2 = b == d or frozenset((b, d)) in adj2
        if ok1 and ok2:
            es.append((f"{a}|{b}", f"{c}|{d}"))
    return vs, es


def complete(n):
    vs = [str(i) for i in range(n)]
    return vs, list(itertools.combinations(vs, 2))


def path_td(vs):
    """Normalised decomposition of a path: rooted at the first vertex."""
    tree = graph(vs, [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)])
    bags = {vs[0]: [vs[0]]}
    for i in range(1, len(vs)):
        bags[vs[i]] = sorted([vs[i - 1], vs[i]])
    return {"tree": tree, "root": vs[0], "bags": bags}


def quotient_model(host, branch, centre, depth2x):
    vs, es = host
    owner = {x: u for u, b in branch.items() for x in b}
    guest_edges = {tuple(sorted((owner[a], owner[b]))) for a, b in es if owner[a] != owner[b]}
    return {
        "guest": graph(sorted(branch), guest_edges),
        "host": graph(vs, es),
        "branch": {u: sorted(b) for u, b in branch.items()},
        "centre": centre,
        "depth2x": depth2x,
    }


def layout_for_order(vs, es, order):
    """An edge's queue is one more than the largest queue nested inside it."""
    pos = {v: i for i, v in enumerate(order)}
    spans = sorted((tuple(sorted((pos[a], pos[b]))), tuple(sorted((a, b)))) for a, b in es)
    level = {}
    for (l, r), key in sorted(spans, key=lambda s: s[0][1] - s[0][0]):
        inner = [level[k] for (l2, r2), k in spans if l < l2 and r2 < r and k in level]
        level[key] = 1 + max(inner, default=-1)
    return {"order": order, "queue": [{"edge": list(k), "queue": q} for k, q in sorted(level.items())]}


def write(name, doc):
    with open(os.path.join(OUT, name), "w") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")


def main():
    os.makedirs(OUT, exist_ok=True)

    # Engine input: a 1-shallow minor of P4 ⊠ P3 with its (H, L)-partition.
    h, l = path(4), path(3)
    g = strong(h, l)
    branch = {
        "u0": ["0|0", "0|1", "1|0"],
        "u1": ["1|1", "1|2", "0|2"],
        "u2": ["2|0", "2|1", "3|0"],
        "u3": ["2|2", "3|1", "3|2"],
    }
    centre = {"u0": "0|0", "u1": "1|1", "u2": "2|0", "u3": "3|1"}
    write("p4xp3_engine.json", {
        "g": graph(*g),
        "partition": {
            "quotientH": graph(*h),
            "quotientL": graph(*l),
            "partY": {a: sorted(f"{a}|{b}" for b in l[0]) for a in h[0]},
            "partZ": {b: sorted(f"{a}|{b}" for a in h[0]) for b in l[0]},
            "width": 1,
        },
        "hTD": path_td(h[0]),
        "model": quotient_model(g, branch, centre, 2),
        "r": 1,
    })

    # gpst input: columns of P3 ⊠ P4 ⊠ K_1 contracted to a path.
    hh, pp = path(3), path(4)
    host = strong(strong(hh, pp), complete(1))
    gbranch = {f"c{p}": [f"{x}|{p}|0" for x in hh[0]] for p in pp[0]}
    gcentre = {f"c{p}": f"1|{p}|0" for p in pp[0]}
    write("gpst_columns.json", {
        "model": quotient_model(host, gbranch, gcentre, 2),
        "h": graph(*hh),
        "p": graph(*pp),
        "ell": 1,
        "hTD": path_td(hh[0]),
        "r": 1,
    })

    # Queue and colouring transfer through a column contraction of P3 ⊠ P2.
    small = strong(path(3), path(2))
    sbranch = {f"c{x}": [f"{x}|0", f"{x}|1"] for x in "012"}
    model = quotient_model(small, sbranch, {f"c{x}": f"{x}|0" for x in "012"}, 2)
    order = sorted(small[0])
    write("columns_layout.json", {"model": model, "hostLayout": layout_for_order(*small, order)})
    write("columns_order.json", {"model": model, "hostOrder": order})

    # K4 with its diagonals crossing once.
    k4 = complete(4)
    write("k4_oneplanar.json", {
        "graph": graph(*k4),
        "crossings": [{"a": ["0", "2"], "b": ["1", "3"], "posA": 0, "posB": 0, "side": 1}],
    })

    # Three edges crossing pairwise: feasible for k = 1 by a cyclic charging.
    write("three_crossing.json", {
        "graph": graph([str(i) for i in range(6)], [("0", "1"), ("2", "3"), ("4", "5")]),
        "crossings": [
            {"a": ["0", "1"], "b": ["2", "3"], "posA": 0, "posB": 0},
            {"a": ["0", "1"], "b": ["4", "5"], "posA": 1, "posB": 0},
            {"a": ["2", "3"], "b": ["4", "5"], "posA": 1, "posB": 1},
        ],
    })

    write("strings.json", {"curves": {"p": ["e1", "e2"], "q": ["e1", "e3", "e4"], "r": ["e2", "e3"], "s": ["e4"]}})

    c6 = [str(i) for i in range(6)]
    write("clusters.json", {
        "graph": graph(c6, [(c6[i], c6[(i + 1) % 6]) for i in range(6)]),
        "clusters": {"A": ["0", "1"], "B": ["2", "3"], "C": ["4", "5"]},
        "clusterAdjacency": graph(["A", "B", "C"], [("A", "B"), ("B", "C"), ("A", "C")]),
        "k": 2,
    })

    sq = ["a", "b", "c", "d"]
    sq_edges = [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("a", "c"), ("b", "d")]
    write("fanbundle.json", {
        "graph": graph(sq, sq_edges),
        "bundles": {v.upper(): {"origin": v, "edges": [list(e) for e in sq_edges if v in e]} for v in sq},
        "crossings": [{"a": "A", "b": "B", "posA": 0, "posB": 0}],
    })

    p5 = path(5)
    write("shortcut.json", {"base": graph(*p5), "paths": [["0", "1", "2"], ["2", "3", "4"]], "k": 2, "d": 1})

    c5 = [str(i) for i in range(5)]
    write("cliquelift.json", {
        "base": graph(c5, [(c5[i], c5[(i + 1) % 5]) for i in range(5)]),
        "M": {"0": ["1"], "2": ["3"]},
        "d": 1,
    })

    p4 = path(4)
    write("p4_coloured.json", {"graph": graph(*p4), "colour": {"0": "a", "1": "b", "2": "c", "3": "a"}})
    write("k4.json", graph(*k4))


if __name__ == "__main__":
    main()
