"""Search for a straight-line fan-planar drawing of K_{1,3,2}.

Emits the combinatorial crossing data (positions along each edge measured
from the edge's lexicographically smaller endpoint, and side flags) as an
embedded-graph JSON document. Without --search it uses the pinned drawing
behind samples/k132_fanplanar.json.
"""
import itertools, json, random, sys

V = ["a", "b1", "b2", "b3", "c1", "c2"]
parts = [["a"], ["b1", "b2", "b3"], ["c1", "c2"]]
E = []
for i in range(3):
    for j in range(i + 1, 3):
        for u in parts[i]:
            for v in parts[j]:
                E.append(tuple(sorted((u, v))))

def cross(p, q, r, s):
    def orient(a, b, c):
        return (b[0]-a[0])*(c[1]-a[1]) - (b[1]-a[1])*(c[0]-a[0])
    d1, d2 = orient(r, s, p), orient(r, s, q)
    d3, d4 = orient(p, q, r), orient(p, q, s)
    if d1*d2 < 0 and d3*d4 < 0:
        t = d1 / (d1 - d2)
        return t
    return None

def crossings(pos):
    out = []
    for e, f in itertools.combinations(E, 2):
        if set(e) & set(f):
            continue
        t = cross(pos[e[0]], pos[e[1]], pos[f[0]], pos[f[1]])
        if t is not None:
            tf = cross(pos[f[0]], pos[f[1]], pos[e[0]], pos[e[1]])
            out.append((e, f, t, tf))
    return out

def side(pos, a, b):
    # side from which b (directed b0->b1) crosses a (directed a0->a1):
    # +1 if b starts on the left of a and ends on the right.
    ax, ay = pos[a[1]][0]-pos[a[0]][0], pos[a[1]][1]-pos[a[0]][1]
    bx, by = pos[b[0]][0]-pos[a[0]][0], pos[b[0]][1]-pos[a[0]][1]
    return 1 if ax*by - ay*bx > 0 else -1

def fan_ok(pos, cr):
    by_edge = {e: [] for e in E}
    for e, f, te, tf in cr:
        by_edge[e].append(f)
        by_edge[f].append(e)
    for e, fs in by_edge.items():
        if len(fs) < 2:
            continue
        common = set(fs[0])
        for f in fs[1:]:
            common &= set(f)
        if len(common) != 1:
            return False
        w = next(iter(common))
        sides = set()
        for f in fs:
            s = side(pos, e, f)
            if f[0] != w:
                s = -s
            sides.add(s)
        if len(sides) != 1:
            return False
    return True

PINNED = {"a": (39, 41), "b1": (10, 39), "b2": (0, 53), "b3": (33, 4), "c1": (3, 2), "c2": (12, 56)}

if "--search" in sys.argv:
    random.seed(7)
    best = None
    for _ in range(200000):
        pos = {v: (random.randint(0, 40), random.randint(0, 40)) for v in V}
        if len(set(pos.values())) < len(V):
            continue
        cr = crossings(pos)
        if cr and fan_ok(pos, cr) and (best is None or len(cr) > len(best[1])):
            best = (pos, cr)
    pos, cr = best
else:
    pos = PINNED
    cr = crossings(pos)
    assert fan_ok(pos, cr)
recs = []
for e, f, te, tf in cr:
    recs.append({"a": list(e), "b": list(f), "ta": te, "tb": tf, "side": side(pos, e, f)})
# positions per edge as ranks of t
ranks = {}
for e in E:
    ts = sorted([r["ta"] for r in recs if tuple(r["a"]) == e] + [r["tb"] for r in recs if tuple(r["b"]) == e])
    ranks[e] = ts
for r in recs:
    r["posA"] = ranks[tuple(r["a"])].index(r["ta"])
    r["posB"] = ranks[tuple(r["b"])].index(r["tb"])
    del r["ta"], r["tb"]
graph = {"vertices": V, "edges": sorted(list(e) for e in E)}
print(json.dumps({"graph": graph, "crossings": recs}, indent=2))
