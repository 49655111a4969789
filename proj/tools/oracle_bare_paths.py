#!/usr/bin/env python3
"""Independent oracle for bare-path slicing counts.

Recomputes, straight from the procedure's description, how many disjoint
length-L bare paths a guest tree yields: drop every edge touching a vertex of
degree != 2, keep components with at least 50 vertices, cut consecutive
(L+1)-vertex windows from each.
"""

def bare_path_count(n_vertices, edges, length):
    deg = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    kept = [(u, v) for u, v in edges if deg.get(u) == 2 and deg.get(v) == 2]
    adj = {}
    for u, v in kept:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen, total = set(), 0
    for start in sorted(adj):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        if len(comp) >= 50:
            total += len(comp) // (length + 1)
    return total


def path_graph(n):
    return n, [(i, i + 1) for i in range(n - 1)]


if __name__ == "__main__":
    n, e = path_graph(100)
    print("100-vertex path, length 11:", bare_path_count(n, e, 11))
    n, e = path_graph(12)
    print("12-vertex path, length 11:", bare_path_count(n, e, 11))
    n, e = path_graph(311)
    print("311-vertex path, length 11:", bare_path_count(n, e, 11))
    # spider: three legs of 40 vertices off a hub -> legs have 39 degree-2
    # vertices each, all components below 50 -> 0
    edges = []
    nxt = 1
    for _ in range(3):
        prev = 0
        for _ in range(40):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    print("3x40 spider, length 11:", bare_path_count(nxt, edges, 11))
    # caterpillar: 200-path with a pendant leaf at vertex 100 splits the bare
    # interior into two components of sizes 98 and 97
    n, e = path_graph(200)
    e.append((100, 200))
    print("200-path + pendant at 100, length 11:", bare_path_count(201, e, 11))
