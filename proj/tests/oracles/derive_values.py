"""Independent brute-force derivations of the constants frozen in the C++ tests.

Nothing here shares code with the library: semigroups are dicts, the line
arrangement is built from floating-point geometry, and every count comes from
plain exhaustive enumeration. Run with python3; prints one line per value.
"""
import itertools
import math


def table(names, rows):
    idx = {n: i for i, n in enumerate(names)}
    return names, [[idx[x] for x in r.split()] for r in rows]


L = table(["0", "+", "-"], ["0 + -", "+ + +", "- - -"])
ZL = table(["0", "+", "-", "z"], ["0 + - z", "+ + + z", "- - - z", "z z z z"])
TRIV = (["e"], [[0]])
LZ2 = table(["a", "b"], ["a a", "b b"])


def homs(T, S):
    tn, tt = T
    sn, st = S
    out = []
    for img in itertools.product(range(len(sn)), repeat=len(tn)):
        if all(img[tt[x][y]] == st[img[x]][img[y]]
               for x in range(len(tn)) for y in range(len(tn))):
            out.append(img)
    return out


def separable(T, S):
    hs = homs(T, S)
    n = len(T[0])
    for x in range(n):
        for y in range(x + 1, n):
            if not any(h[x] != h[y] for h in hs):
                return (x, y)
    return None


def assoc_failures(names, t):
    n = len(names)
    return [(names[x], names[y], names[z])
            for x in range(n) for y in range(n) for z in range(n)
            if t[t[x][y]][z] != t[x][t[y][z]]]


def closed(t, X):
    return all(t[x][y] in X for x in X for y in X)


def count_subsemigroups(S):
    names, t = S
    n = len(names)
    c = 0
    for mask in range(1, 1 << n):
        X = {i for i in range(n) if mask >> i & 1}
        if closed(t, X):
            c += 1
    return c


def line_faces(n):
    """F_n from geometry: lines at angle k*pi/n, sign by cross product."""
    lines = [k * math.pi / n for k in range(n)]

    def sv(theta):
        out = []
        for a in lines:
            v = math.sin(theta - a)
            out.append(0 if abs(v) < 1e-9 else (1 if v > 0 else -1))
        return tuple(out)
    faces = {"O": (0,) * n}
    for j in range(1, 2 * n + 1):
        faces["r_%d" % j] = sv((j - 1) * math.pi / n)
        faces["C_%d" % j] = sv((j - 0.5) * math.pi / n)
    return faces


def face_semigroup(faces):
    names = list(faces)
    vec = [faces[k] for k in names]
    inv = {v: i for i, v in enumerate(vec)}
    t = [[inv[tuple(a if a != 0 else b for a, b in zip(vec[x], vec[y]))]
          for y in range(len(names))] for x in range(len(names))]
    return names, t


def restrict(S, keep):
    names, t = S
    ks = [i for i, nm in enumerate(names) if nm in keep]
    pos = {k: i for i, k in enumerate(ks)}
    return [names[k] for k in ks], [[pos[t[a][b]] for b in ks] for a in ks]


def quotient_merge(S, a, b, newname):
    names, t = S
    ia, ib = names.index(a), names.index(b)
    rep = [i for i in range(len(names)) if i != ib]
    pos = {k: i for i, k in enumerate(rep)}
    pos[ib] = pos[ia]
    nn = [newname if i == ia else names[i] for i in rep]
    return nn, [[pos[t[x][y]] for y in rep] for x in rep]


def components(S, subset):
    names, t = S
    parent = {x: x for x in subset}

    def f(x):
        while parent[x] != x:
            x = parent[x]
        return x
    for x in subset:
        for y in subset:
            if t[y][x] == x:  # x <= y
                parent[f(x)] = f(y)
    return len({f(x) for x in subset})


def free_lrb_order(k):
    return sum(math.factorial(k) // math.factorial(k - m) for m in range(1, k + 1))


def b_n(n):
    F = face_semigroup(line_faces(n))
    Fp = restrict(F, set(F[0]) - {"O", "r_1", "r_%d" % (n + 1)})
    return F, Fp, quotient_merge(Fp, "C_%d" % n, "C_%d" % (n + 1), "C")


if __name__ == "__main__":
    bad = table(["a", "b"], ["b b", "a a"])
    print("assoc failures for [[b,b],[a,a]]:", assoc_failures(*bad))
    grp = table(["a", "b"], ["b a", "a b"])
    print("assoc failures for the Z2 table:", assoc_failures(*grp))
    print("homs trivial->L:", len(homs(TRIV, L)))
    print("homs L->L:", len(homs(L, L)), homs(L, L))
    print("homs LZ2->L:", len(homs(LZ2, L)), homs(LZ2, L))
    print("homs L->ZL:", len(homs(L, ZL)))
    print("homs ZL->L:", len(homs(ZL, L)), "inseparable:", separable(ZL, L))
    print("subsemigroups of L:", count_subsemigroups(L))
    for n in (3, 4):
        F, Fp, B = b_n(n)
        print("n=%d |F|=%d |F'|=%d |B|=%d" % (n, len(F[0]), len(Fp[0]), len(B[0])))
        print("  subsemigroups of B_%d:" % n, count_subsemigroups(B),
              "proper:", count_subsemigroups(B) - 1)
    F3, Fp3, B3 = b_n(3)
    print("components of F_3':", components(Fp3, range(len(Fp3[0]))))
    print("components of F_3:", components(F3, range(len(F3[0]))))
    print("homs F_2->L:", len(homs(face_semigroup(line_faces(2)), L)))
    for k in range(1, 6):
        print("free lrb order", k, free_lrb_order(k))
    print("B_3 vs ZL inseparable:", separable(B3, ZL) and
          tuple(B3[0][i] for i in separable(B3, ZL)))
