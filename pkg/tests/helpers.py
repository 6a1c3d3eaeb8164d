"""Strategies and slow, obviously-correct oracles shared by the tests."""

from fractions import Fraction
from itertools import permutations
import random

from hypothesis import strategies as st

from nakayama import KupischSeries, Matrix
from nakayama.core import enumerate_cyclic

# acceptance criterion number -> its PASS/FAIL line, printed again in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def random_unimodular(rng: random.Random, n: int, steps: int | None = None, spread: int = 2) -> Matrix:
    """Signed permutation matrix scrambled by random integer row operations."""
    perm = list(range(n))
    rng.shuffle(perm)
    a = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        a[i][j] = rng.choice((1, -1))
    for _ in range(steps if steps is not None else 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-spread, spread)
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
    return Matrix(a)


@st.composite
def unimodular_matrices(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_unimodular(random.Random(seed), n)


@st.composite
def permutation_times_upper(draw, max_n=6):
    """A random P · U with U upper triangular and invertible over the rationals."""
    n = draw(st.integers(1, max_n))
    images = draw(st.permutations(range(1, n + 1)))
    u = [[0] * n for _ in range(n)]
    for i in range(n):
        u[i][i] = draw(st.sampled_from((1, -1, 2, -3)))
        for j in range(i + 1, n):
            u[i][j] = draw(st.integers(-3, 3))
    rows = [u[images[i] - 1] for i in range(n)]
    return Matrix(rows), tuple(images)


def frac_rank(rows) -> int:
    """Rank by textbook Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a or not a[0]:
        return 0
    r = 0
    for c in range(len(a[0])):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def southwest_rank(m: Matrix, i: int, j: int) -> int:
    """Rank of rows i..n and columns 1..j (1-based); zero when empty."""
    n = m.nrows
    if i > n or j < 1:
        return 0
    return frac_rank([row[:j] for row in m.rows[i - 1 :]])


def bruhat_p_from_ranks(m: Matrix) -> Matrix:
    """The permutation matrix forced by southwest ranks, which upper triangular factors preserve."""
    n = m.nrows
    r = {(i, j): southwest_rank(m, i, j) for i in range(1, n + 2) for j in range(0, n + 1)}
    return Matrix(
        [
            [r[i, j] - r[i + 1, j] - r[i, j - 1] + r[i + 1, j - 1] for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def leibniz_det(m: Matrix):
    n = m.nrows
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        term = Fraction(sign)
        for i, j in enumerate(perm):
            term *= m.rows[i][j]
        total += term
    return total


def brute_permutation_times_upper(m: Matrix) -> bool:
    """Some row reordering of m is upper triangular with nonzero diagonal."""
    n = m.nrows
    for perm in permutations(range(n)):
        rows = [m.rows[k] for k in perm]
        if all(rows[i][i] != 0 for i in range(n)) and all(rows[i][j] == 0 for i in range(n) for j in range(i)):
            return True
    return False


def is_upper(rows) -> bool:
    return all(rows[i][j] == 0 for i in range(len(rows)) for j in range(i))


@st.composite
def linear_kupisch(draw, max_n=8):
    """Random admissible linear series, built from the last vertex backwards."""
    n = draw(st.integers(1, max_n))
    c = [1]
    for i in range(n - 1, 0, -1):
        # c_i ≤ c_{i+1} + 1, c_i ≥ 2 when i < n
        c.append(draw(st.integers(2, c[-1] + 1)))
    return KupischSeries("linear", tuple(reversed(c)))


def cyclic_kupisch(max_n=5, max_c=5):
    family = [k for n in range(1, max_n + 1) for k in enumerate_cyclic(n, max_c)]
    return st.sampled_from(family)


def crossing_presentation(rng: random.Random, strands: int = 3, max_len: int = 4, crossings: int = 2):
    """Strands of arrows glued at degree-four vertices carrying the crossing relations.

    Returns None when the gluing makes a directed cycle or a disconnected quiver.
    """
    from nakayama.errors import ValidationError
    from nakayama.monomial import Arrow, MonomialPresentation

    lines = []
    count = 0
    for _ in range(strands):
        length = rng.randint(2, max_len)
        lines.append(list(range(count, count + length)))
        count += length
    alias = list(range(count))

    def root(v):
        while alias[v] != v:
            v = alias[v]
        return v

    merged = set()
    for _ in range(crossings):
        if strands < 2:
            break
        s, t = rng.sample(range(strands), 2)
        # interior vertices only, so both strands pass straight through
        cands_s = [v for v in lines[s][1:-1] if v not in merged]
        cands_t = [v for v in lines[t][1:-1] if v not in merged]
        if not cands_s or not cands_t:
            continue
        u, v = rng.choice(cands_s), rng.choice(cands_t)
        if root(u) == root(v):
            continue
        alias[root(v)] = root(u)
        merged |= {u, v}
    edges = []
    for line in lines:
        for x, y in zip(line, line[1:]):
            edges.append((x, y))
    # relabel in a topological order of the glued quiver
    nodes = sorted({root(v) for v in range(count)})
    succ = {v: set() for v in nodes}
    indeg = {v: 0 for v in nodes}
    for x, y in edges:
        rx, ry = root(x), root(y)
        if ry not in succ[rx]:
            succ[rx].add(ry)
            indeg[ry] += 1
    order, ready = [], sorted(v for v in nodes if indeg[v] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in sorted(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != len(nodes):
        return None
    label = {v: k + 1 for k, v in enumerate(order)}
    arrows, by_line = [], []
    for s, line in enumerate(lines):
        names = []
        for k, (x, y) in enumerate(zip(line, line[1:])):
            name = f"s{s}_{k}"
            arrows.append(Arrow(name, label[root(x)], label[root(y)]))
            names.append(name)
        by_line.append(names)
    relations = []
    into, outof = {}, {}
    for names in by_line:
        for a in names:
            arr = next(x for x in arrows if x.name == a)
            into.setdefault(arr.target, []).append(a)
            outof.setdefault(arr.source, []).append(a)
    straight = set()
    for names in by_line:
        for a, b in zip(names, names[1:]):
            straight.add((a, b))
    for v, ins in into.items():
        outs = outof.get(v, [])
        if len(ins) == 2 and len(outs) == 2:
            for a in ins:
                for b in outs:
                    if (a, b) not in straight:
                        relations.append((a, b))
    # extra relations inside strand segments that avoid crossing vertices
    crossing_vertices = {v for v, ins in into.items() if len(ins) == 2}
    for names in by_line:
        if len(names) < 2:
            continue
        if rng.random() < 0.3:
            # every piece of one length, as in a Nakayama algebra with constant Kupisch series
            width = rng.randint(2, 3)
            pieces = [tuple(names[i : i + width]) for i in range(len(names) - width + 1)]
        else:
            pieces = []
            for _ in range(rng.randint(0, 2)):
                i = rng.randrange(len(names) - 1)
                j = rng.randint(i + 2, min(len(names), i + 4))
                pieces.append(tuple(names[i:j]))
        for piece in pieces:
            inner = [next(x for x in arrows if x.name == a).target for a in piece[:-1]]
            if not any(v in crossing_vertices for v in inner):
                relations.append(piece)
    relations = list(dict.fromkeys(relations))
    relations = [
        r for r in relations
        if not any(s != r and any(r[i:i + len(s)] == s for i in range(len(r) - len(s) + 1)) for s in relations)
    ]
    try:
        return MonomialPresentation(len(nodes), tuple(arrows), tuple(relations))
    except ValidationError:
        return None
