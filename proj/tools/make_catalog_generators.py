#!/usr/bin/env python3
"""Regenerate src/catalog_data.cpp (usage: make_catalog_generators.py > src/catalog_data.cpp).

Groups over non-prime fields are built here from finite-field arithmetic once,
then shipped as cycle notation so the C++ library needs no GF(p^k) code.
Each group's order is checked with sympy before anything is printed.
"""
import itertools
import re
import sys

from sympy.combinatorics import Permutation, PermutationGroup


class Field:
    """GF(p^k) as integer codes 0..q-1 (base-p digits of the polynomial)."""

    def __init__(self, p, k, modulus):
        self.p, self.k, self.q = p, k, p ** k
        self.modulus = modulus  # coefficients of x^k = -(sum modulus[i] x^i)
        self._mul = [[self._slow_mul(a, b) for b in range(self.q)] for a in range(self.q)]
        self.prim = next(g for g in range(2, self.q) if self._order(g) == self.q - 1) if self.q > 2 else 1

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def code(self, ds):
        return sum((d % self.p) * self.p ** i for i, d in enumerate(ds))

    def add(self, a, b):
        return self.code([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.code([-x for x in self.digits(a)])

    def _slow_mul(self, a, b):
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        for deg in range(2 * self.k - 1, self.k - 1, -1):
            c = prod[deg] % self.p
            prod[deg] = 0
            for i, m in enumerate(self.modulus):
                prod[deg - self.k + i] -= c * m
        return self.code(prod[: self.k])

    def mul(self, a, b):
        return self._mul[a][b]

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        return next(b for b in range(1, self.q) if self.mul(a, b) == 1)

    def _order(self, a):
        x, n = a, 1
        while x != 1:
            x, n = self.mul(x, a), n + 1
        return n


def projective_line(F):
    """Points 0..q-1 are field elements, q is infinity."""
    inf = F.q

    def mobius(a, b, c, d, frob=1):
        # x -> (a x^frob + b) / (c x^frob + d)
        img = []
        for x in range(F.q + 1):
            if x == inf:
                num, den = a, c
            else:
                y = F.pow(x, frob) if x else 0
                num, den = F.add(F.mul(a, y), b), F.add(F.mul(c, y), d)
            img.append(inf if den == 0 else F.mul(num, F.inv(den)))
        return img

    return mobius


def projective_plane_points(F):
    pts = []
    for v in itertools.product(range(F.q), repeat=3):
        if any(v):
            lead = next(x for x in v if x)
            if lead == 1:
                pts.append(v)
    return pts


def normalise(F, v):
    lead = next(x for x in v if x)
    il = F.inv(lead)
    return tuple(F.mul(il, x) for x in v)


def matrix_action(F, pts, m, frob=1):
    index = {p: i for i, p in enumerate(pts)}
    n = len(pts[0])
    img = []
    for p in pts:
        p = tuple(F.pow(x, frob) if x else 0 for x in p)
        w = [0] * n
        for j in range(n):
            s = 0
            for i in range(n):
                s = F.add(s, F.mul(p[i], m[i][j]))
            w[j] = s
        img.append(index[normalise(F, w)])
    return img


def to_cycles(img):
    seen, out = set(), []
    for i in range(len(img)):
        if i in seen or img[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = img[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def check(name, degree, gens, order):
    g = PermutationGroup([Permutation(x) for x in gens])
    got = g.order()
    if got != order:
        sys.exit(f"{name}: order {got}, expected {order}")
    return g


GROUPS = []


def emit(name, degree, gens, order):
    check(name, degree, gens, order)
    GROUPS.append((name, degree, order, [to_cycles(x) for x in gens]))


def cpp_string_lines(cycles, width=80):
    parts, cur = [], ""
    for piece in re.findall(r"\([^)]*\)", cycles) or ["()"]:
        if cur and len(cur) + len(piece) > width:
            parts.append(cur)
            cur = ""
        cur += piece
    parts.append(cur)
    return "\n         ".join(f'"{p}"' for p in parts)


def write_cpp(out):
    out.write('#include "catalog_data.hpp"\n\nnamespace commgraph::detail\n{\n\n')
    out.write("// Generated by tools/make_catalog_generators.py; do not edit by hand.\n")
    out.write("std::vector<FixedGroupData> const &fixed_group_data()\n{\n")
    out.write("  static std::vector<FixedGroupData> const data{\n")
    for name, degree, order, gens in GROUPS:
        out.write(f'    {{"{name}", {degree}, {order},\n     {{\n')
        for g in gens:
            out.write(f"         {cpp_string_lines(g)},\n")
        out.write("     }},\n")
    out.write("  };\n  return data;\n}\n\n} // namespace commgraph::detail\n")


def psl2_family_9():
    F = Field(3, 2, [1, 0])  # x^2 = -1
    mob = projective_line(F)
    w = F.prim
    t = mob(1, 1, 0, 1)
    s = mob(0, F.neg(1), 1, 0)
    sq = mob(F.mul(w, w), 0, 0, 1)
    diag = mob(w, 0, 0, 1)
    frob = mob(1, 0, 0, 1, frob=3)
    m10 = mob(w, 0, 0, 1, frob=3)
    return {
        "psl2(9)": ([t, sq, s], 360),
        "pgl2(9)": ([t, diag, s], 720),
        "m10": ([t, sq, s, m10], 720),
        "psigmal2(9)": ([t, sq, s, frob], 720),
        "aut(alt(6))": ([t, diag, s, frob], 1440),
    }


def psl2_8():
    F = Field(2, 3, [1, 1, 0])  # x^3 = x + 1
    mob = projective_line(F)
    return [mob(1, 1, 0, 1), mob(F.prim, 0, 0, 1), mob(0, 1, 1, 0)]


def psl3_4():
    F = Field(2, 2, [1, 1])  # x^2 = x + 1
    pts = projective_plane_points(F)
    e12 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    cyc = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    diag_sl = [[F.prim, 0, 0], [0, F.inv(F.prim), 0], [0, 0, 1]]
    diag_gl = [[F.prim, 0, 0], [0, 1, 0], [0, 0, 1]]
    gens_sl = [matrix_action(F, pts, m) for m in (e12, cyc, diag_sl)]
    gens_gl = gens_sl + [matrix_action(F, pts, diag_gl)]
    return gens_sl, gens_gl


def suzuki_8():
    F = Field(2, 3, [1, 1, 0])
    theta = 4  # x -> x^4, theta^2 acts as squaring on GF(8)

    def f(x, y):
        return F.add(F.add(F.mul(x, y), F.pow(x, theta + 2)), F.pow(y, theta))

    ovoid = [(0, 0, 0, 1)] + [(1, x, y, f(x, y)) for x in range(8) for y in range(8)]
    index = {p: i for i, p in enumerate(ovoid)}

    def act(m, frob=1):
        img = []
        for p in ovoid:
            p = tuple(F.pow(x, frob) if x else 0 for x in p)
            w = [0] * 4
            for j in range(4):
                s = 0
                for i in range(4):
                    s = F.add(s, F.mul(p[i], m[i][j]))
                w[j] = s
            key = normalise(F, w)
            if key not in index:
                return None
            img.append(index[key])
        return img

    def translation(a, b):
        # (1, x, y, z) -> (1, x + a, y + b + a^theta x, z + (b + a^(theta+1)) x + a y + f(a, b))
        at = F.pow(a, theta)
        return [
            [1, a, b, f(a, b)],
            [0, 1, at, F.add(b, F.pow(a, theta + 1))],
            [0, 0, 1, a],
            [0, 0, 0, 1],
        ]

    def torus(k):
        return [[1, 0, 0, 0], [0, k, 0, 0], [0, 0, F.pow(k, theta + 1), 0], [0, 0, 0, F.pow(k, theta + 2)]]

    gens = [act(translation(1, 0)), act(translation(0, 1)), act(torus(F.prim))]
    assert all(g is not None for g in gens)
    # an anti-diagonal map swaps the two fixed points of the torus
    for entries in itertools.product(range(1, 8), repeat=4):
        m = [[0] * 4 for _ in range(4)]
        for i in range(4):
            m[i][3 - i] = entries[i]
        w = act(m)
        if w is not None:
            break
    else:
        sys.exit("no anti-diagonal ovoid automorphism found")
    frob = act([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], frob=2)
    return gens + [w], gens + [w, frob]


if __name__ == "__main__":
    for name, (gens, order) in psl2_family_9().items():
        emit(name, 10, gens, order)
    emit("psl2(8)", 9, psl2_8(), 504)
    sl, gl = psl3_4()
    emit("psl3(4)", 21, sl, 20160)
    emit("pgl3(4)", 21, gl, 60480)
    sz, sz3 = suzuki_8()
    emit("sz(8)", 65, sz, 29120)
    emit("sz(8):3", 65, sz3, 87360)
    emit("m11", 11, [Permutation([[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]], size=11).array_form,
                     Permutation([[2, 6, 10, 7], [3, 9, 4, 5]], size=11).array_form], 7920)
    emit("m12", 12, [Permutation([[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]], size=12).array_form,
                     Permutation([[2, 6, 10, 7], [3, 9, 4, 5]], size=12).array_form,
                     Permutation([[0, 11], [1, 10], [2, 5], [3, 7], [4, 8], [6, 9]], size=12).array_form], 95040)
    write_cpp(sys.stdout)
