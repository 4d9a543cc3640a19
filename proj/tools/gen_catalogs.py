#!/usr/bin/env python3
# Copyright 2026 The kdensity Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the group generator files and catalog manifests in data/catalogs."""

import argparse
import itertools
import json
import pathlib

EKR_SOURCE = "alternating and symmetric groups on k-sets have the EKR property"


class Field:
    """GF(p^k) with elements encoded as integers sum c_i p^i."""

    def __init__(self, p, k, modulus):
        self.p, self.k, self.q = p, k, p ** k
        self.modulus = modulus  # low-first, monic, length k + 1

    def digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def code(self, ds):
        return sum(c * self.p ** i for i, c in enumerate(ds))

    def add(self, a, b):
        return self.code([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a, b):
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % self.p
        for d in range(len(prod) - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for i in range(self.k + 1):
                    prod[d - self.k + i] = (prod[d - self.k + i] - c * self.modulus[i]) % self.p
        return self.code(prod[: self.k])

    def neg(self, a):
        return self.code([(-x) % self.p for x in self.digits(a)])

    def inv(self, a):
        return next(b for b in range(1, self.q) if self.mul(a, b) == 1)

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def primitive(self):
        for g in range(2, self.q):
            x, order = g, 1
            while x != 1:
                x, order = self.mul(x, g), order + 1
            if order == self.q - 1:
                return g
        raise ValueError("no primitive element")


GF8 = Field(2, 3, [1, 1, 0, 1])  # x^3 + x + 1
GF9 = Field(3, 2, [1, 0, 1])  # x^2 + 1


def affine_group(f, with_frobenius):
    n = f.q
    g = f.primitive()
    gens = [[f.add(x, 1) for x in range(n)], [f.mul(g, x) for x in range(n)]]
    if with_frobenius:
        gens.append([f.pow(x, f.p) for x in range(n)])
    return gens


def projective_group(f, with_frobenius):
    # Point i < q is (1, i); point q is (0, 1).
    q = f.q

    def index(u1, u2):
        if u1 != 0:
            return f.mul(u2, f.inv(u1))
        return q

    def matrix(a, b, c, d):
        img = []
        for i in range(q + 1):
            u1, u2 = (1, i) if i < q else (0, 1)
            v1 = f.add(f.mul(a, u1), f.mul(b, u2))
            v2 = f.add(f.mul(c, u1), f.mul(d, u2))
            img.append(index(v1, v2))
        return img

    g = f.primitive()
    gens = [matrix(1, 1, 0, 1), matrix(g, 0, 0, 1), matrix(0, 1, 1, 0)]
    if f.k > 1:
        gens.append(matrix(1, f.code([0, 1] + [0] * (f.k - 2)), 0, 1))
    if with_frobenius:
        gens.append([f.pow(i, f.p) if i < q else q for i in range(q + 1)])
    return gens


def agl32():
    points = list(itertools.product([0, 1], repeat=3))
    idx = {p: i for i, p in enumerate(points)}

    def linear(m):
        return [idx[tuple(sum(m[r][c] * p[c] for c in range(3)) % 2 for r in range(3))] for p in points]

    shift = [idx[((p[0] + 1) % 2, p[1], p[2])] for p in points]
    cyc = linear([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    trans = linear([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    return [shift, cyc, trans]


def alternating(n):
    gens = [[1, 2, 0] + list(range(3, n))]
    if n % 2 == 1:
        gens.append([(i + 1) % n for i in range(n)])
    else:
        gens.append([0] + [1 + (i % (n - 1)) for i in range(1, n)])
    return gens


def symmetric(n):
    return [[1, 0] + list(range(2, n)), [(i + 1) % n for i in range(n)]]


def group_file(name, degree, gens, known=None):
    out = {"name": name, "degree": degree, "base": 0, "generators": gens}
    if known:
        out["annotations"] = {"known_density": known, "source": EKR_SOURCE}
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "catalogs"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    files = {
        "agl_1_8.json": group_file("AGL(1,8)", 8, affine_group(GF8, False)),
        "agaml_1_8.json": group_file("AGammaL(1,8)", 8, affine_group(GF8, True)),
        "agl_3_2.json": group_file("AGL(3,2)", 8, agl32()),
        "pgaml_2_8.json": group_file("PGammaL(2,8)", 9, projective_group(GF8, True)),
        "pgaml_2_9.json": group_file("PGammaL(2,9)", 10, projective_group(GF9, True)),
    }
    for n in range(7, 11):
        known = "1/1" if n >= 8 else None  # degree 7 is computed
        files[f"alt_{n}.json"] = group_file(f"Alt({n})", n, alternating(n), known)
        files[f"sym_{n}.json"] = group_file(f"Sym({n})", n, symmetric(n), known)

    catalogs = {
        "k7_3.json": ("K(7,3)", 7, [{"file": "alt_7.json"}, {"file": "sym_7.json"}]),
        "k8_3.json": ("K(8,3)", 8, [
            {"file": "agl_1_8.json"}, {"file": "agaml_1_8.json"}, {"file": "agl_3_2.json"},
            {"builtin": "psl2", "q": 7}, {"builtin": "pgl2", "q": 7},
            {"file": "alt_8.json"}, {"file": "sym_8.json"}]),
        "k9_3.json": ("K(9,3)", 9, [
            {"builtin": "pgl2", "q": 8}, {"file": "pgaml_2_8.json"},
            {"file": "alt_9.json"}, {"file": "sym_9.json"}]),
        "k10_3.json": ("K(10,3)", 10, [
            {"builtin": "pgl2", "q": 9}, {"builtin": "psl-sigma", "q": 9}, {"file": "pgaml_2_9.json"},
            {"file": "alt_10.json"}, {"file": "sym_10.json"}]),
    }
    for name, content in files.items():
        (out / name).write_text(json.dumps(content) + "\n")
    for name, (title, n, groups) in catalogs.items():
        (out / name).write_text(json.dumps({"name": title, "n": n, "k": 3, "groups": groups}, indent=2) + "\n")


if __name__ == "__main__":
    main()
