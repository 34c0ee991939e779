"""Brute-force reference computations on raw input documents.

These read corpus JSON directly (no library parsing) and compute the
structural dimensions by writing down the defining linear systems in
full, on top of the independent elimination in oracle_linalg.  The
numbers frozen into the tests came from here.
"""

import json
import os
from fractions import Fraction

from tests.oracle_linalg import FracOps, ModOps, nullspace, rank, rref

CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus")


def load_doc(name: str) -> dict:
    with open(os.path.join(CORPUS, f"{name}.json"), encoding="utf-8") as fh:
        return json.load(fh)


class RawAlgebra:
    """Structure constants straight from an input document."""

    def __init__(self, doc: dict):
        fld = doc["field"]
        self.ops = FracOps() if fld == "Q" else ModOps(fld["Fp"])
        alg = doc["algebra"]
        if "group" in alg:
            g = alg["group"]
            n = g["order"]
            cay = g["cayley"]
            self.dim = n
            self.mult = [[[self.ops.one if cay[i][j] == k else self.ops.zero
                           for k in range(n)]
                          for j in range(n)] for i in range(n)]
            self.unit = [self.ops.one if k == 0 else self.ops.zero
                         for k in range(n)]
        else:
            n = alg["dim"]
            self.dim = n
            self.mult = [[[self._scalar(c) for c in vec] for vec in row]
                         for row in alg["mult"]]
            self.unit = [self._scalar(c) for c in alg["unit"]]
        sub = doc.get("subalgebra")
        if sub is None:
            self.base = [self._unit_vec(i) for i in range(self.dim)]
        elif "subgroup" in sub:
            self.base = [self._unit_vec(i) for i in sub["subgroup"]]
        else:
            self.base = [[self._scalar(c) for c in v] for v in sub["basis"]]

    def _scalar(self, c):
        if isinstance(self.ops, ModOps):
            return self.ops.of(c)
        return Fraction(c) if isinstance(c, str) else Fraction(c)

    def _unit_vec(self, i):
        v = [self.ops.zero] * self.dim
        v[i] = self.ops.one
        return v

    def product(self, x, y):
        n = self.dim
        out = [self.ops.zero] * n
        for i in range(n):
            if x[i] == self.ops.zero:
                continue
            for j in range(n):
                if y[j] == self.ops.zero:
                    continue
                c = x[i] * y[j]
                if isinstance(self.ops, ModOps):
                    c %= self.ops.p
                for k in range(n):
                    v = out[k] + c * self.mult[i][j][k]
                    out[k] = v % self.ops.p if isinstance(self.ops, ModOps) else v
        return out

    def left_mult(self, x):
        """Matrix of y -> x y, columns indexed by basis."""
        cols = [self.product(x, self._unit_vec(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def right_mult(self, x):
        cols = [self.product(self._unit_vec(j), x) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]


def _mat_vec(ops, mat, v):
    out = []
    for row in mat:
        s = ops.zero
        for a, b in zip(row, v):
            s = s + a * b
            if isinstance(ops, ModOps):
                s %= ops.p
        out.append(s)
    return out


def centralizer_dim(a: RawAlgebra) -> int:
    """Solutions of b x = x b for every base element b."""
    rows = []
    for b in a.base:
        lm, rm = a.left_mult(b), a.right_mult(b)
        for i in range(a.dim):
            rows.append([lm[i][j] - rm[i][j] for j in range(a.dim)])
    if isinstance(a.ops, ModOps):
        rows = [[x % a.ops.p for x in r] for r in rows]
    return len(nullspace(a.ops, rows, a.dim))


def tensor_square_data(a: RawAlgebra):
    """Relation span of x b (x) y - x (x) b y inside the n^2 ambient,
    plus the projection data needed to act on the quotient."""
    n = a.dim
    rows = []
    for b in a.base:
        xb = [a.product(a._unit_vec(i), b) for i in range(n)]
        by = [a.product(b, a._unit_vec(j)) for j in range(n)]
        for i in range(n):
            for j in range(n):
                vec = [a.ops.zero] * (n * n)
                for k in range(n):
                    vec[k * n + j] = vec[k * n + j] + xb[i][k]
                for k in range(n):
                    val = vec[i * n + k] - by[j][k]
                    vec[i * n + k] = val
                if isinstance(a.ops, ModOps):
                    vec = [x % a.ops.p for x in vec]
                rows.append(vec)
    red, pivots = rref(a.ops, rows)
    return red, pivots


def tensor_square_dim(a: RawAlgebra) -> int:
    red, pivots = tensor_square_data(a)
    return a.dim * a.dim - len(pivots)


def endo_ring_dim(a: RawAlgebra) -> int:
    """Linear endomorphisms of the algebra commuting with both base
    actions: phi(b x) = b phi(x) and phi(x b) = phi(x) b.  Unknown is
    the n x n matrix of phi, flattened row-major."""
    n = a.dim
    rows = []
    for b in a.base:
        lm, rm = a.left_mult(b), a.right_mult(b)
        for act in (lm, rm):
            # phi act - act phi = 0, entry (i, j)
            for i in range(n):
                for j in range(n):
                    vec = [a.ops.zero] * (n * n)
                    for k in range(n):
                        vec[i * n + k] = vec[i * n + k] + act[k][j]
                        vec[k * n + j] = vec[k * n + j] - act[i][k]
                    if isinstance(a.ops, ModOps):
                        vec = [x % a.ops.p for x in vec]
                    rows.append(vec)
    return len(nullspace(a.ops, rows, n * n))


def _quotient_maps(a: RawAlgebra):
    """Section and projection for the tensor-square quotient, derived
    from the relation RREF exactly as a textbook would: free columns
    index the quotient basis."""
    n = a.dim
    red, pivots = tensor_square_data(a)
    free = [c for c in range(n * n) if c not in pivots]

    def project(vec):
        v = list(vec)
        for row, pc in zip(red, pivots):
            c = v[pc]
            if c != a.ops.zero:
                v = [x - c * y for x, y in zip(v, row)]
                if isinstance(a.ops, ModOps):
                    v = [x % a.ops.p for x in v]
        return [v[c] for c in free]

    return free, project


def invariant_tensor_ring_dim(a: RawAlgebra) -> int:
    """Base-central elements of the tensor square."""
    return _tensor_invariants_dim(a, a.base)


def casimir_dim(a: RawAlgebra) -> int:
    """Fully central elements of the tensor square."""
    return _tensor_invariants_dim(a, [a._unit_vec(i) for i in range(a.dim)])


def _tensor_invariants_dim(a: RawAlgebra, elements) -> int:
    n = a.dim
    free, project = _quotient_maps(a)
    dim_q = len(free)
    rows = []
    for b in elements:
        lm = a.left_mult(b)
        rm = a.right_mult(b)
        cols = []
        for c in free:
            i, j = divmod(c, n)
            amb = [a.ops.zero] * (n * n)
            # b . (e_i (x) e_j) - (e_i (x) e_j) . b in the ambient space
            bi = _mat_vec(a.ops, lm, a._unit_vec(i))
            jb = _mat_vec(a.ops, rm, a._unit_vec(j))
            for k in range(n):
                amb[k * n + j] = amb[k * n + j] + bi[k]
                amb[i * n + k] = amb[i * n + k] - jb[k]
            if isinstance(a.ops, ModOps):
                amb = [x % a.ops.p for x in amb]
            cols.append(project(amb))
        for r_idx in range(dim_q):
            rows.append([cols[c_idx][r_idx] for c_idx in range(dim_q)])
    return len(nullspace(a.ops, rows, dim_q))
