"""Brute-force ground truth for the spectrum formulas.

Three independent mechanisms live here: finite-field arithmetic over
F_{p^k} (elements encoded as base-p digit integers), matrix-group closure
under multiplication certified by hitting the closed-form group order
exactly, and even-permutation enumeration for small alternating groups.

Closure and the element-order scan run on packed uint64 keys through
numpy; a dim x dim matrix over F_q must fit in 64 bits (dim^2 *
bitlen(q-1) <= 64), which covers every target this module registers.
Memory peaks near 60 bytes per group element during closure, so the
largest registered target (symplectic dim 4 over F_5, 9.36e6 elements)
stays under ~0.7 GB.

Generators are obtained by seeded rejection sampling of form-preserving
matrices rather than from transcribed literature generators; the closure
size certificate makes the construction self-checking, and an undershoot
(a proper subgroup) deterministically resamples an extra generator.
"""

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, lcm

import numpy as np

from .arith import is_prime, prime_power
from .spectra import (
    SOURCE_ORACLE,
    Spectrum,
    mu_L2,
    mu_S4,
    mu_U3,
    mu_U4,
    mu_alternating,
)

DEFAULT_SEED = 0xA11CE
TABLE_LIMIT = 1024        # q up to this gets full numpy add/mul tables
MAX_FIELD_SIZE = 1 << 16
MAX_CLOSURE = 10**7
_CHUNK = 1 << 20


class FormViolationError(RuntimeError):
    """Closure grew past the target order: some generator broke the form."""


class ClosureError(RuntimeError):
    """Could not reach the target order within the retry budget."""


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p (little-endian coefficient lists)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a

def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _pmodred(res, f, p)

def _pmodred(a, f, p):
    a = list(a)
    df = len(f) - 1
    while len(a) > df:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - df
            for i in range(df + 1):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    return _ptrim(a)

def _ppowmod(a, e, f, p):
    r, b = [1], _pmodred(list(a), f, p)
    while e:
        if e & 1:
            r = _pmulmod(r, b, f, p)
        b = _pmulmod(b, b, f, p)
        e >>= 1
    return r

def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        db = len(b) - 1
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while r and len(r) - 1 >= db:
            c = r[-1] * inv % p
            if c:
                shift = len(r) - 1 - db
                for i in range(db + 1):
                    r[shift + i] = (r[shift + i] - c * b[i]) % p
            r.pop()
            _ptrim(r)
        a, b = b, r
    return a

def _small_prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out

def _poly_eq(u, v):
    n = max(len(u), len(v))
    return list(u) + [0] * (n - len(u)) == list(v) + [0] * (n - len(v))

def _is_irreducible(f, p, k):
    x = [0, 1]
    if not _poly_eq(_ppowmod(x, p**k, f, p), x):
        return False
    for ell in _small_prime_factors(k):
        xe = _ppowmod(x, p ** (k // ell), f, p)
        diff = [(a - b) % p for a, b in
                itertools.zip_longest(xe, x, fillvalue=0)]
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True

def _find_irreducible(p, k):
    """Monic irreducible of degree k with the least low-coefficient
    encoding sum(c_i p^i); unique deterministic choice."""
    if k == 1:
        return [0, 1]
    for enc in range(p**k):
        f = [(enc // p**i) % p for i in range(k)] + [1]
        if _is_irreducible(f, p, k):
            return f
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------
# fields

class Field:
    """F_{p^k}; elements are ints 0..q-1 encoding coefficient vectors in
    base p (little-endian), reduced modulo a fixed irreducible polynomial.

    Multiplication runs through exp/log tables over the least primitive
    element; q <= TABLE_LIMIT additionally gets dense q x q add/mul numpy
    tables for the batch matrix engine.
    """

    def __init__(self, p: int, k: int):
        q = p**k
        if not (1 <= k <= 6 and q <= MAX_FIELD_SIZE):
            raise ValueError(f"field bounds exceeded: need k <= 6 and p^k <= {MAX_FIELD_SIZE}")
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        self.p, self.k, self.q = p, k, q
        self.poly = tuple(_find_irreducible(p, k))

        def encode(coeffs):
            return sum(c % p * p**i for i, c in enumerate(coeffs))

        def decode(a):
            return tuple((a // p**i) % p for i in range(k))

        self.encode, self.decode = encode, decode

        # least primitive element, then exp/log over it
        fac = _small_prime_factors(q - 1) if q > 2 else []
        gen = 1
        for cand in range(1, q):
            cp = _ptrim(list(decode(cand)))
            if all(not _poly_eq(_ppowmod(cp, (q - 1) // ell, self.poly, p), [1])
                   for ell in fac):
                gen = cand
                break
        self.generator = gen
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur, gp = [1], _ptrim(list(decode(gen)))
        for i in range(q - 1):
            e = encode(cur + [0] * k)
            exp[i] = e
            log[e] = i
            cur = _pmulmod(cur, gp, self.poly, p)
        self._exp, self._log = exp, log

        if q <= TABLE_LIMIT:
            idx = np.arange(q)
            add = np.zeros((q, q), dtype=np.uint16)
            for i in range(k):
                di = (idx // p**i) % p
                add += (((di[:, None] + di[None, :]) % p) * p**i).astype(np.uint16)
            mul = np.zeros((q, q), dtype=np.uint16)
            la = log[1:q]
            mul[1:, 1:] = exp[(la[:, None] + la[None, :]) % (q - 1)]
            self.add_table, self.mul_table = add, mul
            self.neg_table = np.argmax(add == 0, axis=1).astype(np.uint16)
        else:
            self.add_table = self.mul_table = self.neg_table = None

    # scalar operations -----------------------------------------------------
    def add(self, a, b):
        if self.add_table is not None:
            return int(self.add_table[a, b])
        p = self.p
        return self.encode([(x + y) % p for x, y in
                            zip(self.decode(a), self.decode(b))])

    def neg(self, a):
        if self.neg_table is not None:
            return int(self.neg_table[a])
        return self.encode([-x % self.p for x in self.decode(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self._exp[-int(self._log[a]) % (self.q - 1)])

    def pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    def frobenius(self, a):
        return self.pow(a, self.p)

    def conj(self, a):
        """x -> x^(p^(k/2)), the involution of the quadratic subextension."""
        if self.k % 2:
            raise ValueError("conj needs an even-degree extension")
        return self.pow(a, self.p ** (self.k // 2))

    def multiplicative_order(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        from math import gcd
        return (self.q - 1) // gcd(self.q - 1, int(self._log[a]))

    def poly_str(self):
        terms = []
        for i in range(self.k, -1, -1):
            c = self.poly[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}{x}")
        return " + ".join(terms)


@lru_cache(maxsize=32)
def make_field(p: int, k: int) -> Field:
    """Field descriptor for F_{p^k}; p prime, 1 <= k <= 6, p^k <= 2^16."""
    return Field(p, k)


# ---------------------------------------------------------------------------
# scalar matrix helpers (tuples of tuples of element codes)

def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

def mat_mul(F, A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = 0
            for k in range(n):
                s = F.add(s, F.mul(A[i][k], B[k][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)

def mat_det(F, A):
    n = len(A)
    if n == 1:
        return A[0][0]
    det = 0
    for j in range(n):
        minor = tuple(tuple(A[i][k] for k in range(n) if k != j)
                      for i in range(1, n))
        term = F.mul(A[0][j], mat_det(F, minor))
        det = F.add(det, F.neg(term) if j % 2 else term)
    return det

def matrix_power(F, M, e):
    """M^e by repeated squaring."""
    r = identity_matrix(len(M))
    b = M
    while e:
        if e & 1:
            r = mat_mul(F, r, b)
        b = mat_mul(F, b, b)
        e >>= 1
    return r

def _scalar_of(M):
    """lam if M = lam*I else None."""
    n = len(M)
    lam = M[0][0]
    for i in range(n):
        for j in range(n):
            if M[i][j] != (lam if i == j else 0):
                return None
    return lam


# ---------------------------------------------------------------------------
# form checks and form-preserving samplers

def is_special_linear(F, M):
    return mat_det(F, M) == 1

def is_special_unitary(F, M):
    """M* M = I for the identity Gram form, conj entrywise, and det 1."""
    n = len(M)
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s = F.add(s, F.mul(F.conj(M[k][i]), M[k][j]))
            if s != (1 if i == j else 0):
                return False
    return mat_det(F, M) == 1

def _symp_pair(F, u, v):
    """u^T J v for J = [[0, I], [-I, 0]] in dimension 4."""
    jv = (v[2], v[3], F.neg(v[0]), F.neg(v[1]))
    s = 0
    for a, b in zip(u, jv):
        s = F.add(s, F.mul(a, b))
    return s

def is_symplectic4(F, M):
    cols = [tuple(M[i][j] for i in range(4)) for j in range(4)]
    want = {(0, 2): 1, (1, 3): 1, (2, 0): F.neg(1), (3, 1): F.neg(1)}
    for i in range(4):
        for j in range(4):
            if _symp_pair(F, cols[i], cols[j]) != want.get((i, j), 0):
                return False
    return mat_det(F, M) == 1


def _nullspace(F, rows, n):
    """Basis of the joint kernel of the given linear functionals."""
    M = [list(r) for r in rows]
    piv, r = [], 0
    for c in range(n):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(x, inv) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.add(x, F.neg(F.mul(f, y))) for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(n) if c not in piv):
        v = [0] * n
        v[fc] = 1
        for i, c in enumerate(piv):
            v[c] = F.neg(M[i][fc])
        basis.append(v)
    return basis


def random_special_linear(F, n, rng):
    """Uniform-ish det-1 matrix: sample invertible, rescale one row."""
    while True:
        A = [[rng.randrange(F.q) for _ in range(n)] for _ in range(n)]
        A = tuple(tuple(r) for r in A)
        d = mat_det(F, A)
        if d:
            di = F.inv(d)
            return tuple(tuple(F.mul(x, di) for x in row) if i == n - 1 else row
                         for i, row in enumerate(A))


def random_special_unitary(F, n, rng):
    """Random element of SU_n over F_{q0^2} (F.k even, q0 = p^(k/2)) for
    the identity Gram form: build an orthonormal basis column by column,
    then rescale a column by det^-1 (a norm-1 scalar, so the form holds)."""
    q0 = F.p ** (F.k // 2)

    def herm(u, v):
        s = 0
        for a, b in zip(u, v):
            s = F.add(s, F.mul(a, F.conj(b)))
        return s

    cols = []
    while len(cols) < n:
        rows = [[F.conj(c) for c in col] for col in cols]
        basis = _nullspace(F, rows, n) if rows else \
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(256):
            v = [0] * n
            for b in basis:
                cf = rng.randrange(F.q)
                if cf:
                    for i in range(n):
                        v[i] = F.add(v[i], F.mul(cf, b[i]))
            nv = herm(v, v)
            if nv:
                break
        else:
            raise ClosureError("no anisotropic vector found")
        # nv lies in the subfield, so its log is divisible by q0 + 1 and
        # alpha = g^(log(nv^-1)/(q0+1)) has norm nv^-1
        lv = -int(F._log[nv]) % (F.q - 1)
        alpha = F.pow(F.generator, lv // (q0 + 1))
        cols.append([F.mul(alpha, x) for x in v])
    M = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    di = F.inv(mat_det(F, M))
    M = tuple(tuple(F.mul(row[0], di) if j == 0 else row[j] for j in range(n))
              for row in M)
    if not is_special_unitary(F, M):
        raise AssertionError("unitary sampler produced a non-unitary matrix")
    return M


def random_symplectic4(F, rng):
    """Random element of Sp_4(q): complete a random hyperbolic basis."""
    n = 4

    def rand_in(basis):
        while True:
            v = [0] * n
            for b in basis:
                cf = rng.randrange(F.q)
                if cf:
                    for i in range(n):
                        v[i] = F.add(v[i], F.mul(cf, b[i]))
            if any(v):
                return v

    full = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    e1 = rand_in(full)
    while True:
        w = rand_in(full)
        c = _symp_pair(F, e1, w)
        if c:
            break
    ci = F.inv(c)
    f1 = [F.mul(ci, x) for x in w]

    def form_row(u):  # functional x -> <u, x>
        return [F.neg(u[2]), F.neg(u[3]), u[0], u[1]]

    perp = _nullspace(F, [form_row(e1), form_row(f1)], n)
    e2 = rand_in(perp)
    while True:
        w2 = rand_in(perp)
        c2 = _symp_pair(F, e2, w2)
        if c2:
            break
    f2 = [F.mul(F.inv(c2), x) for x in w2]
    M = tuple(tuple(col[i] for col in (e1, e2, f1, f2)) for i in range(n))
    if not is_symplectic4(F, M):
        raise AssertionError("symplectic sampler produced a non-symplectic matrix")
    return M


# ---------------------------------------------------------------------------
# packed-key batch engine

def _bits_for(F):
    return (F.q - 1).bit_length()

def _pack(A, bits):
    N = A.shape[0]
    flat = A.reshape(N, -1).astype(np.uint64)
    key = np.zeros(N, dtype=np.uint64)
    for i in range(flat.shape[1]):
        key = (key << np.uint64(bits)) | flat[:, i]
    return key

def _unpack(keys, n, bits):
    out = np.zeros((keys.shape[0], n * n), dtype=np.uint16)
    k = keys.copy()
    mask = np.uint64((1 << bits) - 1)
    for i in range(n * n - 1, -1, -1):
        out[:, i] = (k & mask).astype(np.uint16)
        k >>= np.uint64(bits)
    return out.reshape(-1, n, n)

def _batch_mul(F, A, B):
    """A (N,n,n) times B ((n,n) broadcast, or (N,n,n) pairwise)."""
    if B.ndim == 2:
        T = F.mul_table[A[:, :, :, None], B[None, None, :, :]]
    else:
        T = F.mul_table[A[:, :, :, None], B[:, None, :, :]]
    C = T[:, :, 0, :]
    for k in range(1, A.shape[2]):
        C = F.add_table[C, T[:, :, k, :]]
    return C

def _member_mask(sorted_keys, keys):
    idx = np.searchsorted(sorted_keys, keys)
    idx_c = np.minimum(idx, sorted_keys.size - 1)
    return (idx < sorted_keys.size) & (sorted_keys[idx_c] == keys)


@dataclass(frozen=True, eq=False)
class MatrixGroup:
    """Fully enumerated matrix group: field, dimension, the generators that
    produced it, sorted packed element keys, and the scalars it contains."""

    field: Field
    dim: int
    generators: tuple
    elements: np.ndarray
    center_scalars: tuple

    @property
    def order(self) -> int:
        return int(self.elements.size)

    def contains(self, M) -> bool:
        arr = np.array([M], dtype=np.uint16)
        key = _pack(arr, _bits_for(self.field))
        return bool(_member_mask(self.elements, key)[0])


def _close_once(F, dim, gens, target, chunk=_CHUNK):
    bits = _bits_for(F)
    if dim * dim * bits > 64:
        raise ValueError("matrix does not pack into 64 bits")
    if F.mul_table is None:
        raise ValueError(f"batch closure needs q <= {TABLE_LIMIT}")
    gens_np = [np.array(g, dtype=np.uint16) for g in gens]
    frontier = np.array([identity_matrix(dim)], dtype=np.uint16)
    visited = _pack(frontier, bits)
    while frontier.shape[0]:
        key_chunks = []
        for g in gens_np:
            for lo in range(0, frontier.shape[0], chunk):
                prod = _batch_mul(F, frontier[lo:lo + chunk], g)
                key_chunks.append(_pack(prod, bits))
        keys = np.unique(np.concatenate(key_chunks))
        new = keys[~_member_mask(visited, keys)]
        if new.size == 0:
            break
        visited = np.sort(np.concatenate([visited, new]))
        if visited.size > target:
            raise FormViolationError(
                f"closure reached {visited.size} > target {target}; a "
                "generator violates the defining form")
        frontier = _unpack(new, dim, bits)
    return visited


def closure(generators, target_order: int, field: Field, dim: int,
            sampler=None, rng=None, max_retries: int = 6,
            budget: int = MAX_CLOSURE) -> MatrixGroup:
    """Breadth-first closure of the generators under multiplication.

    Succeeds exactly when the closure size equals target_order.  On an
    undershoot (the generators span a proper subgroup) one extra sampled
    generator is added and the closure restarts, up to max_retries; growth
    past the target raises FormViolationError immediately.  budget guards
    against accidentally huge targets; builders that know their size pass a
    matching budget.
    """
    if target_order > budget:
        raise ValueError(f"target order {target_order} above closure budget {budget}")
    gens = list(generators)
    for _ in range(max_retries + 1):
        elements = _close_once(field, dim, gens, target_order)
        if elements.size == target_order:
            center = _center_scalars(field, dim, elements)
            return MatrixGroup(field, dim, tuple(gens), elements, center)
        if sampler is None or rng is None:
            break
        gens.append(sampler(rng))
    raise ClosureError(
        f"closure stalled at {elements.size} of {target_order} after retries")


def _center_scalars(F, dim, elements):
    bits = _bits_for(F)
    out = []
    for lam in range(1, F.q):
        M = np.array([[[lam if i == j else 0 for j in range(dim)]
                       for i in range(dim)]], dtype=np.uint16)
        if _member_mask(elements, _pack(M, bits))[0]:
            out.append(lam)
    return tuple(out)


def spectrum_mod_center(group: MatrixGroup, chunk: int = _CHUNK) -> Spectrum:
    """Element orders modulo the scalar subgroup, scanned exhaustively: for
    each element the least k with M^k scalar, reduced to an antichain."""
    F, n = group.field, group.dim
    bits = _bits_for(F)
    center_keys = np.sort(np.concatenate([
        _pack(np.array([[[lam if i == j else 0 for j in range(n)]
                         for i in range(n)]], dtype=np.uint16), bits)
        for lam in group.center_scalars]))
    orders = set()
    for lo in range(0, group.elements.size, chunk):
        M = _unpack(group.elements[lo:lo + chunk], n, bits)
        P = M.copy()
        k = 1
        while P.shape[0]:
            done = _member_mask(center_keys, _pack(P, bits))
            if done.any():
                orders.add(k)
                P, M = P[~done], M[~done]
                if not P.shape[0]:
                    break
            P = _batch_mul(F, P, M)
            k += 1
    return Spectrum.from_values(orders, SOURCE_ORACLE)


def element_order_mod_center(F, M, center_scalars) -> int:
    """Naive order of M modulo the scalars: iterate M, M^2, ... until a
    scalar from the given set appears."""
    scal = set(center_scalars)
    P = M
    k = 1
    while True:
        lam = _scalar_of(P)
        if lam is not None and lam in scal:
            return k
        P = mat_mul(F, P, M)
        k += 1


def element_order_by_exponent(F, M, exponent_multiple, center_scalars) -> int:
    """Order of M modulo the scalars via the factored-exponent path: start
    from a known multiple of the order and strip prime factors, testing
    powers by repeated squaring."""
    scal = set(center_scalars)

    def central(e):
        lam = _scalar_of(matrix_power(F, M, e))
        return lam is not None and lam in scal

    o = exponent_multiple
    if not central(o):
        raise ValueError("exponent_multiple is not a multiple of the order")
    for p in _small_prime_factors(o):
        while o % p == 0 and central(o // p):
            o //= p
    return o


# ---------------------------------------------------------------------------
# alternating-group permutation scan

def alternating_orders_bruteforce(n: int) -> list:
    """All element orders of the alternating group of degree n (5..10) by
    enumerating even permutations and taking cycle-type lcms."""
    if not 5 <= n <= 10:
        raise ValueError("permutation scan supports 5 <= n <= 10")
    orders = set()
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = 0
        order = 1
        for i in range(n):
            if not seen[i]:
                cycles += 1
                length = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                order = lcm(order, length)
        if (n - cycles) % 2 == 0:  # even permutation
            orders.add(order)
    return sorted(orders)


def alternating_spectrum_bruteforce(n: int) -> Spectrum:
    return Spectrum.from_values(alternating_orders_bruteforce(n), SOURCE_ORACLE)


# ---------------------------------------------------------------------------
# named targets

def sl2_group(q: int, seed: int = DEFAULT_SEED) -> MatrixGroup:
    """SL_2(q) by closure; target order q(q^2-1)."""
    p, k = prime_power(q)
    F = make_field(p, k)
    rng = random.Random(seed)

    def sampler(r):
        return random_special_linear(F, 2, r)

    gens = [sampler(rng), sampler(rng)]
    return closure(gens, q * (q * q - 1), F, 2, sampler=sampler, rng=rng)


def su_group(n: int, q: int, seed: int = DEFAULT_SEED) -> MatrixGroup:
    """SU_n(q) inside GL_n(q^2); target q^(n(n-1)/2) prod(q^i - (-1)^i)."""
    p, k = prime_power(q)
    F = make_field(p, 2 * k)
    rng = random.Random(seed)

    def sampler(r):
        return random_special_unitary(F, n, r)

    target = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        target *= q**i - (-1) ** i
    gens = [sampler(rng), sampler(rng)]
    return closure(gens, target, F, n, sampler=sampler, rng=rng, budget=target)


def sp4_group(q: int, seed: int = DEFAULT_SEED) -> MatrixGroup:
    """Sp_4(q); target order q^4 (q^2-1)(q^4-1)."""
    p, k = prime_power(q)
    F = make_field(p, k)
    rng = random.Random(seed)

    def sampler(r):
        return random_symplectic4(F, r)

    gens = [sampler(rng), sampler(rng)]
    return closure(gens, q**4 * (q * q - 1) * (q**4 - 1), F, 4,
                   sampler=sampler, rng=rng)


@dataclass(frozen=True)
class OracleResult:
    target: str
    enumerated: int          # closure size, or number of even permutations
    mu_oracle: Spectrum
    mu_formula: Spectrum
    match: bool


_MATRIX_TARGETS = {
    # name: (builder args, formula)
    "SL2_4": (("sl2", 4), lambda: mu_L2(4)),
    "SL2_5": (("sl2", 5), lambda: mu_L2(5)),
    "SL2_7": (("sl2", 7), lambda: mu_L2(7)),
    "SL2_9": (("sl2", 9), lambda: mu_L2(9)),
    "SL2_13": (("sl2", 13), lambda: mu_L2(13)),
    "SL2_37": (("sl2", 37), lambda: mu_L2(37)),
    "SU3_3": (("su", 3, 3), lambda: mu_U3(3)),
    "SU3_5": (("su", 3, 5), lambda: mu_U3(5)),
    "SU4_3": (("su", 4, 3), lambda: mu_U4(3)),
    "SP4_5": (("sp4", 5), lambda: mu_S4(5)),
}

HEAVY_TARGETS = frozenset({"SL2_37", "SP4_5"})

ORACLE_TARGETS = tuple(sorted(_MATRIX_TARGETS)) + tuple(
    f"A{n}" for n in range(5, 11))


def run_target(name: str, seed: int = DEFAULT_SEED) -> OracleResult:
    """Run one named oracle target and compare against the formula route."""
    if name.startswith("A") and name[1:].isdigit():
        n = int(name[1:])
        mu_o = alternating_spectrum_bruteforce(n)
        mu_f = mu_alternating(n)
        return OracleResult(name, factorial(n) // 2, mu_o, mu_f,
                            mu_o.mu == mu_f.mu)
    if name not in _MATRIX_TARGETS:
        raise ValueError(f"unknown oracle target {name!r} "
                         f"(known: {', '.join(ORACLE_TARGETS)})")
    (kind, *args), formula = _MATRIX_TARGETS[name]
    if kind == "sl2":
        grp = sl2_group(args[0], seed)
    elif kind == "su":
        grp = su_group(args[0], args[1], seed)
    else:
        grp = sp4_group(args[0], seed)
    mu_o = spectrum_mod_center(grp)
    mu_f = formula()
    return OracleResult(name, grp.order, mu_o, mu_f, mu_o.mu == mu_f.mu)
