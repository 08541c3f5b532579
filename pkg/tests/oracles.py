"""Slow, independent reference computations used to freeze expected values.

Nothing here imports the package's arithmetic: field products are
shift-and-xor with explicit reduction, ANF coefficients come from the
subset-sum formula, and annihilators are found by enumeration.
"""

from itertools import combinations, product


def gf_mul(a, b, modulus):
    n = modulus.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> n & 1:
            a ^= modulus
    return r


def gf_pow(a, k, modulus):
    r = 1
    for _ in range(k):
        r = gf_mul(r, a, modulus)
    return r


def gf_trace(a, modulus):
    n = modulus.bit_length() - 1
    s, x = 0, a
    for _ in range(n):
        s ^= x
        x = gf_mul(x, x, modulus)
    return s


def brute_dual_basis(basis, modulus):
    """Search all n-tuples of elements for the one satisfying tr(b_i d_j) = delta_ij."""
    n = modulus.bit_length() - 1
    dual = []
    for i in range(n):
        hits = [
            d
            for d in range(1 << n)
            if all(gf_trace(gf_mul(basis[j], d, modulus), modulus) == (i == j) for j in range(n))
        ]
        assert len(hits) == 1
        dual.append(hits[0])
    return dual


def element_order(a, modulus):
    x, k = a, 1
    while x != 1:
        x = gf_mul(x, a, modulus)
        k += 1
    return k


def anf_by_subsets(bits, n):
    """ANF coefficient of mask m = XOR of f over all points inside m."""
    return {m for m in range(1 << n) if sum(bits[x] for x in range(1 << n) if x & ~m == 0) % 2}


def eval_anf(terms, x):
    return sum(1 for m in terms if x & m == m) % 2


def monomials_upto(n, d):
    return [m for m in range(1 << n) if bin(m).count("1") <= d]


def brute_min_annihilator_degree(bits, n):
    """Enumerate all nonzero Boolean g (by ANF) in increasing degree bound."""
    comp = [1 - b for b in bits]
    for d in range(n + 1):
        mons = monomials_upto(n, d)
        for r in range(1, len(mons) + 1):
            for terms in combinations(mons, r):
                vals = [eval_anf(terms, x) for x in range(1 << n)]
                if not any(v and b for v, b in zip(vals, bits)):
                    return d
                if not any(v and b for v, b in zip(vals, comp)):
                    return d
    raise AssertionError


def brute_ext_annihilator_exists(bits, n, d, modulus):
    """Any nonzero g with GF(2^n) coefficients on monomials of degree <= d killing f?"""
    mons = monomials_upto(n, d)
    support = [x for x in range(1 << n) if bits[x]]
    for coeffs in product(range(1 << n), repeat=len(mons)):
        if not any(coeffs):
            continue
        ok = True
        for x in support:
            v = 0
            for m, c in zip(mons, coeffs):
                if x & m == m:
                    v ^= c
            if v:
                ok = False
                break
        if ok:
            return True
    return False


def naive_univariate_eval(coeffs, c, modulus):
    r = 0
    for i, a in enumerate(coeffs):
        if a:
            r ^= gf_mul(a, gf_pow(c, i, modulus), modulus)
    return r


def brute_is_pai_base(bits, n):
    """Enumerate every nonzero Boolean g of degree <= e for each positive e < n/2."""
    for e in range(1, n):
        if 2 * e >= n:
            break
        mons = monomials_upto(n, e)
        for r in range(1, len(mons) + 1):
            for terms in combinations(mons, r):
                prod = [eval_anf(terms, x) & bits[x] for x in range(1 << n)]
                anf = anf_by_subsets(prod, n)
                deg = max((bin(m).count("1") for m in anf), default=-1)
                if deg < n - e:
                    return False
    return True
