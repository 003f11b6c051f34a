#!/usr/bin/env python3
"""Generate classical modular polynomial data files Phi_l(X, Y) for prime l.

Method: exact q-expansion arithmetic over Z.  Phi_l(X, j(tau)) is the monic
degree l+1 polynomial whose roots are j(l*tau) and j((tau+i)/l), i = 0..l-1.
Power sums of the roots are computed with a roots-of-unity filter that never
leaves Z (summing j((tau+i)/l)^r over i keeps exactly the q-exponents
divisible by l), Newton's identities turn power sums into elementary
symmetric functions, and each of those is recognised as a polynomial in j.

Before anything is written out we check: internal cancellation and division
exactness, the series identity Phi(j(q), j(q^l)) = 0, symmetry in X and Y,
the Kronecker congruence Phi_l == (X^l - Y)(X - Y^l) mod l, and for l = 2
the textbook polynomial.
"""

import argparse
import operator
import os
import sys
import time

from gmpy2 import mpz

ZERO = mpz(0)

# q-expansion of j, used as a self-check on the series plumbing
J_HEAD = [1, 744, 196884, 21493760, 864299970, 20245856256]

PHI2 = {
    (3, 0): 1, (0, 3): 1, (2, 2): -1,
    (2, 1): 1488, (1, 2): 1488,
    (2, 0): -162000, (0, 2): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000, (0, 1): 8748000000,
    (0, 0): -157464000000000,
}

_MPZ_TO_BYTES = hasattr(mpz(1), "to_bytes")


def _tob(x, nbytes):
    if _MPZ_TO_BYTES:
        return x.to_bytes(nbytes, "little")
    return int(x).to_bytes(nbytes, "little")


def _frb(b):
    return mpz(int.from_bytes(b, "little"))


class Series:
    """Truncated Laurent series in q: c[i] is the coefficient of q**(lo+i).

    hi is the largest exponent whose coefficient is known to be correct;
    multiplication tracks it so that window mistakes fail asserts instead of
    silently truncating.
    """

    __slots__ = ("lo", "c")

    def __init__(self, lo, c):
        self.lo = lo
        self.c = c

    @property
    def hi(self):
        return self.lo + len(self.c) - 1

    def __getitem__(self, n):
        i = n - self.lo
        if 0 <= i < len(self.c):
            return self.c[i]
        raise IndexError(f"exponent {n} outside window [{self.lo},{self.hi}]")

    def get(self, n):
        i = n - self.lo
        return self.c[i] if 0 <= i < len(self.c) else ZERO

    def trunc(self, lo, hi):
        assert lo >= self.lo and hi <= self.hi
        return Series(lo, self.c[lo - self.lo: hi - self.lo + 1])

    def add_scaled(self, other, k):
        """self += k * other on other's window (must sit inside self's)."""
        off = other.lo - self.lo
        assert off >= 0 and off + len(other.c) <= len(self.c)
        c = self.c
        for i, x in enumerate(other.c):
            if x:
                c[off + i] += k * x


def mul(a, b):
    """Product series; window is what the truncated operands determine."""
    n1, n2 = len(a.c), len(b.c)
    lo = a.lo + b.lo
    hi = min(a.hi + b.lo, b.hi + a.lo)
    outlen = hi - lo + 1
    assert outlen >= 1
    if n1 * n2 <= 160_000:
        out = [ZERO] * outlen
        for i, x in enumerate(a.c):
            if not x:
                continue
            jmax = min(n2, outlen - i)
            for j in range(jmax):
                y = b.c[j]
                if y:
                    out[i + j] += x * y
        return Series(lo, out)
    return Series(lo, _mul_packed(a.c, b.c, outlen))


def _mul_packed(ac, bc, outlen):
    """Kronecker-substitution product of coefficient lists, first outlen terms."""
    maxa = max(abs(x) for x in ac)
    maxb = max(abs(x) for x in bc)
    bound = 2 * min(len(ac), len(bc)) * maxa * maxb
    d = bound.bit_length() // 8 + 1
    zero = b"\x00" * d

    def pack(cs):
        pos = bytearray()
        neg = bytearray()
        for x in cs:
            if x > 0:
                pos += _tob(x, d)
                neg += zero
            elif x < 0:
                pos += zero
                neg += _tob(-x, d)
            else:
                pos += zero
                neg += zero
        return _frb(bytes(pos)), _frb(bytes(neg))

    pa, na = pack(ac)
    pb, nb = pack(bc)
    pp = pa * pb + na * nb
    nn = pa * nb + na * pb
    bp = _tob(pp, d * (len(ac) + len(bc)))
    bn = _tob(nn, d * (len(ac) + len(bc)))
    out = []
    for i in range(outlen):
        chunk = slice(i * d, (i + 1) * d)
        out.append(_frb(bp[chunk]) - _frb(bn[chunk]))
    return out


def conv_into(out, out_lo, a, b, sign):
    """out[s] += sign * (a*b)[s] for the exponents out covers."""
    brev = b.c[::-1]
    n1, n2 = len(a.c), len(b.c)
    for s_i in range(len(out)):
        t = (s_i + out_lo) - a.lo - b.lo  # index into the full convolution
        x0 = max(0, t - n2 + 1)
        x1 = min(n1 - 1, t)
        if x0 > x1:
            continue
        assert t <= n1 + n2 - 2
        r0 = n2 - 1 - t + x0
        v = sum(map(operator.mul, a.c[x0:x1 + 1], brev[r0:r0 + (x1 - x0 + 1)]))
        if sign < 0:
            v = -v
        out[s_i] += v


def j_series(w):
    """j(q) on the window [-1, w]."""
    n = w + 2  # series length for the q^0-based factors

    sig3 = [ZERO] * n
    for d in range(1, n):
        d3 = mpz(d) ** 3
        for m in range(d, n, d):
            sig3[m] += d3
    e4 = Series(0, [mpz(1)] + [240 * s for s in sig3[1:]])

    eul = [ZERO] * n
    eul[0] = mpz(1)
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 >= n:
            break
        s = mpz(-1) ** k
        eul[g1] += s
        if g2 < n:
            eul[g2] += s
        k += 1
    e1 = Series(0, eul)
    e3 = mul(mul(e1, e1), e1)
    e6 = mul(e3, e3)
    e12 = mul(e6, e6)
    e24 = mul(e12, e12)  # Delta / q

    inv = [ZERO] * n
    inv[0] = mpz(1)
    dc = e24.c
    for m in range(1, n):
        acc = ZERO
        for i in range(1, m + 1):
            if dc[i]:
                acc += dc[i] * inv[m - i]
        inv[m] = -acc

    e4c = mul(mul(e4, e4), e4)
    jc = mul(e4c, Series(0, inv))
    j = Series(-1, jc.c[:n])
    for t, want in enumerate(J_HEAD):
        assert j[t - 1] == want, "j-series self-check failed"
    return j


def compute_phi(l):
    """Return {(a, b): coefficient} for Phi_l, validated."""
    g = 2
    r = l + 1
    w = l * l + 4 * l + 4
    j = j_series(w)

    # j^m for m = 1..r; each window [-m, w-m] serves the filter, the deep
    # reconstruction of the e_k, and the final identity check.
    jp = [None, j]
    for m in range(2, r + 1):
        jp.append(mul(jp[m - 1], j))
    assert jp[r].hi >= l * (g + l + 1)

    # Power sums P_i of the l+1 conjugate functions, window [-i*l, g+l+1].
    pWin = g + l + 1
    psums = [None]
    for i in range(1, r + 1):
        lo = -i * l
        arr = [ZERO] * (pWin - lo + 1)
        for t in range(-i, pWin // l + 1):  # j(q^l)^i contributes at q^(l*t)
            if l * t <= pWin:
                arr[l * t - lo] += jp[i][t]
        for m in range(-(i // l), pWin + 1):  # filtered sum over i/l-shifts
            arr[m - lo] += l * jp[i][m * l]
        psums.append(Series(lo, arr))

    # Newton's identities, shallow windows; each e_k is recognised as a
    # polynomial in j and then re-expanded deep enough for later steps.
    cpoly = [None] * (r + 1)  # cpoly[k][m]: j^m coefficient of e_k
    cpoly[0] = [mpz(1)]
    edeep = [None] * (r + 1)
    edeep[0] = Series(-(l + 1), [ZERO] * (l + 1) + [mpz(1)] + [ZERO] * (g + r * l))
    for k in range(1, r + 1):
        out_lo = -(l + 3)
        out = [ZERO] * (g - out_lo + 1)
        for i in range(1, k + 1):
            conv_into(out, out_lo, edeep[k - i], psums[i], +1 if i % 2 else -1)
        assert out[0] == 0 and out[1] == 0, f"pole cancellation failed at e_{k}"
        ek = []
        for x in out[2:]:
            q, rem = divmod(x, k)
            assert rem == 0, f"Newton division not exact at e_{k}"
            ek.append(mpz(q))
        eshallow = Series(-(l + 1), ek)

        # recognise as polynomial in j by leading-pole subtraction
        cs = [ZERO] * (r + 1)
        t = Series(eshallow.lo, list(eshallow.c))
        for m in range(r, 0, -1):
            cm = t[-m]
            cs[m] = cm
            if cm:
                t.add_scaled(jp[m].trunc(-m, g), -cm)
        cs[0] = t[0]
        for n in range(1, g + 1):
            assert t[n] == 0, f"recognition remainder nonzero for e_{k}"
        cpoly[k] = cs

        gk = g + (r - k) * l
        deep = [ZERO] * (l + 1 + gk + 1)
        dlo = -(l + 1)
        for m in range(r + 1):
            if not cs[m]:
                continue
            if m == 0:
                deep[-dlo] += cs[0]
            else:
                src = jp[m]
                for n in range(-m, gk + 1):
                    deep[n - dlo] += cs[m] * src[n]
        edeep[k] = Series(dlo, deep)

    coef = {}
    for k in range(0, r + 1):
        a = r - k
        sgn = -1 if k % 2 else 1
        for b, cb in enumerate(cpoly[k]):
            if cb:
                coef[(a, b)] = sgn * cb

    _validate(l, coef, jp)
    return coef


def _validate(l, coef, jp):
    g = 2
    r = l + 1

    for (a, b), v in coef.items():
        assert coef.get((b, a), ZERO) == v, f"Phi_{l} not symmetric at {(a, b)}"

    # Kronecker congruence: Phi_l == (X^l - Y)(X - Y^l) mod l
    kron = {(r, 0): 1, (0, r): 1, (l, l): -1, (1, 1): -1}
    for a in range(r + 1):
        for b in range(r + 1):
            want = kron.get((a, b), 0) % l
            assert coef.get((a, b), ZERO) % l == want, \
                f"Kronecker congruence fails at {(a, b)}"

    if l == 2:
        assert {k: int(v) for k, v in coef.items()} == PHI2, "Phi_2 mismatch"

    # Phi_l(j(q), j(q^l)) must vanish identically.
    scale_hi = (g + r) // l + 1
    jlp = [Series(0, [mpz(1)])]
    for b in range(1, r + 1):
        src = jp[b].trunc(-b, scale_hi)
        arr = [ZERO] * (l * (len(src.c) - 1) + 1)
        for i, x in enumerate(src.c):
            arr[l * i] = x
        jlp.append(Series(l * src.lo, arr))

    tot_lo = -(r + r * l)
    total = [ZERO] * (g - tot_lo + 1)
    for a in range(r + 1):
        row = [(b, coef[(a, b)]) for b in range(r + 1) if (a, b) in coef]
        if not row:
            continue
        in_lo = -r * l
        inner = [ZERO] * (g + r - in_lo + 1)
        for b, cb in row:
            s = jlp[b]
            for i, x in enumerate(s.c):
                n = s.lo + i
                if -r * l <= n <= g + r and x:
                    inner[n - in_lo] += cb * x
        innerS = Series(in_lo, inner)
        term = mul(jp[a], innerS) if a else innerS
        assert term.hi >= g
        for n in range(max(term.lo, tot_lo), g + 1):
            total[n - tot_lo] += term[n]
    assert all(x == 0 for x in total), f"Phi_{l}(j(q), j(q^l)) != 0"


def write_phi(l, coef, outdir):
    path = os.path.join(outdir, f"phi{l}.txt")
    entries = sorted((a, b) for (a, b) in coef if a >= b)
    with open(path, "w") as f:
        f.write(f"# Classical modular polynomial Phi_{l}(X, Y).\n")
        f.write("# Each line \"[a,b] c\" contributes c * X^a * Y^b; entries with\n")
        f.write("# a < b are omitted (the polynomial is symmetric in X and Y).\n")
        f.write("# Generated by tools/gen_modpoly.py; do not edit by hand.\n")
        for a, b in entries:
            f.write(f"[{a},{b}] {coef[(a, b)]}\n")
    return path, len(entries)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--levels", default="2,3,5,7,11,13,17,19,37",
                    help="comma-separated prime levels")
    ap.add_argument("--out", default="data/modpoly", help="output directory")
    args = ap.parse_args()

    os.makedirs(args.out, exist_ok=True)
    for l in [int(s) for s in args.levels.split(",")]:
        t0 = time.monotonic()
        coef = compute_phi(l)
        path, n = write_phi(l, coef, args.out)
        dmax = max(len(str(abs(int(v)))) for v in coef.values())
        print(f"phi{l}: {n} entries, max {dmax} digits, "
              f"{time.monotonic() - t0:.1f}s -> {path}", flush=True)


if __name__ == "__main__":
    sys.exit(main())
