#!/usr/bin/env python3
"""Build and validate data/jtable.txt, the table of special j-invariants.

Contents:
  cm_j    - the 13 rational CM j-invariants (class number one); checked here
            against the analytic j-function at the corresponding CM points.
  isoN_j  - rational j-invariants of non-CM curves with a cyclic N-isogeny
            over Q, for N in {11, 15, 17, 19, 21, 37}.  The N = 15 and 21
            lists are found by a bounded-height search on the X_0(3)
            parametrization, requiring a rational root of Phi_5 resp. Phi_7;
            every list entry is re-validated against the modular polynomial
            data files before being written.

Run after tools/gen_modpoly.py.
"""

import os
import sys
from fractions import Fraction
from math import gcd, isqrt

import mpmath
import sympy as sp

X = sp.symbols('x')

# class number one discriminants -> known j-invariants
CM_TABLE = [
    (-3, 0), (-4, 1728), (-7, -3375), (-8, 8000), (-11, -32768),
    (-12, 54000), (-16, 287496), (-19, -884736), (-27, -12288000),
    (-28, 16581375), (-43, -884736000), (-67, -147197952000),
    (-163, -262537412640768000),
]

# candidate lists for the genus-one X_0(N); re-derived by validation below
ISO11 = [Fraction(-121), Fraction(-24729001)]
ISO17 = [Fraction(-297756989, 2), Fraction(-882216989, 131072)]
ISO19 = []  # the only rational point on X_0(19) has CM (j = -884736)
ISO37 = [Fraction(-9317), Fraction(-162677523113838677)]


def load_phi(l):
    d = {}
    path = os.path.join("data/modpoly", f"phi{l}.txt")
    for line in open(path):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        ab, c = line.split("] ")
        a, b = map(int, ab[1:].split(","))
        d[(a, b)] = int(c)
        if a != b:
            d[(b, a)] = int(c)
    return d


def specialize(phi, j):
    """Phi(x, j) cleared to a primitive integer polynomial (sympy Poly)."""
    j = Fraction(j)
    degx = max(a for a, _ in phi)
    degy = max(b for _, b in phi)
    num, den = j.numerator, j.denominator
    coeffs = []
    for a in range(degx, -1, -1):
        c = 0
        for b in range(degy + 1):
            v = phi.get((a, b))
            if v:
                c += v * num**b * den**(degy - b)
        coeffs.append(c)
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g:
        coeffs = [c // g for c in coeffs]
    return sp.Poly(coeffs, X)


def has_rational_root(poly):
    return any(sp.degree(f, X) == 1 for f, _ in sp.factor_list(poly.as_expr())[1])


def check_cm_oracle():
    mpmath.mp.dps = 60
    # mpmath.kleinj is normalized so that j(i) = 1; detect the scale once
    scale = 1728 if abs(mpmath.kleinj(mpmath.mpc(0, 1)) - 1) < 1e-30 else 1
    for disc, want in CM_TABLE:
        if disc % 4 == 0:
            tau = mpmath.mpc(0, mpmath.sqrt(-disc) / 2)
        else:
            tau = mpmath.mpc(1, mpmath.sqrt(-disc)) / 2
        got = mpmath.kleinj(tau) * scale
        assert abs(got - want) < 1e-12, f"CM oracle mismatch at disc {disc}: {got}"
    print(f"cm_j: all {len(CM_TABLE)} values match the analytic j-function")


def search_chain(phi_small, phi_big, bound):
    """j-invariants on X_0(3) (height-bounded h) with a rational Phi_big root.

    g3(h) = (h+27)(h+3)^3/h.  A mod-p sieve rejects most candidates before
    the exact factorization.
    """
    degy = max(b for _, b in phi_big)
    sieve_primes = [p for p in [101, 103, 107, 109, 113, 127, 131, 137,
                                139, 149, 151, 157, 163, 167, 173]]
    tables = []
    for p in sieve_primes:
        ok = bytearray(p)
        for jm in range(p):
            # does Phi_big(x, jm) have a root mod p (or degenerate lc)?
            cs = [sum(phi_big.get((a, b), 0) * pow(jm, b, p) for b in range(degy + 1)) % p
                  for a in range(degy, -1, -1)]
            if cs[0] == 0:
                ok[jm] = 1
                continue
            for xv in range(p):
                acc = 0
                for c in cs:
                    acc = (acc * xv + c) % p
                if acc == 0:
                    ok[jm] = 1
                    break
        tables.append((p, ok))

    # g3 composed with inversion mod p, tabulated once per sieve prime
    gtab = []
    for p, ok in tables:
        gv = bytearray(p)
        for hm in range(1, p):
            jm = (hm + 27) * pow(hm + 3, 3, p) * pow(hm, p - 2, p) % p
            gv[hm] = ok[jm]
        gv[0] = 1  # pole of g3 mod p; can't conclude
        gtab.append((p, gv))

    hits = {}
    checked = 0
    for den in range(1, bound + 1):
        dinvs = [(p, gv, pow(den, p - 2, p)) for p, gv in gtab if den % p]
        for num in range(-bound, bound + 1):
            if num == 0 or gcd(abs(num), den) > 1:
                continue
            alive = True
            for p, gv, dinv in dinvs:
                if not gv[num * dinv % p]:
                    alive = False
                    break
            if not alive:
                continue
            h = Fraction(num, den)
            j = (h + 27) * (h + 3) ** 3 / h
            if j in hits:
                continue
            checked += 1
            if has_rational_root(specialize(phi_big, j)):
                hits[j] = h
    print(f"  exact checks after sieve: {checked}")
    return hits


def main():
    check_cm_oracle()
    cm_set = {Fraction(j) for _, j in CM_TABLE}

    phi = {l: load_phi(l) for l in (3, 5, 7, 11, 17, 37)}

    iso15 = search_chain(phi[3], phi[5], 3000)
    iso21 = search_chain(phi[3], phi[7], 3000)
    iso15_j = sorted(j for j in iso15 if j not in cm_set)
    iso21_j = sorted(j for j in iso21 if j not in cm_set)
    print(f"iso15_j ({len(iso15_j)}): {iso15_j}")
    print(f"iso21_j ({len(iso21_j)}): {iso21_j}")
    assert len(iso15_j) == 4 and len(iso21_j) == 4, "expected 4 values each"

    # every candidate list entry must admit the N-isogeny it claims
    for name, lst, lev in [("iso11_j", ISO11, 11), ("iso17_j", ISO17, 17),
                           ("iso37_j", ISO37, 37)]:
        for j in lst:
            assert j not in cm_set, f"{name}: {j} is CM"
            assert has_rational_root(specialize(phi[lev], j)), \
                f"{name}: Phi_{lev}(x, {j}) has no rational root"
        print(f"{name}: all {len(lst)} values validated against Phi_{lev}")

    # 15 = 3*5 and 21 = 3*7: validate via both prime levels
    for lst, lev in [(iso15_j, 5), (iso21_j, 7)]:
        for j in lst:
            assert has_rational_root(specialize(phi[3], j))
            assert has_rational_root(specialize(phi[lev], j))

    sections = [
        ("cm_j", sorted(cm_set)),
        ("iso11_j", ISO11),
        ("iso15_j", iso15_j),
        ("iso17_j", ISO17),
        ("iso19_j", ISO19),
        ("iso21_j", iso21_j),
        ("iso37_j", ISO37),
    ]
    path = "data/jtable.txt"
    with open(path, "w") as f:
        f.write("# Special j-invariant tables; exact rationals, one 'p/q' per line.\n")
        f.write("# cm_j: the 13 rational CM j-invariants (excluded everywhere).\n")
        f.write("# isoN_j: non-CM rational j-invariants with a cyclic N-isogeny over Q.\n")
        f.write("# Generated by tools/gen_jtable.py; validated at load by the library.\n")
        for name, lst in sections:
            f.write(f"\n[{name}]\n")
            for j in lst:
                f.write(f"{j.numerator}/{j.denominator}\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    sys.exit(main())
