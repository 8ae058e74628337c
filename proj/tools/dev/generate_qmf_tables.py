#!/usr/bin/env python3
"""Regenerates core/src/qmf_tables.inc.

Daubechies filters come from spectral factorization of the binomial
half-band polynomial (minimal-phase root selection), symlets from the
least-asymmetric selection over the same root set, and coiflets from a
damped Gauss-Newton solve of the defining moment/orthogonality system.
Every filter is polished to residuals below 1e-15 before being emitted,
so the embedded constants are exact to double precision.

Usage: python3 tools/dev/generate_qmf_tables.py > core/src/qmf_tables.inc
"""
import sys
import numpy as np
from math import comb, sqrt, pi
from itertools import product as iproduct

def spectral_roots(q):
    P = [comb(q - 1 + k, k) for k in range(q)]
    return np.roots(list(reversed(P)))

def root_groups(q):
    """z-plane root groups as (inside_unit_circle, outside) lists."""
    groups, used = [], []
    for y in spectral_roots(q):
        if any(abs(y - u) < 1e-9 for u in used):
            continue
        b = 2 - 4 * y
        disc = np.sqrt(b * b - 4 + 0j)
        z1, z2 = (b + disc) / 2, (b - disc) / 2
        zin = z1 if abs(z1) < 1 else z2
        zout = z2 if abs(z1) < 1 else z1
        if abs(y.imag) < 1e-12:
            groups.append(([zin], [zout]))
            used.append(y)
        else:
            groups.append(([zin, np.conj(zin)], [zout, np.conj(zout)]))
            used.extend([y, np.conj(y)])
    return groups

def assemble(q, groups, choice):
    h = np.array([1.0 + 0j])
    for _ in range(q):
        h = np.convolve(h, [0.5, 0.5])
    for g, pick in zip(groups, choice):
        for z in (g[0] if pick == 0 else g[1]):
            h = np.convolve(h, [1.0, -z])
    h = np.real(h)
    return h * sqrt(2) / h.sum()

def phase_nonlinearity(h):
    om = np.linspace(0.01, pi - 0.01, 512)
    n = np.arange(len(h))
    H = (h[None, :] * np.exp(-1j * om[:, None] * n[None, :])).sum(axis=1)
    th = np.unwrap(np.angle(H))
    A = np.vstack([om, np.ones_like(om)]).T
    c, *_ = np.linalg.lstsq(A, th, rcond=None)
    return np.sum((th - A @ c) ** 2)

def orth_rows(h, upto):
    L = len(h)
    rows, jrows = [], []
    for k in range(upto):
        s = sum(h[n] * h[n - 2 * k] for n in range(2 * k, L)) - (1.0 if k == 0 else 0.0)
        g = np.zeros(L)
        for n in range(2 * k, L):
            g[n] += h[n - 2 * k]
            g[n - 2 * k] += h[n]
        rows.append(s)
        jrows.append(g)
    return rows, jrows

def moment_rows(h, signs, powers, center=0):
    L = len(h)
    rows, jrows = [], []
    for r in powers:
        c = np.array([(signs(n)) * (float(n - center) ** r) for n in range(L)])
        sc = 1.0 / np.linalg.norm(c)
        rows.append(sc * np.dot(c, h))
        jrows.append(sc * c)
    return rows, jrows

def polish(h, system, iters=200):
    for _ in range(iters):
        f, J = system(h)
        if np.max(np.abs(f)) < 5e-16:
            break
        dh, *_ = np.linalg.lstsq(J, -f, rcond=None)
        t = 1.0
        for _ in range(40):
            f2, _ = system(h + t * dh)
            if np.linalg.norm(f2) < np.linalg.norm(f):
                break
            t *= 0.5
        h = h + t * dh
    return h, np.max(np.abs(system(h)[0]))

def db_system(q):
    def sys(h):
        r1, j1 = orth_rows(h, len(h) // 2)
        r2, j2 = moment_rows(h, lambda n: (-1) ** n, range(q))
        return np.array(r1 + r2), np.array(j1 + j2)
    return sys

def daubechies(q):
    groups = root_groups(q)
    h = assemble(q, groups, [0] * len(groups))
    return polish(h, db_system(q))

def symlet(q):
    groups = root_groups(q)
    best = None
    for choice in iproduct([0, 1], repeat=len(groups)):
        h = assemble(q, groups, choice)
        ph = phase_nonlinearity(h)
        if best is None or ph < best[0]:
            best = (ph, h)
    h = best[1]
    cen = np.sum(np.arange(len(h)) * h * h) / np.sum(h * h)
    if cen > (len(h) - 1) / 2:
        h = h[::-1].copy()
    return polish(h, db_system(q))

COIF_SEEDS = {
    1: [-0.015655728, -0.072732620, 0.384864847, 0.852572020, 0.337897662,
        -0.072732620],
    2: [-0.000720549, -0.001823209, 0.005611435, 0.023680172, -0.059434419,
        -0.076488599, 0.417005184, 0.812723635, 0.386110067, -0.067372555,
        -0.041464937, 0.016387336],
    3: [-3.459977e-05, -7.098330e-05, 0.000466217, 0.001117519, -0.002574518,
        -0.009007976, 0.015880545, 0.034555028, -0.082301927, -0.071799822,
        0.428483476, 0.793777223, 0.405176902, -0.061123390, -0.065771911,
        0.023452696, 0.007782596, -0.003793513],
    4: [-1.784985e-06, -3.259680e-06, 3.122988e-05, 6.233903e-05, -0.000259975,
        -0.000589021, 0.001266562, 0.003751436, -0.005658287, -0.015211732,
        0.025082262, 0.039334427, -0.096220442, -0.066627474, 0.434386056,
        0.782238931, 0.415308407, -0.056077313, -0.081266700, 0.026682419,
        0.016068944, -0.007346166, -0.001629492, 0.000892314],
    5: [-9.517657e-08, -1.674429e-07, 2.063761e-06, 3.734655e-06, -2.131503e-05,
        -4.134043e-05, 0.000140541, 0.000302259, -0.000638131, -0.001662864,
        0.002433373, 0.006764185, -0.009164231, -0.019761779, 0.032683574,
        0.041289209, -0.105574209, -0.062035964, 0.437991626, 0.774289604,
        0.421566206, -0.052043163, -0.091920011, 0.028168029, 0.023408157,
        -0.010131118, -0.004159359, 0.002178236, 0.000358589, -0.000212081],
}

def coif_system(m):
    M = 4 * m - 1
    def sys(h):
        r1, j1 = orth_rows(h, 3 * m)
        r2, j2 = moment_rows(h, lambda n: (-1) ** n, range(2 * m))
        r3, j3 = moment_rows(h, lambda n: 1.0, range(1, 2 * m), center=M)
        return np.array(r1 + r2 + r3), np.array(j1 + j2 + j3)
    return sys

def coiflet(m):
    h = np.array(COIF_SEEDS[m])
    h *= sqrt(2) / h.sum()
    return polish(h, coif_system(m))

def emit(name, h, res):
    print(f"// residual {res:.1e}")
    print(f"inline constexpr double {name}[] = {{")
    for i in range(0, len(h), 3):
        chunk = ", ".join(f"{v:+.17e}" for v in h[i:i + 3])
        print(f"    {chunk},")
    print("};")

def main():
    print("// Generated by tools/dev/generate_qmf_tables.py -- do not edit by hand.")
    print("// clang-format off")
    ok = True
    emit("kHaar", np.array([1, 1]) / sqrt(2), 0.0)
    for q in range(2, 11):
        h, res = daubechies(q)
        ok &= res < 1e-14
        emit(f"kDb{q}", h, res)
    for q in range(4, 11):
        h, res = symlet(q)
        ok &= res < 1e-14
        emit(f"kSym{q}", h, res)
    for m in range(1, 6):
        h, res = coiflet(m)
        ok &= res < 1e-14
        emit(f"kCoif{m}", h, res)
    print("// clang-format on")
    if not ok:
        print("warning: some residuals above 1e-14", file=sys.stderr)
        return 1
    return 0

if __name__ == "__main__":
    sys.exit(main())
