"""Independent high-precision oracle for the frozen constants in the C++ tests.

Everything here is computed by direct series summation in mpmath at 30 digits,
sharing no code with the library. Run with `python3 frozen_values.py`.
"""
import mpmath as mp

mp.mp.dps = 30


def qint(k, q):
    return sum(q**j for j in range(k))


def qfact(k, q):
    r = mp.mpf(1)
    for j in range(1, k + 1):
        r *= qint(j, q)
    return r


def e_q(x, q, terms=4000):
    s, t, qk = mp.mpf(0), mp.mpf(1), mp.mpf(1)
    for k in range(terms):
        if k > 0:
            t *= x / qk
            qk = 1 + q * qk
        s += t
    return s


def appell_weights(coeffs, y, q, terms):
    base = [mp.mpf(1)]
    qk = mp.mpf(1)
    for k in range(1, terms):
        base.append(base[-1] * y / qk)
        qk = 1 + q * qk
    return [sum(a * base[k - j] for j, a in enumerate(coeffs) if k - j >= 0)
            for k in range(terms)]


def operator(coeffs, n, q, bn, x, f, terms=1500):
    q, bn, x = mp.mpf(q), mp.mpf(bn), mp.mpf(x)
    nq = qint(n, q)
    y = nq * x / bn
    w = appell_weights(coeffs, y, q, terms)
    norm = sum(coeffs) * e_q(y, q, terms)
    acc = mp.mpf(0)
    qk = mp.mpf(0)
    for k in range(terms):
        acc += w[k] * f(qk * bn / nq)
        qk = 1 + q * qk
    return acc / norm


ONE, AFFINE, QUAD = [1], [1, 1], [1, 1, mp.mpf(1) / 2]

if __name__ == "__main__":
    q = mp.mpf("0.5")
    print("e_q(1.9; 0.5)             =", mp.nstr(e_q(mp.mpf("1.9"), q), 20))
    for i in (1, 2):
        v = operator(AFFINE, 10, "0.8", 2, "0.5", lambda s, i=i: s**i)
        print(f"affine n=10 q=.8 b=2 x=.5 m{i} =", mp.nstr(v, 20))
    v = operator(QUAD, 20, "0.95", mp.sqrt(20), "1.5", lambda s: mp.sin(s))
    print("quad n=20 q=.95 b=sqrt20 x=1.5 sin =", mp.nstr(v, 20))
    v = operator(ONE, 30, "0.99", mp.sqrt(30), "1", lambda s: mp.sin(s))
    print("one n=30 q=.99 b=sqrt30 x=1 sin =", mp.nstr(v, 20))

    # phi_n for affine, n = 100, q = 0.95, b = sqrt(10), grid [0,1] x 101.
    n, qq, bn = 100, mp.mpf("0.95"), mp.sqrt(10)
    nq = qint(n, qq)
    best = mp.mpf(0)
    for i in range(101):
        x = mp.mpf(i) / 100
        m1 = operator(AFFINE, n, qq, bn, x, lambda s: s)
        m2 = operator(AFFINE, n, qq, bn, x, lambda s: s * s)
        shift = m1 - x
        best = max(best, m2 - 2 * x * m1 + x * x + shift**2)
    print("phi_n affine n=100 q=.95 b=sqrt10 [0,1]x101 =", mp.nstr(best, 20))

    # Korovkin e_2 error, affine family, smooth schedule at n = 1024,
    # grid [0, 1.9] x 20 points.
    n = 1024
    qq = 1 - 1 / mp.sqrt(n)
    bn = mp.mpf(n) ** mp.mpf("0.25")
    err = mp.mpf(0)
    for i in range(20):
        x = mp.mpf("1.9") * i / 19
        m2 = operator(AFFINE, n, qq, bn, x, lambda s: s * s, terms=2500)
        err = max(err, abs(m2 - x * x) / (1 + x * x))
    print("korovkin v2 affine smooth n=1024 [0,1.9]x20 =", mp.nstr(err, 20))
