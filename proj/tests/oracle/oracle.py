"""Independent reference values computed with Python's Fraction/math.comb.

Used once to freeze expected values into the C++ tests. Not part of the build.
"""
from fractions import Fraction as F
from math import comb, factorial


def d(m, l):
    s = sum(2**k * comb(2*m - 2*k, m - k) * comb(m + k, m) * comb(k, l) for k in range(l, m + 1))
    return F(s, 4**m)


def row(m):
    return [d(m, l) for l in range(m + 1)]


def T(m):
    return sum(F(comb(2*r, r) * comb(m + 1, r) * (r - 1), 2**r * comb(4*m, r)) for r in range(2, m + 2))


def S(m, l):
    return sum(F(comb(m - l, m - k) * comb(m + k, 2*k) * (2*l + 1 - k), comb(2*m, 2*k) * 2**(m - k))
               for k in range(l, 2*l + 1))


def poch(x, k):
    p = F(1)
    for i in range(k):
        p *= x + i
    return p


def f21(a, b, c, z):
    n = -b
    return sum(poch(a, k) * poch(b, k) / (poch(c, k) * factorial(k)) * F(z)**k for k in range(int(n) + 1))


def L(l):
    n = len(l)
    g = lambda i: l[i] if 0 <= i < n else 0
    return [g(i)**2 - g(i-1)*g(i+1) for i in range(n)]


if __name__ == "__main__":
    print("row2", row(2), "row1", row(1))
    print("binom(20,10)", comb(20, 10))
    print("T1..3", T(1), T(2), T(3), "T10", T(10))
    print("S(4,1)", S(4, 1))
    for m in (5, 6, 7):
        print("S row", m, [S(m, l) for l in range(0, (m - 1)//2 + 1)])
    ok = all(S(2*m, m-1) == T(m) for m in range(1, 20))
    print("S(2m,m-1)==T", ok)
    # S monotone incl odd top
    bad = []
    for m in range(2, 80):
        vals = [S(m, l) for l in range((m - 1)//2 + 1)]
        if any(vals[i] >= vals[i+1] for i in range(len(vals)-1)):
            bad.append(m)
    print("S nonmonotone up to floor((m-1)/2):", bad)
    print("S top < 1:", all(S(m, (m-1)//2) < 1 for m in range(2, 80)))
    # minimum functional
    def mf(m, l, corrected=True):
        b = [4**m * x for x in row(m)]
        last = b[l-1]*b[l] if corrected else b[l-1]
        return (m+l)*(m+1-l)*b[l-1]**2 + l*(l+1)*b[l]**2 - l*(2*m+1)*last
    ok = True
    for m in range(2, 25):
        v = [mf(m, l) for l in range(1, m+1)]
        if min(v) != v[-1] or v[-1] != 4**m*m*(m+1)*comb(2*m, m)**2:
            ok = False; print("mf fail", m)
    print("minfunc corrected ok", ok, "mf(1,1)", mf(1, 1), "printed mf(m,m) m=3", mf(3, 3, False))
    # W corrected identity
    def W(m):
        return [F(comb(2*r, r)*comb(m+1, r), comb(4*m, r)) for r in range(m+2)]
    def ev(p, x):
        return sum(c*x**i for i, c in enumerate(p))
    def der(p):
        return [i*c for i, c in enumerate(p)][1:]
    x = F(1, 2)
    print("tviaW ok", all(x*ev(der(W(m)), x) - ev(W(m), x) + 1 == T(m) for m in range(1, 30)))
    print("printed cor4.5 m=1", F(1, 2)*ev(der(W(1)), x) - ev(W(1), x))
    print("hyp m=1", 1 - f21(F(1,2), -2, -4, 2) + F(2, 4)*f21(F(3,2), -1, -3, 2))
    print("hyp eq", all(1 - f21(F(1,2), -1-m, -4*m, 2) + F(m+1, 4*m)*f21(F(3,2), -m, 1-4*m, 2) == T(m) for m in range(1, 30)))
    # hyp poly m=2
    print("f21(1/2,-2,-4,2)", f21(F(1,2), -2, -4, 2), "f21(3/2,-1,-3,2)", f21(F(3,2), -1, -3, 2))
    # integral rep
    def tint(m):
        a, b, c = F(5, 2), 1-m, 2-4*m
        coeffs = [poch(a, k)*poch(b, k)/(poch(c, k)*factorial(k)) for k in range(m)]
        integ = sum(cf * F(2**(k+2), k+2) for k, cf in enumerate(coeffs))
        return F(3*(m+1), 16*(4*m-1)) * integ
    print("tint", all(tint(m) == T(m) for m in range(1, 30)))
    # recurrence
    A = [7195230, 87693273, 448856568, 1263033897, 2147597568, 2279791176, 1502157312, 586779648, 121208832, 9732096]
    B = [9661680, 123557904, 651005760, 1865031680, 3206772480, 3428727552, 2272235520, 894167040, 187269120, 15499264]
    C = [3265920, 41472576, 217055232, 618806528, 1062162432, 1139030016, 762052608, 305528832, 66060288, 5767168]
    D = [-799470, -5607945, -14906040, -16808745, -2987520, 9906360, 8025600, 1858560]
    P = lambda cs, n: sum(c*n**i for i, c in enumerate(cs))
    print("b=a+c+d", all(B[i] == A[i] + C[i] + (D[i] if i < len(D) else 0) for i in range(10)))
    print("residuals", [P(A, n)*T(n) - P(B, n)*T(n+1) + P(C, n)*T(n+2) + P(D, n) for n in range(1, 8)])
    # d(x+2)
    import sympy
    xs = sympy.symbols('x')
    print("d(x+2)", sympy.Poly(sympy.expand(P(D, xs + 2)), xs).all_coeffs()[::-1])
    # hyp ineq conj
    def conj(m, x):
        Lv = f21(F(3,2), -m-2, -4*m-4, 4*x) - f21(F(3,2), -m-1, -4*m, 4*x)
        Rv = 3*(f21(F(1,2), -m-2, -4*m-4, 4*x) - f21(F(1,2), -m-1, -4*m, 4*x))
        return Lv - Rv
    bad = [(m, x) for m in range(1, 41) for x in [F(2+i, 4) for i in range(19)] if conj(m, x) <= 0]
    print("conj bad", bad[:10], len(bad))
    print("conj m=1 x=1/2", conj(1, F(1,2)), "m=2", conj(2, F(1,2)))
    # ilogconcave depth 5
    badL = []
    for m in range(0, 41):
        s = row(m)
        for it in range(1, 6):
            s = L(s)
            if any(v < 0 for v in s):
                badL.append((m, it)); break
    print("ilogc bad", badL)
    print("L(1,4,6,4,1)", L([1, 4, 6, 4, 1]))
    print("quad P2(1)", sum(row(2)))
