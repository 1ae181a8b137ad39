#!/usr/bin/env python3
"""Independent high-precision reference values frozen into the C++ tests.

Every quantity here is computed with mpmath directly from the defining
expectation (numerical integration over the uniform user position) rather
than from the closed forms, so it checks the C++ closed forms and the C++
quadrature from an independent route.
"""
import mpmath as mp

mp.mp.dps = 40
C = mp.mpf(299792458)


def mu(fc):
    return C**2 / (16 * mp.pi**2 * fc**2)


def dbm_to_w(p):
    return mp.mpf(10) ** ((mp.mpf(p) - 30) / 10)


def expect_edge(f, dy, h, varpi):
    # y_u ~ U[0, D_y]; in-plane offset to the waveguide line
    line = 0 if varpi == 1 else dy / 2
    return mp.quad(lambda y: f((y - line) ** 2 + h**2), [0, line, dy] if varpi == 2 else [0, dy]) / dy


def expect_diag(f, dx, dy, h):
    k = dy / dx

    def inner(x):
        return mp.quad(lambda y: f((k * x - y) ** 2 / (1 + k**2) + h**2),
                       [0, min(dy, k * x), dy] if k * x < dy else [0, dy])

    return mp.quad(inner, [0, dx]) / (dx * dy)


def main():
    fc = mp.mpf("28e9")
    m = mu(fc)
    print("mu(28 GHz)            =", mp.nstr(m, 17))
    sigma2 = dbm_to_w(-90)
    pt = mp.mpf("0.3")
    mg = m * pt / sigma2
    print("mu*gamma_bar(0.3 W)   =", mp.nstr(mg, 17))
    dx, dy, h = mp.mpf(15), mp.mpf(10), mp.mpf(3)
    a = b = mp.mpf("0.8")

    inv = lambda l: 1 / l
    for name, val in (("edge", expect_edge(inv, dy, h, 1)),
                      ("center", expect_edge(inv, dy, h, 2)),
                      ("diagonal", expect_diag(inv, dx, dy, h))):
        print(f"E_LM {name:8s} (Pt=0.3) =", mp.nstr(a * b * pt * val, 17))

    lg = lambda l: mp.log(1 + mg / l) / mp.log(2)
    for name, val in (("edge", expect_edge(lg, dy, h, 1)),
                      ("center", expect_edge(lg, dy, h, 2)),
                      ("diagonal", expect_diag(lg, dx, dy, h))):
        print(f"R {name:8s} (Pt=0.3)    =", mp.nstr((1 - a * b) * val, 17))

    # logistic harvester at a few incident powers
    phi, aa, bb = mp.mpf("0.02"), mp.mpf("1e8"), mp.mpf("2.9e-6")
    om = 1 / (1 + mp.exp(aa * bb))
    print("Omega                 =", mp.nstr(om, 17))
    Phi = lambda p: max(0, phi / (1 - om) * (1 / (1 + mp.exp(-aa * (p - bb))) - om))
    for p in ("0", "2.9e-6", "3e-6", "1"):
        print(f"Phi({p})".ljust(22), "=", mp.nstr(Phi(mp.mpf(p)), 17))

    # exact NLM average at a low power where the logistic is not saturated
    pt_low = mp.mpf("1e-4")
    # the logistic switches over ~1e-8 W; split the user axis around the
    # point where the incident power crosses b
    yc = mp.sqrt(b * pt_low / bb - h**2)
    pts = [0] + mp.linspace(yc - mp.mpf("0.3"), yc + mp.mpf("0.3"), 20) + [dy]
    val = mp.quad(lambda y: Phi(b * pt_low / (y * y + h * h)), pts) / dy
    print("E_NLM edge (Pt=1e-4)  =", mp.nstr(a * val, 17))


if __name__ == "__main__":
    main()
