"""Independent 50-digit reference values frozen into the test suite.

Written directly from the defining formulas with mpmath; it shares no code
with the package.  Run ``python3 tools/mp_oracle.py`` to regenerate.
"""

from mpmath import exp, findroot, log, mp, mpf, sqrt

mp.dps = 50


def phi(a, b, g):
    th = (g - 1) / 2
    return sqrt(th * (a ** (g - 1) - b ** (g - 1)) / ((a + b) * (a - b)))


def two_shock(rl, ul, rr, ur, g):
    """Bisection on the two-shock balance u_- - u_+ = sum of shock jumps."""
    def excess(r):
        return phi(r, rl, g) * (r - rl) + phi(r, rr, g) * (r - rr) - (ul - ur)

    lo = max(rl, rr) * (1 + mpf(10) ** -30)
    hi = lo * 2
    while excess(hi) < 0:
        hi *= 2
    for _ in range(300):
        mid = (lo + hi) / 2
        if excess(mid) < 0:
            lo = mid
        else:
            hi = mid
    r = (lo + hi) / 2
    v = ul - phi(r, rl, g) * (r - rl)
    s1 = ul - r * phi(r, rl, g)
    s2 = v + rr * phi(rr, r, g)
    return r, v, s1, s2


def two_shock_mass(rl, ul, rr, ur, g):
    """rho* (s2 - s1) evaluated at a working precision above log10 rho*.

    The root is found in ``ln rho`` by the Illinois method, then the
    cancellation in ``s2 - s1`` is resolved by the extra digits.
    """
    r0, _, _, _ = two_shock(rl, ul, rr, ur, g)  # 50 digits: enough for the exponent
    with mp.workdps(int(log(r0, 10)) + 60):
        def excess(s):
            r = exp(s)
            return phi(r, rl, g) * (r - rl) + phi(r, rr, g) * (r - rr) - (ul - ur)

        s0 = log(r0)
        s = findroot(excess, (s0 - mpf(10) ** -30 * abs(s0), s0 + mpf(10) ** -30 * abs(s0)),
                     solver="illinois", tol=mpf(10) ** -(mp.dps - 10))
        r = exp(s)
        v = ul - phi(r, rl, g) * (r - rl)
        s1 = ul - r * phi(r, rl, g)
        s2 = v + rr * phi(rr, r, g)
        return +(r * (s2 - s1))


def show(label, *vals):
    print(label, *(mp.nstr(v, 20) for v in vals))


def main():
    g = mpf("1.5")
    r, v, _, _ = two_shock(mpf(1), mpf(1), mpf(1), mpf(-1), g)
    show("symmetric rho*, v*", r, v)
    r, v, s1, s2 = two_shock(mpf("1.5"), mpf(2), mpf(2), mpf(-1), g)
    show("two-shock g=1.5 rho*, v*, s1, s2", r, v, s1, s2)

    g = mpf("1.8")
    th = (g - 1) / 2
    rth = (1 + mpf(4) ** th - mpf("1.1")) / 2
    show("two-rarefaction g=1.8 rho*, v*", rth ** (1 / th), mpf("-0.1") + 1 - rth)

    g = mpf("1.5")
    show("forward 1-curve at rho=6, phi", 2 - phi(mpf(6), mpf("1.5"), g) * (6 - mpf("1.5")),
         phi(mpf(6), mpf("1.5"), g))
    show("forward 1-curve at 0, backward 2-curve at 0", 2 + mpf("1.5") ** mpf("0.25"),
         -1 - mpf(2) ** mpf("0.25"))
    show("lambda_1 at (4, 1)", 1 - mpf("0.25") * mpf(4) ** mpf("0.25"))

    def lhs(g, rl, rr):
        th = (g - 1) / 2
        return sqrt(th * (rr ** (g - 1) - rl ** (g - 1)) / (rr ** 2 - rl ** 2))

    lo, hi = mpf(1) + mpf(10) ** -20, mpf(2)
    for _ in range(200):
        mid = (lo + hi) / 2
        if lhs(mid, mpf(1), mpf(100)) < mpf("0.1") / 99:
            lo = mid
        else:
            hi = mid
    show("two-shock threshold (1, 100, 0.1)", lo)
    show("two-rarefaction threshold (1, 100, 0.5)", 1 + 2 * log(mpf("1.5")) / log(100))

    g = mpf("1.01")
    th = (g - 1) / 2
    rth = (1 + mpf(4) ** th - mpf("1.1")) / 2
    show("two-rarefaction g=1.01 rho*^theta, log10 rho*", rth, log(rth) / th / log(10))
    show("  rho at xi=0, outer 1-edge", (mpf("0.9") / (1 + th)) ** (1 / th), mpf("-0.1") - th)

    # 1.0001 needs ~46600 digits and takes about half a minute
    for gs in ["1.7", "1.1", "1.05", "1.01", "1.001", "1.0001"]:
        g = mpf(gs)
        th = (g - 1) / 2
        r, v, s1, s2 = two_shock(mpf("1.5"), mpf(2), mpf(2), mpf(-1), g)
        show(f"sweep g={gs} log10 rho*, v*, a, s1, s2, mass", log(r, 10), v,
             th * r ** (g - 1), s1, s2, two_shock_mass(mpf("1.5"), mpf(2), mpf(2), mpf(-1), g))


if __name__ == "__main__":
    main()
