"""Independent arbitrary-precision oracle for the test fixtures.

Everything here uses mpmath only; none of the C++ code paths are involved.
Run once from the repository root and commit the outputs:

    python3 tools/oracle/gen_fixtures.py tests/fixtures
"""
import random
import sys
from pathlib import Path

import mpmath as mp

EULER = mp.euler


def g17(x):
    return mp.nstr(mp.mpf(x), 17, min_fixed=-5, max_fixed=8, strip_zeros=False)


def z_fixture(out):
    mp.mp.dps = 50
    rng = random.Random(20181107)
    ts = sorted(rng.uniform(50.0, 1.0e4) for _ in range(1000))
    with open(out / "z_oracle.csv", "w", newline="\n") as f:
        f.write("t,z\n")
        for t in ts:
            # t is taken exactly as the double written out at 17 digits
            td = float(repr(t))
            f.write(f"{td!r},{g17(mp.siegelz(mp.mpf(td)))}\n")


def zeros_fixture(out):
    mp.mp.dps = 30
    with open(out / "zeros_below_100.csv", "w", newline="\n") as f:
        f.write("n,t\n")
        n = 1
        while True:
            z = mp.zetazero(n).imag
            if z > 100:
                break
            f.write(f"{n},{g17(z)}\n")
            n += 1


def hl_segment(a, b, width=mp.mpf("0.25")):
    """int_a^b Z(t)^2 dt by composite Gauss-Legendre with an error probe."""
    a, b = mp.mpf(a), mp.mpf(b)
    pts = [a]
    x = a
    while x + width < b:
        x += width
        pts.append(x)
    pts.append(b)
    f = lambda t: mp.siegelz(t) ** 2
    fine = mp.quad(f, pts, method="gauss-legendre")
    coarse = mp.quad(f, pts[::2] + ([b] if pts[::2][-1] != b else []),
                     method="gauss-legendre")
    # Both rules can agree to working precision; never claim better than it.
    floor = abs(fine) * mp.mpf(10) ** (-(mp.mp.dps - 3))
    return fine, max(abs(fine - coarse), floor)


def scalar_fixture(out):
    mp.mp.dps = 30
    rows = []
    rows.append(("theta_100", mp.siegeltheta(100), 0))
    rows.append(("gram_first", mp.grampoint(0), 0))
    rows.append(("z_10", mp.siegelz(10), 0))
    rows.append(("z_30_sq", mp.siegelz(30) ** 2, 0))
    rows.append(("lngamma_10", mp.log(mp.factorial(9)), 0))

    mp.mp.dps = 20
    j100, e100 = hl_segment(0, 100)
    rows.append(("J_100", j100, e100))
    seg, eseg = hl_segment(100, 1000)
    rows.append(("J_1000", j100 + seg, e100 + eseg))

    rep = lambda phi: phi * mp.log(phi) + (EULER - mp.log(2 * mp.pi)) * phi
    # phi1(100): rep(phi) = J(100)
    phi = mp.findroot(lambda p: rep(p) - j100, mp.mpf(90))
    rows.append(("phi1_100", phi, 0))
    # reverse iterate of 100: J(T1) = rep(100)
    target = rep(mp.mpf(100))
    f = lambda t1: j100 + hl_segment(100, t1, mp.mpf("0.5"))[0] - target
    t1 = mp.findroot(f, (mp.mpf(108), mp.mpf(112)), solver="secant", tol=1e-18)
    rows.append(("reverse_100", t1, 0))

    with open(out / "oracle_scalars.csv", "w", newline="\n") as fh:
        fh.write("key,value,abs_err\n")
        for key, v, e in rows:
            fh.write(f"{key},{g17(v)},{mp.nstr(mp.mpf(e), 3)}\n")


if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
    out.mkdir(parents=True, exist_ok=True)
    which = sys.argv[2:] or ["z", "zeros", "scalars"]
    if "z" in which:
        z_fixture(out)
    if "zeros" in which:
        zeros_fixture(out)
    if "scalars" in which:
        scalar_fixture(out)
