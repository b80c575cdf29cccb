"""Generate Taylor coefficients of the Riemann-Siegel correction terms C0..C4.

Each C_k(p) is expanded in powers of u = p - 1/2, where p is the fractional
part of sqrt(t / 2pi). The expansions come from exact power-series division of
Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p) at 250 digits, so no numerical
differentiation is involved. Output is a C++ include file.

    python3 tools/oracle/gen_rs_coefficients.py > src/rs_coefficients.inc
"""
import mpmath as mp

mp.mp.dps = 250
DEGREE = 200          # working degree of the Psi series
CUTOFF = mp.mpf("1e-22")  # drop trailing terms below this on |u| <= 1/2


def cos_series(scale, shift, degree, in_square):
    """Coefficients of cos(scale * v + shift), v = u^2 if in_square else u."""
    out = [mp.mpf(0)] * (degree + 1)
    k = 0
    while True:
        power = 2 * k if in_square else k
        if power > degree:
            break
        # d^k/dv^k cos(scale v + shift) at 0 = scale^k cos(shift + k pi/2)
        out[power] = scale ** k * mp.cos(shift + k * mp.pi / 2) / mp.factorial(k)
        k += 1
    return out


def divide(num, den, degree):
    q = [mp.mpf(0)] * (degree + 1)
    for n in range(degree + 1):
        acc = num[n]
        for j in range(1, n + 1):
            acc -= den[j] * q[n - j]
        q[n] = acc / den[0]
    return q


def derivative(series, order):
    out = list(series)
    for _ in range(order):
        out = [out[i] * i for i in range(1, len(out))] + [mp.mpf(0)]
    return out


def combine(terms, degree):
    out = [mp.mpf(0)] * (degree + 1)
    for coeff, series in terms:
        for i in range(degree + 1):
            out[i] += coeff * series[i]
    return out


def main():
    pi = mp.pi
    num = cos_series(2 * pi, -5 * pi / 8, DEGREE, in_square=True)
    den = [-c for c in cos_series(2 * pi, mp.mpf(0), DEGREE, in_square=False)]
    psi = divide(num, den, DEGREE)
    d = lambda k: derivative(psi, k)
    c = [
        psi,
        combine([(-1 / (96 * pi**2), d(3))], DEGREE),
        combine([(1 / (18432 * pi**4), d(6)), (1 / (64 * pi**2), d(2))], DEGREE),
        combine([(-1 / (5308416 * pi**6), d(9)), (-1 / (3840 * pi**4), d(5)),
                 (-1 / (64 * pi**2), d(1))], DEGREE),
        combine([(1 / (2038431744 * pi**8), d(12)), (11 / (5898240 * pi**6), d(8)),
                 (19 / (24576 * pi**4), d(4)), (1 / (128 * pi**2), psi)], DEGREE),
    ]
    # sanity: C0 against direct evaluation of Psi
    for p in [mp.mpf("0.03"), mp.mpf("0.26"), mp.mpf("0.61"), mp.mpf("0.97")]:
        direct = mp.cos(2 * pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * pi * p)
        series = mp.polyval(list(reversed(psi)), p - mp.mpf("0.5"))
        assert abs(direct - series) < mp.mpf("1e-30"), (p, direct, series)

    print("// Generated by tools/oracle/gen_rs_coefficients.py; do not edit.")
    print("// Taylor coefficients of C_k(p) in powers of u = p - 1/2, ascending.")
    for k, series in enumerate(c):
        last = 0
        for i, v in enumerate(series):
            if abs(v) * mp.mpf("0.5") ** i > CUTOFF:
                last = i
        print(f"inline constexpr double kRsC{k}[] = {{")
        for i in range(last + 1):
            v = series[i] if abs(series[i]) > mp.mpf("1e-120") else mp.mpf(0)
            print(f"    {mp.nstr(v, 20, min_fixed=1, max_fixed=0)},")
        print("};")


if __name__ == "__main__":
    main()
