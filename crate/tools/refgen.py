#!/usr/bin/env python3
"""High-precision reference fixtures for the Faddeeva function and friends.

Every coordinate is first rounded to binary64 and then lifted exactly into
mpmath, so the reference corresponds to the argument the double-precision
code actually receives.

Modes:
  (default)     inclusive grid, rows ordered im-outer / re-inner
  --axis        real-axis and imaginary-axis points of w on [lo, hi]
  --functions   real-valued error-like functions on a 1-D grid
  --sector      seeded random sample inside -pi/4 < arg z < 5pi/4
"""

import argparse
import math
import random
import sys

import mpmath
from mpmath import mp


def linspace(lo, hi, n):
    if n == 1:
        return [lo]
    # Same operation order as the Rust grid builder.
    return [lo + (hi - lo) * float(i) / float(n - 1) for i in range(n)]


def fmt_z(x):
    return repr(float(x))


def fmt_val(v, digits):
    if v == 0:
        return "0.0"
    return mpmath.nstr(v, digits, min_fixed=1, max_fixed=0, strip_zeros=False)


def faddeeva(zr, zi):
    z = mpmath.mpc(mpmath.mpf(zr), mpmath.mpf(zi))
    return mpmath.exp(-z * z) * mpmath.erfc(-1j * z)


def w_row(zr, zi, digits):
    w = faddeeva(zr, zi)
    return "%s,%s,%s,%s\n" % (fmt_z(zr), fmt_z(zi), fmt_val(w.real, digits), fmt_val(w.imag, digits))


def write_rows(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(header)
        for r in rows:
            f.write(r)


def grid_rows(a, digits):
    res = linspace(a.re_min, a.re_max, a.nre)
    ims = linspace(a.im_min, a.im_max, a.nim)
    for y in ims:
        for x in res:
            yield w_row(x, y, digits)


def axis_rows(a, digits):
    xs = linspace(a.re_min, a.re_max, a.nre)
    for x in xs:
        yield w_row(x, 0.0, digits)
    for y in xs:
        if y == 0.0:
            continue
        yield w_row(0.0, y, digits)


def function_rows(a, digits):
    sqrt_pi = mpmath.sqrt(mp.pi)
    for x in linspace(a.re_min, a.re_max, a.nre):
        t = mpmath.mpf(x)
        erfc = mpmath.erfc(t)
        erfi = mpmath.erfi(t)
        dawson = sqrt_pi / 2 * mpmath.exp(-t * t) * erfi
        imw = 2 / sqrt_pi * dawson
        vals = [mpmath.erf(t), erfc, mpmath.exp(t * t) * erfc, erfi, dawson, imw]
        yield fmt_z(x) + "," + ",".join(fmt_val(v, digits) for v in vals) + "\n"


def sector_rows(a, digits):
    rng = random.Random(a.seed)
    for band_lo, band_hi, count in ((1.0, 26.0, a.count), (30.0, 50.0, a.count_far)):
        for _ in range(count):
            r = rng.uniform(band_lo, band_hi)
            phi = rng.uniform(-0.25 * math.pi, 1.25 * math.pi)
            x, y = r * math.cos(phi), r * math.sin(phi)
            yield w_row(x, y, digits)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--re-min", type=float, default=-6.0)
    p.add_argument("--re-max", type=float, default=6.0)
    p.add_argument("--im-min", type=float, default=-6.0)
    p.add_argument("--im-max", type=float, default=6.0)
    p.add_argument("--nre", type=int, default=241)
    p.add_argument("--nim", type=int, default=241)
    p.add_argument("--bits", type=int, default=236)
    p.add_argument("--digits", type=int, default=32)
    p.add_argument("--out", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--axis", action="store_true")
    mode.add_argument("--functions", action="store_true")
    mode.add_argument("--sector", action="store_true")
    p.add_argument("--seed", type=int, default=20240521)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--count-far", type=int, default=100)
    a = p.parse_args(argv)

    if a.bits < 236:
        p.error("--bits must be at least 236")
    if a.digits < 30 or a.digits > int(a.bits * math.log10(2)) - 10:
        p.error("--digits must be in [30, bits*log10(2) - 10]")
    if min(a.nre, a.nim) < 1:
        p.error("grid sizes must be positive")
    mp.prec = a.bits

    if a.axis:
        write_rows(a.out, "z_re,z_im,w_re,w_im\n", axis_rows(a, a.digits))
    elif a.functions:
        write_rows(a.out, "x,erf,erfc,erfcx,erfi,dawson,imw\n", function_rows(a, a.digits))
    elif a.sector:
        write_rows(a.out, "z_re,z_im,w_re,w_im\n", sector_rows(a, a.digits))
    else:
        write_rows(a.out, "z_re,z_im,w_re,w_im\n", grid_rows(a, a.digits))
    return 0


if __name__ == "__main__":
    sys.exit(main())
