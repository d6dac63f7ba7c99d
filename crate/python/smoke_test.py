"""Smoke test for the qcorona Python extension.

Build and stage the module first:

    cargo build --release -p qcorona-py --features extension-module
    cp target/release/libqcorona.so python/qcorona.so

then run ``python3 python/smoke_test.py`` from the repository root.
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import qcorona  # noqa: E402
from qcorona import HPoly, Quat  # noqa: E402

I = Quat(0, 1, 0, 0)
J = Quat(0, 0, 1, 0)
K = Quat(0, 0, 0, 1)


def check_quaternions():
    assert I * J == K and J * I == -K
    q = Quat(1, "1/2", Fraction(-3, 4), 2)
    assert q * q.inv() == Quat(1)
    assert q.components() == (Fraction(1), Fraction(1, 2), Fraction(-3, 4), Fraction(2))
    try:
        Quat(0.5)
    except ValueError:
        pass
    else:
        raise AssertionError("floats must be rejected")


def check_polynomials():
    f = HPoly.linear(I)
    g = HPoly.linear(J)
    fg = f * g
    assert fg == HPoly([K, -(I + J), Quat(1)]), str(fg)
    assert (f * g).conj() == g.conj() * f.conj()
    assert f.sym() == HPoly([Quat(1), Quat(0), Quat(1)])
    assert fg.eval(I) == Quat(0)
    big_f, big_g = g.split()
    assert big_f == [(0, 0), (1, 0)] and big_g == [(-1, 0)]
    z = qcorona.zeros(fg)
    assert z["spherical"] == [] and len(z["isolated"]) == 1
    (sphere, point), = z["isolated"]
    assert sphere == (0, 1) and point == I


def check_corona():
    fs = [HPoly.linear(I), HPoly.linear(J)]
    hs = qcorona.solve(fs)
    assert qcorona.verify(fs, hs)
    half = Fraction(1, 2)
    oracle = [HPoly.constant(Quat(0, half, -half, 0)), HPoly.constant(Quat(0, -half, half, 0))]
    assert qcorona.verify(fs, oracle)
    assert not qcorona.verify(fs, [HPoly.constant(Quat(1)), HPoly([])])

    dup = [HPoly.linear(J), HPoly.linear(J)]
    try:
        qcorona.solve(dup)
    except qcorona.CommonZeroError as e:
        assert "j on Sphere(x=0, y^2=1)" in str(e), str(e)
    else:
        raise AssertionError("(q - j, q - j) has the common zero j")
    assert qcorona.common_zeros(dup) == [("point", (0, 1), J)]

    three = [HPoly.linear(I), HPoly.linear(J), HPoly.linear(K)]
    assert qcorona.verify(three, qcorona.solve(three))


if __name__ == "__main__":
    check_quaternions()
    check_polynomials()
    check_corona()
    print("python smoke test: ok")
