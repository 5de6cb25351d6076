#!/usr/bin/env python3
"""Independent oracle for the frozen constants in the C++ test suites.

Evaluates every derived expected value with 50-digit arithmetic (mpmath),
straight from the defining formulas, with no dependency on the C++ library.
Run it to regenerate the constants; the test files quote its output verbatim.
"""

from mpmath import mp, mpf, tanh, atanh, exp, sqrt

mp.dps = 50


def emit(name, value):
    # 17 significant digits: enough to pin the nearest binary64.
    print(f"{name:32s} = {mpf(value)}")


def f_rn(r, r_s, r_q):
    return 1 - r_s / r + (r_q / r) ** 2


def f_desitter(r, a):
    return 1 - (r / a) ** 2


def strokes(p_a, p_b, gap_a, chi):
    w1 = (1 - p_a) / 2 * (chi - 1) * gap_a
    q2 = -(p_b - p_a) / 2 * chi * gap_a
    w3 = -(1 - p_b) / 2 * (chi - 1) * gap_a
    q4 = (p_b - p_a) / 2 * gap_a
    return w1, q2, w3, q4


print("# thermo")
emit("tanh(1)", tanh(1))
emit("(1-tanh(1))/2", (1 - tanh(1)) / 2)
emit("tanh(0.5)", tanh(mpf(1) / 2))
emit("tanh(2/3)", tanh(mpf(2) / 3))
emit("purity(1, 1e6)", tanh(1 / (2 * mpf("1e6"))))

print("# stroke tuple: p_a=tanh(0.5), p_b=tanh(2/3), gap_a=1, chi=2")
p_a = tanh(mpf(1) / 2)
p_b = tanh(mpf(2) / 3)
w1, q2, w3, q4 = strokes(p_a, p_b, 1, 2)
emit("w1", w1)
emit("q2", q2)
emit("w3", w3)
emit("q4", q4)
emit("q4/(w1+w3)", q4 / (w1 + w3))

print("# spacetime")
emit("f_rn(4; 2, 0)", f_rn(4, 2, 0))
emit("chi rn 1e9->4 (rs=2)", sqrt(f_rn(mpf("1e9"), 2, 0) / f_rn(4, 2, 0)))
emit("r_plus(rs=2, rq=0.8)", 1 + sqrt(1 - mpf("0.8") ** 2))
emit("chi uniform g=1e-16 dz=3.5e7", (1 + mpf("1e-16") * mpf("3.5e7")))

print("# bounds")
emit("desitter bound a=1 rA=.1 rB=.9", sqrt(f_desitter(mpf("0.9"), 1) / f_desitter(mpf("0.1"), 1)))
emit("rn bound rs=2 rB=4 rA=8", sqrt(f_rn(4, 2, 0) / f_rn(8, 2, 0)))
emit("earth 1/(1+3.5e-9)", 1 / (1 + mpf("1e-16") * mpf("3.5e7")))
emit("1-3.5e-9", 1 - mpf("3.5e-9"))

print("# cop")
emit("cop(1+3.5e-9)", 1 / (mpf("3.5e-9")))

print("# mc scenario chi=2 Tc=1 Th=1.5 gap=1 (same strokes as above)")
e_a = (1 - p_a) / 2
e_b = (1 - p_b) / 2
emit("P(excited|alice)", e_a)
emit("P(excited|bob)", e_b)
