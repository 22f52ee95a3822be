"""High-precision reference values frozen into the Rust test suites.

Run with `python3 tools/oracle.py`. Uses mpmath at 50 digits; nothing here
shares code with the Rust implementation.
"""
from mpmath import mp, mpf, sqrt, exp, coth, asinh, findroot, log

mp.dps = 50
HBAR = mpf("1.054571817e-34")
KB = mpf("1.380649e-23")

PRESETS = {
    "fig2": dict(cl=mpf("148e-6"), ll=mpf("595e-6"), cr=mpf("35e-3"), lr=mpf("480e-12")),
    "fig3": dict(cl=mpf("250e-6"), ll=mpf("6.50e-3"), cr=mpf("9.0e-3"), lr=mpf("350e-12")),
    "fig4": dict(cl=mpf("550e-6"), ll=mpf("1.00e-3"), cr=mpf("45e-3"), lr=mpf("600e-12")),
}


def x_arg(w, t, conv):
    x = HBAR * w / (KB * t)
    return x if conv == "direct" else x / 2


def subtrahend(p, n, t, w, fl, z0, conv, elem):
    b = HBAR * (1 + 2 * n) * coth(x_arg(w, t, conv)) / ((p["cr"] + p["cl"]) * z0**3 * fl * elem ** mpf(2.5))
    return mpf(2) ** (mpf(-2) / 5) * b ** (mpf(2) / 5)


def eps(p, n, t, w, fl, z0, conv="direct"):
    return p["cr"] - subtrahend(p, n, t, w, fl, z0, conv, p["ll"])


def mu(p, n, t, w, fl, z0, conv="direct"):
    return p["lr"] - subtrahend(p, n, t, w, fl, z0, conv, p["cl"])


def z0_solve(p, n, t, w, fl, conv="direct"):
    # eps = 0 solved numerically in log z0, independent of the closed form
    f = lambda lz: eps(p, n, t, w, fl, exp(lz), conv)
    return exp(findroot(f, log(mpf("1e-6"))))


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


p2, p3, p4 = PRESETS["fig2"], PRESETS["fig3"], PRESETS["fig4"]
show("fig2 omega_r", 1 / sqrt(p2["lr"] * p2["cr"]))
show("fig2 omega_l", 1 / sqrt(p2["ll"] * p2["cl"]))
wr = 1 / sqrt(p2["lr"] * p2["cr"]); wl = 1 / sqrt(p2["ll"] * p2["cl"]); k = p2["lr"] * p2["cl"] + p2["ll"] * p2["cr"]
w = mpf("2.9e9")
show("fig2 beta_sq(2.9e9)", (w / wr) ** 2 + (wl / w) ** 2 - k * wl**2)
show("fig3 classical eps(2.9e9)", p3["cr"] - 1 / (w**2 * p3["ll"]))
show("fig2 classical mu(1e9)", p2["lr"] - 1 / (mpf("1e18") * p2["cl"]))
show("n0(2.9e9,150)", 1 / (exp(HBAR * w / (KB * 150)) - 1))
show("asinh(1)", asinh(1))
for x in ["1e-8", "1e-6", "1e-4", "1", "20", "50"]:
    show(f"coth({x})", coth(mpf(x)))
for conv in ["direct", "tfd"]:
    c = p3["cr"] + p3["cl"]
    fl = HBAR * w**5 * 3 * coth(x_arg(w, 170, conv)) / (2 * c * mpf("1e-6") ** 3)
    show(f"fig3 fluct n=1 T=170 z0=1e-6 [{conv}]", fl)

z2 = z0_solve(p2, 5, 85, mpf("3e9"), 25)
z3 = z0_solve(p3, 1, 170, w, 1)
z4 = z0_solve(p4, 1, 300, w, mpf("1.0"))
show("z0 fig2", z2); show("z0 fig3", z3); show("z0 fig4", z4)

for t in [5, 35, 85, 150]:
    r = findroot(lambda lw: eps(p2, 5, t, exp(lw), 25, z2), log(mpf("3e9") * t / 85))
    show(f"fig2 omega*(T={t})", exp(r))
for n in [1, 3, 6, 10]:
    r = findroot(lambda lt: eps(p3, n, exp(lt), w, 1, z3), log(mpf(170) * 3 / (1 + 2 * n)))
    show(f"fig3 T*(n={n})", exp(r))
for fl in ["1.0", "1.5", "3.0", "4.5"]:
    r = findroot(lambda lt: eps(p4, 1, exp(lt), w, mpf(fl), z4), log(300 * mpf(fl)))
    show(f"fig4 T*(fluct={fl})", exp(r))
