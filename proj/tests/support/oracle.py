"""Independent high-precision oracle for the gauge potentials and fields.

Builds Omega, phi_F, A and V symbolically, takes curl / gradients / time
derivatives with sympy and evaluates at 40 digits. Prints C++ initializers
for tests/support/oracle_values.hpp.
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 40

HBAR = sp.Rational("1.054571817e-34")
E_CHARGE = sp.Rational("1.602176634e-19")
MASS = sp.Rational("2.20695e-25")
LAMBDA = sp.Rational("852.35e-9")
GAMMA = 2 * sp.pi * sp.Rational("5.22e6")

r, phi, z, t = sp.symbols("r phi z t", real=True)


def fields(l, p, w0, rabi0, delta, dw, standard_lg):
    k = 2 * sp.pi / LAMBDA
    zr = sp.pi * w0**2 / LAMBDA
    w = w0 * sp.sqrt(1 + (z / zr) ** 2)
    a = abs(l)
    if standard_lg:
        norm = sp.sqrt(sp.factorial(p) / sp.factorial(a + p))
    else:
        norm = sp.sqrt(sp.factorial(p) / (sp.factorial(a) + sp.factorial(p)))
    rho = r / w
    env = 2 * rabi0 * norm * (sp.sqrt(2) * rho) ** a * sp.assoc_laguerre(p, a, 2 * rho**2) * sp.exp(-rho**2)
    om = env * sp.cos(l * phi - dw * t / 2)
    gouy = 2 * p + a + 1
    phase = k * z - gouy * sp.atan(z / zr) + k * r**2 * z / (2 * (z**2 + zr**2))

    def grad(f):
        return [sp.diff(f, r), sp.diff(f, phi) / r, sp.diff(f, z)]

    D = delta**2 + om**2
    cos_t = delta / sp.sqrt(D)
    gphase = grad(phase)
    A = [HBAR / (2 * E_CHARGE) * (cos_t - 1) * g for g in gphase]
    Ar, Ap, Az = A
    B = [sp.diff(Az, phi) / r - sp.diff(Ap, z), sp.diff(Ar, z) - sp.diff(Az, r),
         (sp.diff(r * Ap, r) - sp.diff(Ar, phi)) / r]
    gom = grad(om)
    V = HBAR**2 / (8 * MASS) * (delta**2 * sum(g**2 for g in gom) / D**2 + om**2 * sum(g**2 for g in gphase) / D)
    gV = grad(V)
    E = [-sp.diff(A[i], t) - gV[i] / E_CHARGE for i in range(3)]
    return om, phase, A, V, B, E


def evaluate(expr, point):
    return sp.N(expr.subs(point), 30)


def case(name, l, p, w0, rabi0, delta, dw, standard_lg, point):
    om, phase, A, V, B, E = fields(l, p, w0, rabi0, delta, dw, standard_lg)
    vals = {
        "rabi": evaluate(om, point),
        "phase": evaluate(phase, point),
        "A": [evaluate(c, point) for c in A],
        "V": evaluate(V, point),
        "B": [evaluate(c, point) for c in B],
        "E": [evaluate(c, point) for c in E],
    }
    fmt = lambda x: f"{float(sp.N(x, 30)):.17e}"
    print(f"// {name}")
    print(f"inline constexpr OracleCase {name}{{")
    print(f"    {l}, {p}, {fmt(w0)}, {fmt(rabi0)}, {fmt(delta)}, {fmt(dw)}, {'true' if standard_lg else 'false'},")
    print(f"    {{{fmt(point[r])}, {fmt(point[phi])}, {fmt(point[z])}, {fmt(point[t])}}},")
    print(f"    {fmt(vals['rabi'])}, {fmt(vals['phase'])}, {fmt(vals['V'])},")
    for key in ("A", "B", "E"):
        print(f"    {{{', '.join(fmt(c) for c in vals[key])}}},")
    print("};")


w0 = sp.Rational("5e-6")
case("kFig1Static", 1, 0, w0, 10 * GAMMA, 100 * GAMMA, 0, False,
     {r: sp.Rational(7, 10) * w0, phi: sp.Rational(2, 5), z: sp.Rational(3, 10) * w0, t: 0})
case("kFig1Peak", 1, 0, w0, 10 * GAMMA, 100 * GAMMA, 0, False,
     {r: w0 / sp.sqrt(2), phi: 0, z: 0, t: 0})
case("kFig3Rotating", 2, 0, w0, 10 * GAMMA, 100 * GAMMA, 8 * GAMMA, False,
     {r: sp.Rational(11, 10) * w0, phi: 2, z: -sp.Rational(1, 5) * w0, t: sp.Rational("3e-9")})
case("kRadialP1", -1, 1, w0, 20 * GAMMA, -50 * GAMMA, 4 * GAMMA, True,
     {r: sp.Rational(13, 10) * w0, phi: sp.Rational(-7, 10), z: sp.Rational(1, 2) * w0, t: sp.Rational("1e-8")})

print("inline constexpr LaguerreValue kLaguerreTable[] = {")
for p in range(7):
    for a in range(7):
        for x in ("0", "0.5", "1", "2.5", "5", "10", "20"):
            v = sp.N(sp.assoc_laguerre(p, a, sp.Rational(x)), 30)
            print(f"    {{{p}, {a}, {x}, {float(v):.17e}}},")
print("};")
