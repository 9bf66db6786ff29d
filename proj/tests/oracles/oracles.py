"""Reference values for the unit tests, computed with mpmath quadrature."""
from mpmath import mp, mpc, mpf, quad, conj, im, polar

mp.dps = 30
I = mpc(0, 1)


def monomial_field(n, z):
    return quad(lambda t: -I * t**2 * (z - 2 * I * t) ** n, [0, im(z)])


def xi_c(f, c, z):
    return quad(lambda t: I * t**2 * conj(f(conj(z) + 2 * I * t)), [im(z), c])


def wolpert_field(f, w, z):
    g = lambda s: (conj(z) - (w + s * (z - w))) ** 2 * f(w + s * (z - w)) * (z - w)
    return conj(quad(g, [0, 1]))


def printed_kernel_mass(eps):
    s = 1 - eps
    return 8 * eps**3 * (6 * s - 12 * s**3 + 8 * s**5 - 2 * s**7) / (2 * (1 - s**2) ** 4)


def show(name, v):
    v = mpc(v)
    print(f"{name}: {mp.nstr(v.real, 17)} {mp.nstr(v.imag, 17)}")


rational = lambda z: (z + I) ** -4
show("monomial_field(2, 0.3+0.8i)", monomial_field(2, mpc("0.3", "0.8")))
show("monomial_field(3, -1+2i)", monomial_field(3, mpc(-1, 2)))
show("xi_c((z+i)^-4, 50, 0.5+1.2i)", xi_c(rational, 50, mpc("0.5", "1.2")))
show("wolpert((z+i)^-4, i, 0.5+1.2i)", wolpert_field(rational, I, mpc("0.5", "1.2")))
show("printed kernel mass eps=0.5", printed_kernel_mass(mpf("0.5")))
