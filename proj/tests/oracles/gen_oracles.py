"""Independent reference values for the C++ tests.

Run once; the output tests/oracles/frozen.hpp is committed and never
regenerated from the library. Everything here is brute force over words,
exact rationals, or closed forms in mpmath; nothing imports the C++ code.
"""
import itertools
import pathlib
from fractions import Fraction as F

import mpmath

mpmath.mp.dps = 40

FULL = [[1, 1], [1, 1]]
GOLDEN = [[1, 1], [1, 0]]
MARKOV73 = [[F(7, 10), F(3, 10)], [F(4, 10), F(6, 10)]]
MARKOV64 = [[F(6, 10), F(4, 10)], [F(4, 10), F(6, 10)]]


def admissible(A, w):
    return all(A[a][b] for a, b in zip(w, w[1:]))


def words(A, n):
    return [w for w in itertools.product(range(len(A)), repeat=n) if admissible(A, w)]


def cyclic_ok(A, w):
    return admissible(A, w + w[:1])


def least_period(w):
    p = len(w)
    for d in range(1, p + 1):
        if p % d == 0 and w[:d] * (p // d) == w:
            return d
    return p


def orbit_reps(A, p_max):
    out = []
    for p in range(1, p_max + 1):
        for w in words(A, p):
            if cyclic_ok(A, w) and least_period(w) == p and w == min(w[i:] + w[:i] for i in range(p)):
                out.append(w)
    return out


def periodic_point_count(A, p):
    return sum(1 for w in itertools.product(range(len(A)), repeat=p) if cyclic_ok(A, w))


def stationary(P):
    # two-state chain: pi_0 = p10 / (p01 + p10)
    a, b = P[0][1], P[1][0]
    return [b / (a + b), a / (a + b)]


def markov_measure(P, w):
    pi = stationary(P)
    m = pi[w[0]]
    for a, b in zip(w, w[1:]):
        m *= P[a][b]
    return m


PHI = (1 + mpmath.sqrt(5)) / 2


def parry_measure(w):
    # Parry measure of the golden-mean shift: left/right eigenvectors of A.
    u = [PHI, 1]
    v = [PHI, 1]
    norm = sum(u[i] * v[i] for i in range(2))
    return u[w[0]] * v[w[-1]] / norm / PHI ** (len(w) - 1)


def ratio_decomposition_sum(P, cyl, depth):
    # sum over past leaves xi of depth `depth` ending at the pivot:
    # (nu(xi.C) / nu(xi)) * nu(xi); the join shares the pivot symbol
    total = F(0)
    for xi in itertools.product((0, 1), repeat=depth):
        if xi[-1] != cyl[0]:
            continue
        joined = xi + cyl[1:]
        total += markov_measure(P, joined) / markov_measure(P, xi) * markov_measure(P, xi)
    return total


def cycle_product(P, w):
    out = mpmath.mpf(1)
    for i in range(len(w)):
        x = P[w[i]][w[(i + 1) % len(w)]]
        out *= mpmath.mpf(x.numerator) / x.denominator
    return out


def cpp_real(x):
    return mpmath.nstr(mpmath.mpf(x), 20, min_fixed=0, max_fixed=0)


def cpp_word(w):
    return '"' + "".join(map(str, w)) + '"'


def table(name, rows):
    body = ",\n".join(f"    {{{cpp_word(w)}, {cpp_real(v)}}}" for w, v in rows)
    return f"inline const std::vector<std::pair<std::string, double>> {name}{{\n{body}}};\n"


def main():
    out = ["// Generated by tests/oracles/gen_oracles.py. Do not edit.",
           "#pragma once", "", "#include <string>", "#include <utility>", "#include <vector>", "",
           "namespace oracle {", ""]

    out.append("inline const std::vector<int> golden_cylinder_counts{" +
               ", ".join(str(len(words(GOLDEN, n))) for n in range(1, 9)) + "};")
    out.append("inline const std::vector<int> golden_traces{" +
               ", ".join(str(periodic_point_count(GOLDEN, p)) for p in range(1, 9)) + "};")
    out.append("inline const std::vector<int> full_traces{" +
               ", ".join(str(periodic_point_count(FULL, p)) for p in range(1, 9)) + "};")
    out.append(f"inline constexpr int full_orbits_p8 = {len(orbit_reps(FULL, 8))};")
    out.append(f"inline constexpr int golden_orbits_p8 = {len(orbit_reps(GOLDEN, 8))};")
    out.append("")

    out.append(f"inline constexpr double golden_pressure = {cpp_real(mpmath.log(PHI))};")
    out.append(f"inline constexpr double phi = {cpp_real(PHI)};")
    pi = stationary(MARKOV73)
    out.append(f"inline constexpr double markov73_pi0 = {cpp_real(mpmath.mpf(pi[0].numerator) / pi[0].denominator)};")
    out.append(f"inline constexpr double markov73_pi1 = {cpp_real(mpmath.mpf(pi[1].numerator) / pi[1].denominator)};")
    out.append(f"inline constexpr double markov73_dual_01 = {cpp_real(mpmath.mpf(F(pi[0] / pi[1]).numerator) / F(pi[0] / pi[1]).denominator)};")
    out.append("")

    def frac(x):
        return mpmath.mpf(x.numerator) / x.denominator

    out.append(table("markov73_measures",
                     [(w, frac(markov_measure(MARKOV73, w))) for n in range(1, 5) for w in words(FULL, n)]))
    out.append(table("markov64_measures",
                     [(w, frac(markov_measure(MARKOV64, w))) for n in range(1, 5) for w in words(FULL, n)]))
    out.append(table("golden_measures", [(w, parry_measure(w)) for n in range(1, 5) for w in words(GOLDEN, n)]))

    # Ratio decomposition at leaf depth 6: brute-force double sum, exact.
    rows = []
    for n in (2, 3):
        for c in words(FULL, n):
            s = ratio_decomposition_sum(MARKOV73, c, 6)
            assert s == markov_measure(MARKOV73, c)
            rows.append((c, frac(s)))
    out.append(table("markov73_decomposition_d6", rows))

    # Sibling solenoid values nu(a.x)/nu(b.x) for past words, Markov(.7,.3;.4,.6).
    sib = set()
    for x in words(FULL, 2):
        for a, b in ((0, 1), (1, 0)):
            sib.add(markov_measure(MARKOV73, (a,) + x) / markov_measure(MARKOV73, (b,) + x))
    out.append("inline const std::vector<double> markov73_sibling_values{" +
               ", ".join(cpp_real(frac(v)) for v in sorted(sib)) + "};")
    out.append("")

    # Periodic-orbit eigenvalues lambda = prod(P around the cycle)^(-1/delta).
    bowen = mpmath.log(2) / mpmath.log(3)
    configs = [
        ("bernoulli_bowen", [[F(1, 2)] * 2] * 2, bowen),
        ("markov64_08", MARKOV64, mpmath.mpf("0.8")),
        ("markov73_07", MARKOV73, mpmath.mpf("0.7")),
    ]
    for name, P, delta in configs:
        rows = [(w, cycle_product(P, w) ** (-1 / delta)) for w in orbit_reps(FULL, 8)]
        out.append(table(f"eigen_{name}", rows))
    out.append(table("eigen_golden_parry", [(w, PHI ** len(w)) for w in orbit_reps(GOLDEN, 8)]))

    out.append(f"inline constexpr double bowen_third = {cpp_real(bowen)};")
    out.append(f"inline constexpr double bowen_04 = {cpp_real(mpmath.log(2) / mpmath.log(mpmath.mpf('2.5')))};")
    out.append(f"inline constexpr double bowen_045 = {cpp_real(mpmath.log(2) / -mpmath.log(mpmath.mpf('0.45')))};")
    out.append(f"inline constexpr double third_pressure_at_1 = {cpp_real(mpmath.log(mpmath.mpf(2) / 3))};")
    out.append(f"inline constexpr double bernoulli_bowen_ratio = {cpp_real(mpmath.mpf('0.5') ** (1 / bowen))};")
    out.append("")
    out.append("}  // namespace oracle")
    path = pathlib.Path(__file__).with_name("frozen.hpp")
    path.write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
