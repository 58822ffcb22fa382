/*
   Copyright 2026 The exalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance suite: one deterministic pass/fail line per criterion, every
// tolerance pinned in code. Usage:
//   acceptance <cli-binary> <fixtures-dir> <runner-script>
// (the three arguments feed the CLI determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "exalg/factorization.hpp"
#include "exalg/fpmodules.hpp"
#include "exalg/linalg.hpp"
#include "exalg/rings.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace exalg;
using namespace testutil;

namespace {

std::mt19937_64 rng;

long rnd(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Matrix random_zmat(std::size_t rows, std::size_t cols, long bound) {
    Matrix m(ZZ(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = zz(rnd(-bound, bound));
    }
    return m;
}

Matrix random_fpx_mat(unsigned long p, std::size_t rows, std::size_t cols, int max_deg) {
    const RingDescriptor ring = FPX(p);
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            int deg = static_cast<int>(rnd(-1, max_deg));
            std::vector<Element> c;
            for (int k = 0; k <= deg; ++k) c.push_back(fp(p, rnd(0, static_cast<long>(p) - 1)));
            m.at(i, j) = Element::polynomial(ring, std::move(c));
        }
    }
    return m;
}

Matrix random_unimodular(std::size_t n, int ops) {
    Matrix u = Matrix::identity(ZZ(), n);
    if (n == 0) return u;
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rnd(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rnd(0, static_cast<long>(n) - 1));
        switch (rnd(0, 2)) {
            case 0:
                for (std::size_t c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
                break;
            case 1:
                for (std::size_t c = 0; c < n; ++c) u.at(i, c) = -u.at(i, c);
                break;
            default: {
                if (i == j) break;
                Element f = zz(rnd(-3, 3));
                for (std::size_t c = 0; c < n; ++c) u.at(i, c) = u.at(i, c) + f * u.at(j, c);
            }
        }
    }
    return u;
}

std::vector<std::vector<Integer>> to_grid(const Matrix& m) {
    std::vector<std::vector<Integer>> g(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j).int_value();
    }
    return g;
}

Element el_pow(const Element& base, unsigned long e) {
    Element acc = Element::one(base.ring());
    for (unsigned long i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

struct Check {
    bool ok = true;
    void expect(bool condition) { ok = ok && condition; }
};

// ------------------------------------------------------------- criteria

bool snf_certificates() {
    rng.seed(1001);
    Check c;
    for (int trial = 0; trial < 500; ++trial) {
        Matrix a = random_zmat(static_cast<std::size_t>(rnd(1, 6)),
                               static_cast<std::size_t>(rnd(1, 6)), 99);
        c.expect(verify_smith(a, smith_normal_form(a)));
    }
    for (int trial = 0; trial < 200; ++trial) {
        Matrix a = random_fpx_mat(5, static_cast<std::size_t>(rnd(1, 4)),
                                  static_cast<std::size_t>(rnd(1, 4)), 4);
        c.expect(verify_smith(a, smith_normal_form(a)));
    }
    return c.ok;
}

bool snf_oracle_equivalence() {
    rng.seed(1002);
    Check c;
    for (int trial = 0; trial < 200; ++trial) {
        Matrix a = random_zmat(static_cast<std::size_t>(rnd(1, 4)),
                               static_cast<std::size_t>(rnd(1, 4)), 99);
        SmithDecomposition s = smith_normal_form(a);
        std::vector<Integer> expected = oracle::snf_diagonal_by_minors(to_grid(a));
        const std::size_t t = std::min(a.rows(), a.cols());
        for (std::size_t i = 0; i < t; ++i) {
            c.expect(s.D.at(i, i).int_value() == expected[i]);
        }
    }
    return c.ok;
}

bool decomposition_uniqueness() {
    rng.seed(1003);
    Check c;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rnd(1, 4));
        const std::size_t m = static_cast<std::size_t>(rnd(0, 5));
        Matrix rel = random_zmat(n, m, 9);
        InvariantFactorDecomposition before = decompose(Presentation(ZZ(), n, rel));
        const int row_ops = static_cast<int>(rnd(0, 10));
        Matrix perturbed = random_unimodular(n, row_ops) * rel * random_unimodular(m, 10 - row_ops);
        c.expect(decompose(Presentation(ZZ(), n, perturbed)) == before);
    }
    return c.ok;
}

bool brute_force_cardinality() {
    rng.seed(1004);
    Check c;
    int done = 0;
    while (done < 100) {
        const std::size_t n = static_cast<std::size_t>(rnd(1, 3));
        const std::size_t m = n + static_cast<std::size_t>(rnd(0, 2));
        std::vector<std::vector<Integer>> grid(n, std::vector<Integer>(m));
        Matrix rel(ZZ(), n, m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                long v = rnd(-6, 6);
                grid[i][j] = v;
                rel.at(i, j) = zz(v);
            }
        }
        // torsion presentations only, and small enough to enumerate honestly
        Integer bound = oracle::smallest_nonzero_maximal_minor(grid);
        if (sgn(bound) == 0 || bound > 60) continue;
        ++done;
        unsigned long long cosets = oracle::coset_count_enumerated(grid);
        InvariantFactorDecomposition d = decompose(Presentation(ZZ(), n, rel));
        c.expect(d.free_rank == 0);
        Integer product = 1;
        for (const Element& t : d.torsion) product *= t.int_value();
        c.expect(product == Integer(static_cast<unsigned long>(cosets)));
    }
    return c.ok;
}

bool quasi_factorization() {
    rng.seed(1005);
    Check c;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Element> xs;
        const int size = static_cast<int>(rnd(1, 6));
        for (int i = 0; i < size; ++i) xs.push_back(zz(rnd(2, 10000)));
        CoprimeBasis b = quasi_factorize(xs);
        for (std::size_t i = 0; i < b.basis.size(); ++i) {
            c.expect(!is_unit(b.basis[i]).has_value());
            for (std::size_t j = i + 1; j < b.basis.size(); ++j) {
                c.expect(is_unit(gcd(b.basis[i], b.basis[j])).has_value());
            }
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Element prod = b.units[i];
            for (std::size_t j = 0; j < b.basis.size(); ++j) {
                prod = prod * el_pow(b.basis[j], b.exponents[i][j]);
                c.expect(divides(el_pow(b.basis[j], b.exponents[i][j]), xs[i]).has_value());
                c.expect(!divides(el_pow(b.basis[j], b.exponents[i][j] + 1), xs[i]).has_value());
            }
            c.expect(prod == xs[i]);
        }
    }
    return c.ok;
}

bool polynomial_gcd_recovery() {
    rng.seed(1006);
    Check c;
    auto random_zpoly = [&](bool nonzero) {
        for (;;) {
            int deg = static_cast<int>(rnd(0, 4));
            std::vector<long> coeffs;
            for (int i = 0; i <= deg; ++i) coeffs.push_back(rnd(-20, 20));
            Element f = zpoly(coeffs);
            if (!nonzero || !f.is_zero()) return f;
        }
    };
    auto to_q = [](const Element& f) {
        std::vector<Element> coeffs;
        for (const Element& a : f.coefficients()) {
            coeffs.push_back(Element::rational(a.int_value(), 1));
        }
        return Element::polynomial(QQX(), std::move(coeffs));
    };
    for (int trial = 0; trial < 200; ++trial) {
        Element g = random_zpoly(true);
        Element u = random_zpoly(true);
        Element v = random_zpoly(true);
        Element d = poly_gcd(g * u, g * v);
        Element gc = normalize_associate(g).canonical;
        c.expect(divides(gc, d).has_value());
        // cofactors sharing no factor at all (over QQ[X] and in content)
        Integer content_gcd;
        Integer cu = poly_content(u);
        Integer cv = poly_content(v);
        mpz_gcd(content_gcd.get_mpz_t(), cu.get_mpz_t(), cv.get_mpz_t());
        if (gcd(to_q(u), to_q(v)).is_one() && content_gcd == 1) {
            c.expect(d == gc);
        }
    }
    return c.ok;
}

bool separable_decomposition() {
    rng.seed(1007);
    Check c;
    auto check_result = [&](const SeparableDecomposition& d, const std::vector<Element>& inputs,
                            unsigned long p) {
        for (const SeparablePart& part : d.parts) {
            c.expect(poly_is_monic(part.core));
            c.expect(gcd(part.core, poly_derivative(part.core)).is_one());
            c.expect(part.stored == poly_expand_variable(part.core, part.power));
            unsigned long q = part.power;
            if (p != 0) {
                while (q % p == 0) q /= p;
            }
            c.expect(q == 1);
        }
        for (const CoprimalityWitness& w : d.witnesses) {
            c.expect((w.u * d.parts[w.first].stored + w.v * d.parts[w.second].stored).is_one());
        }
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            Element prod = Element::one(inputs[i].ring());
            for (std::size_t j = 0; j < d.parts.size(); ++j) {
                prod = prod * el_pow(d.parts[j].stored, d.exponents[i][j]);
            }
            c.expect(prod == inputs[i]);
        }
    };

    // constructed products of linear factors over QQ
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<long> roots;
        long a = rnd(-6, 6);
        const int nroots = static_cast<int>(rnd(2, 4));
        for (int i = 0; i < nroots; ++i) {
            roots.push_back(a);
            a += rnd(1, 3);
        }
        std::vector<Element> inputs;
        const int count = static_cast<int>(rnd(1, 3));
        for (int k = 0; k < count; ++k) {
            Element f = qpoly({1});
            for (long r : roots) {
                unsigned long e = static_cast<unsigned long>(rnd(0, 3));
                if (k == 0 && e == 0) e = 1;  // keep degree >= 1
                f = f * el_pow(qpoly({-r, 1}), e);
            }
            if (poly_degree(f) < 1) f = qpoly({-roots[0], 1});
            inputs.push_back(f);
        }
        check_result(separable_decompose(inputs), inputs, 0);
    }

    // random monic polynomials over small prime fields
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        const RingDescriptor ring = FPX(p);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Element> inputs;
            const int count = static_cast<int>(rnd(1, 3));
            for (int k = 0; k < count; ++k) {
                int deg = static_cast<int>(rnd(1, 12));
                std::vector<Element> coeffs;
                for (int i = 0; i < deg; ++i) coeffs.push_back(fp(p, rnd(0, static_cast<long>(p) - 1)));
                coeffs.push_back(fp(p, 1));
                inputs.push_back(Element::polynomial(ring, std::move(coeffs)));
            }
            check_result(separable_decompose(inputs), inputs, p);
        }
    }
    return c.ok;
}

bool primary_decomposition_range() {
    Check c;
    for (long n = 2; n <= 100000; ++n) {
        PrimaryDecomposition d = primary_decompose_int(Element::integer(Integer(n)));
        Integer product = 1;
        Integer radical = 1;
        for (const PrimaryComponent& comp : d.components) {
            product *= comp.q;
            radical *= comp.p;
            auto primary = is_primary_int(Element::integer(comp.q));
            c.expect(primary.has_value() && *primary == comp.p);
        }
        c.expect(product == n);
        Integer rad_check = 1;
        long m = n;
        for (long f = 2; f * f <= m; ++f) {
            if (m % f == 0) {
                rad_check *= f;
                while (m % f == 0) m /= f;
            }
        }
        if (m > 1) rad_check *= m;
        c.expect(radical == rad_check);
        if (!c.ok) return false;  // no point scanning the rest
    }
    return c.ok;
}

std::string g_cli, g_fixtures, g_script;

bool cli_determinism() {
    if (g_cli.empty() || g_fixtures.empty() || g_script.empty()) return false;
    const std::string cmd =
        "bash \"" + g_script + "\" \"" + g_cli + "\" \"" + g_fixtures + "\" > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
}

struct Criterion {
    const char* description;
    bool (*run)();
    double limit_seconds;  // 0 = untimed
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    if (argc > 2) g_fixtures = argv[2];
    if (argc > 3) g_script = argv[3];

    const Criterion criteria[] = {
        {"SNF certificates: 500 ZZ (<=6x6, |a|<=99) + 200 F5[X] (<=4x4, deg<=4) matrices", snf_certificates, 10.0},
        {"SNF diagonal equals determinantal-divisor ratios: 200 ZZ matrices <=4x4", snf_oracle_equivalence, 5.0},
        {"decompose invariant under 10 elementary operations: 200 presentations", decomposition_uniqueness, 0.0},
        {"torsion product equals enumerated coset count: 100 presentations", brute_force_cardinality, 0.0},
        {"quasi-factorization postconditions: 300 multisets in [2,10^4]", quasi_factorization, 5.0},
        {"polynomial gcd recovers the planted factor: 200 ZZ[X] pairs", polynomial_gcd_recovery, 0.0},
        {"separable decomposition clauses over QQ, F2, F3, F5", separable_decomposition, 10.0},
        {"primary decomposition of every n in [2,10^5]", primary_decomposition_range, 30.0},
        {"CLI determinism: fixture corpus byte-identical across two runs", cli_determinism, 0.0},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& crit : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        const bool ok = crit.run();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = crit.limit_seconds == 0.0 || seconds < crit.limit_seconds;
        const bool passed = ok && in_time;
        if (!passed) ++failures;
        if (crit.limit_seconds > 0.0) {
            std::printf("%s  criterion %d: %s  [%.2fs < %.0fs]\n", passed ? "PASS" : "FAIL",
                        index, crit.description, seconds, crit.limit_seconds);
        } else {
            std::printf("%s  criterion %d: %s  [%.2fs]\n", passed ? "PASS" : "FAIL", index,
                        crit.description, seconds);
        }
    }
    return failures;
}
