#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wturan/error.hpp"
#include "wturan/rational.hpp"

namespace wturan {

using RationalMatrix = std::vector<std::vector<Rational>>;

/*
 * Exact solve of a square system A x = b.
 *
 * Each row of [A | b] is scaled by the lcm of its denominators so the
 * elimination runs on integers. Bareiss' fraction-free update
 *
 *     M[i][j] <- (M[k][k] M[i][j] - M[i][k] M[k][j]) / prev_pivot
 *
 * divides exactly and keeps entries bounded by minors of the input, so
 * there is no denominator blow-up. Back substitution is done in rationals.
 * Returns nullopt iff A is singular.
 */
inline std::optional<std::vector<Rational>> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InvalidArgument("solve_linear_system: rhs size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidArgument("solve_linear_system: matrix is not square");

    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class scale = b[i].denominator();
        for (const auto& x : a[i]) {
            auto d = x.denominator();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].numerator() * (scale / a[i][j].denominator());
        m[i][n] = b[i].numerator() * (scale / b[i].denominator());
    }

    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return std::nullopt;
            std::swap(m[k], m[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

} // namespace wturan
