#pragma once

#include "mtw/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mtw {

/// Exact value of the form sum_i c_i * sqrt(m_i) with rational c_i and
/// positive integer radicands m_i (m_i = 1 holds the rational part).
/// Signs are decided exactly by recursive squaring; radical products
/// extract square factors through gcds so the recursion collapses for
/// the expressions that arise from radial-metric distances.
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(const Rat& rational); // implicit: plain rational value
    static RadicalSum sqrt_of(const Rat& radicand); // radicand >= 0

    RadicalSum operator+(const RadicalSum& o) const;
    RadicalSum operator-(const RadicalSum& o) const;
    RadicalSum operator-() const;

    /// -1, 0, +1. Exact.
    int sign() const;

    bool is_zero() const { return sign() == 0; }
    bool operator==(const RadicalSum& o) const { return (*this - o).sign() == 0; }
    bool operator!=(const RadicalSum& o) const { return !(*this == o); }
    bool operator<(const RadicalSum& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const RadicalSum& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const RadicalSum& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const RadicalSum& o) const { return (*this - o).sign() >= 0; }

    /// True when the value carries no irrational term.
    bool is_rational() const;
    /// Requires is_rational().
    Rat as_rational() const;

    double to_double() const;
    /// Decimal rendering with ~32 significant digits, for reports.
    std::string decimal_string() const;
    /// Symbolic form such as "3/2 + 2*sqrt(5)", for exact counterexample records.
    std::string exact_string() const;

    const std::vector<std::pair<Rat, Int>>& terms() const { return terms_; }

private:
    // invariant: radicands positive, strictly increasing, square-reduced
    // as far as cheap factoring allows; no zero coefficients.
    std::vector<std::pair<Rat, Int>> terms_;

    static int sign_of_terms(std::vector<std::pair<Rat, Int>> terms, int depth);
    static std::vector<std::pair<Rat, Int>> normalized(std::vector<std::pair<Rat, Int>> terms);
};

} // namespace mtw
