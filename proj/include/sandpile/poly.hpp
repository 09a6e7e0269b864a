#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sandpile/bigint.hpp"

namespace sandpile {

// Univariate polynomial in y with exact integer coefficients.
// Stored densely, index = degree; no trailing zero coefficient is kept,
// so the zero polynomial is the empty coefficient list.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Int c);
    static UniPoly one() { return constant(1); }
    static UniPoly y();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int d) const;
    Int eval(const Int& v) const;

    // multiply by y^k
    UniPoly shifted(int k) const;

    UniPoly& operator+=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    bool operator==(const UniPoly&) const = default;

    std::string to_string() const;        // descending, e.g. "y^2+3y+4"
    std::string coeff_list() const;       // constant term first, space-separated

  private:
    void trim();
    std::vector<Int> coeffs_;
};

// a <= b in every coefficient (as polynomials in Z[y])
bool leq_coeffwise(const UniPoly& a, const UniPoly& b);

// Bivariate polynomial in (x, y), sparse map (x-degree, y-degree) -> coefficient.
// Zero-valued entries are never stored.
class BiPoly {
  public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly one();
    static BiPoly x();
    static BiPoly y();

    bool is_zero() const { return terms_.empty(); }
    void add(int dx, int dy, const Int& c);
    Int coeff(int dx, int dy) const;
    const std::map<Key, Int>& terms() const { return terms_; }

    BiPoly& operator+=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    BiPoly times_x(int k = 1) const;
    BiPoly times_y(int k = 1) const;

    UniPoly at_x1() const;  // specialize x = 1
    Int eval(const Int& x, const Int& y) const;

    bool operator==(const BiPoly&) const = default;

    std::string to_string() const;  // sorted "(i,j):c" triples

  private:
    std::map<Key, Int> terms_;
};

}  // namespace sandpile
