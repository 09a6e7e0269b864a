#include "sandpile/families.hpp"

#include <cmath>
#include <stdexcept>

#include "sandpile/laplacian.hpp"

namespace sandpile {

Int fib(int n) {
    if (n < 0) throw std::invalid_argument("fib: n must be non-negative");
    Int a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        b += a;
        std::swap(a, b);
    }
    return a;
}

UniPoly fib_poly(int n) {
    if (n < 0) throw std::invalid_argument("fib_poly: n must be non-negative");
    UniPoly prev;                  // F_0 = 0
    UniPoly cur = UniPoly::one();  // F_1 = 1
    if (n == 0) return prev;
    for (int i = 2; i <= n; ++i) {
        UniPoly next = (i % 2 == 0) ? cur + prev : cur + UniPoly::y() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly star_poly(int n) {
    if (n < 1) throw std::invalid_argument("star_poly: n must be >= 1");
    UniPoly s = UniPoly::one();
    UniPoly y1 = UniPoly::y() + UniPoly::one();
    for (int i = 2; i <= n; ++i) s = y1 * s + UniPoly::constant(pow2(i - 2));
    return s;
}

Int m_ps(int p, int s) {
    if (p < 1 || s < 1) throw std::invalid_argument("m_ps: p and s must be >= 1");
    Int a = Int(s - 2) * fib(2 * p - 1) + 2 * fib(2 * p + 1);
    Int b = Int(s) * fib(2 * p - 1) + 2 * fib(2 * p);
    if (a != b) throw std::logic_error("m_ps: the two defining expressions disagree");
    return a;
}

FamilyPrediction coconut_prediction(int p, int s) {
    if (p < 1 || s < 1) throw std::invalid_argument("coconut_prediction: p and s must be >= 1");
    FamilyPrediction out;
    Int m = m_ps(p, s);
    out.tau = pow2(s - 1) * m;

    if (p == 1 && s == 1) {
        out.group = sandpile_group(rooted_cone(coconut_tree(1, 1)));
    } else {
        std::vector<Int> factors;
        if (s == 1 || p % 3 == 2) {
            factors.assign(s - 1, Int(2));
            factors.push_back(m);
        } else {
            factors.assign(s - 2, Int(2));
            factors.push_back(2 * m);
        }
        out.group = AbelianGroup::from_factors(std::move(factors));
    }
    if (out.group.order() != out.tau) throw std::logic_error("coconut_prediction: group order differs from tau");

    if (s == 1)
        out.t1y = fib_poly(2 * (p + 1));  // CT(p, 1) is the (p+1)-vertex path
    else if (p == 1)
        out.t1y = star_poly(s + 1);  // CT(1, s) is the (s+1)-vertex star
    return out;
}

FamilyPrediction path_prediction(int n) {
    if (n < 1) throw std::invalid_argument("path_prediction: n must be >= 1");
    FamilyPrediction out;
    out.tau = fib(2 * n);
    out.group = AbelianGroup::from_factors({out.tau});
    out.t1y = fib_poly(2 * n);
    return out;
}

FamilyPrediction star_prediction(int n) {
    if (n < 2) throw std::invalid_argument("star_prediction: n must be >= 2");
    return coconut_prediction(1, n - 1);
}

Int doubled_cone_coconut_tau(int p, int s) {
    if (p < 1 || s < 1) throw std::invalid_argument("doubled_cone_coconut_tau: p and s must be >= 1");
    return pow2(s - 1) * (2 * fib(2 * p + 2) + Int(s - 2) * fib(2 * p));
}

double asymptotic_ratio(double beta, int n) {
    const double phi2 = (3.0 + std::sqrt(5.0)) / 2.0;
    if (!(beta >= 2.0 - 1e-12 && beta <= phi2 + 1e-12))
        throw std::invalid_argument("asymptotic_ratio: beta must lie in [2, phi^2]");
    if (n < 2) throw std::invalid_argument("asymptotic_ratio: n must be >= 2");
    double alpha = std::log(beta / 2.0) / std::log(phi2 / 2.0);
    int p = static_cast<int>(std::floor(alpha * n));
    p = std::max(1, std::min(n - 1, p));  // CT(p, s) needs p, s >= 1
    int s = n - p;
    double log_tau = static_cast<double>(s - 1) * std::log(2.0) + log_int(m_ps(p, s));
    return std::exp(log_tau / n);
}

}  // namespace sandpile
