#include "sandpile/poly.hpp"

#include <sstream>

namespace sandpile {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Int c) {
    UniPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::y() {
    UniPoly p;
    p.coeffs_ = {Int(0), Int(1)};
    return p;
}

Int UniPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[d];
}

Int UniPoly::eval(const Int& v) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : UniPoly{};
    UniPoly p;
    p.coeffs_.assign(coeffs_.size() + k, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[i + k] = coeffs_[i];
    return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly{};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

bool leq_coeffwise(const UniPoly& a, const UniPoly& b) {
    int d = std::max(a.degree(), b.degree());
    for (int i = 0; i <= d; ++i)
        if (a.coeff(i) > b.coeff(i)) return false;
    return true;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeffs_[d];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? "+" : "-");
        else if (c < 0) out << "-";
        Int a = abs(c);
        if (a != 1 || d == 0) out << a.get_str();
        if (d >= 1) out << "y";
        if (d >= 2) out << "^" << d;
        first = false;
    }
    return out.str();
}

std::string UniPoly::coeff_list() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << " ";
        out << coeffs_[i].get_str();
    }
    return out.str();
}

BiPoly BiPoly::one() {
    BiPoly p;
    p.terms_[{0, 0}] = 1;
    return p;
}

BiPoly BiPoly::x() {
    BiPoly p;
    p.terms_[{1, 0}] = 1;
    return p;
}

BiPoly BiPoly::y() {
    BiPoly p;
    p.terms_[{0, 1}] = 1;
    return p;
}

void BiPoly::add(int dx, int dy, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({dx, dy}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int BiPoly::coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Int(0) : it->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly p;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) p.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return p;
}

BiPoly BiPoly::times_x(int k) const {
    BiPoly p;
    for (const auto& [key, c] : terms_) p.terms_[{key.first + k, key.second}] = c;
    return p;
}

BiPoly BiPoly::times_y(int k) const {
    BiPoly p;
    for (const auto& [key, c] : terms_) p.terms_[{key.first, key.second + k}] = c;
    return p;
}

UniPoly BiPoly::at_x1() const {
    std::vector<Int> coeffs;
    for (const auto& [key, c] : terms_) {
        if (key.second >= static_cast<int>(coeffs.size())) coeffs.resize(key.second + 1, 0);
        coeffs[key.second] += c;
    }
    return UniPoly(std::move(coeffs));
}

Int BiPoly::eval(const Int& x, const Int& y) const {
    Int acc = 0;
    for (const auto& [key, c] : terms_) {
        Int t = c;
        for (int i = 0; i < key.first; ++i) t *= x;
        for (int j = 0; j < key.second; ++j) t *= y;
        acc += t;
    }
    return acc;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " ";
        out << "(" << key.first << "," << key.second << "):" << c.get_str();
        first = false;
    }
    return out.str();
}

}  // namespace sandpile
