#include "knotfog/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotfog {

LaurentPoly::LaurentPoly(std::int64_t min_degree, std::vector<Integer> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t degree) {
    return LaurentPoly(degree, {c});
}

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
    min_degree_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty())
        min_degree_ = 0;
}

Integer LaurentPoly::coeff(std::int64_t degree) const {
    if (is_zero() || degree < min_degree_ || degree > max_degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    if (!r.is_zero())
        r.min_degree_ += k;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const std::int64_t lo = std::min(min_degree_, o.min_degree_);
    const std::int64_t hi = std::max(max_degree(), o.max_degree());
    std::vector<Integer> sum(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(min_degree_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(o.min_degree_ - lo) + i] += o.coeffs_[i];
    min_degree_ = lo;
    coeffs_ = std::move(sum);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.min_degree_ + b.min_degree_, std::move(prod));
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentPoly pow(const LaurentPoly& a, std::uint64_t k) {
    LaurentPoly result = LaurentPoly::constant(1);
    LaurentPoly base = a;
    while (k > 0) {
        if (k & 1U)
            result *= base;
        k >>= 1U;
        if (k > 0)
            base *= base;
    }
    return result;
}

Rational evaluate(const LaurentPoly& a, const Integer& x) {
    if (x == 0)
        throw std::domain_error("cannot evaluate a Laurent polynomial at t = 0");
    if (a.is_zero())
        return 0;
    // Horner on the coefficient run, then scale by x^min_degree.
    Integer acc = 0;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it)
        acc = acc * x + *it;
    Rational value(acc);
    Integer scale;
    const std::int64_t k = a.min_degree();
    mpz_pow_ui(scale.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0)
        value *= Rational(scale);
    else
        value /= Rational(scale);
    value.canonicalize();
    return value;
}

LaurentPoly canonical(const LaurentPoly& a) {
    if (a.is_zero())
        return a;
    LaurentPoly r = a.shifted(-a.min_degree());
    return r.leading_coeff() < 0 ? -r : r;
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) { return canonical(a) == canonical(b); }

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (a.is_zero())
        return {};
    // Strip powers of t so both have nonzero constant terms; the quotient is
    // then an ordinary polynomial and schoolbook long division applies.
    const std::int64_t shift = a.min_degree() - b.min_degree();
    std::vector<Integer> rem = a.coeffs();
    const std::vector<Integer>& div = b.coeffs();
    if (rem.size() < div.size())
        throw std::domain_error("inexact polynomial division");
    std::vector<Integer> quot(rem.size() - div.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + div.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), div.back().get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), div.back().get_mpz_t());
        for (std::size_t j = 0; j < div.size(); ++j)
            rem[k + j] -= q * div[j];
        quot[k] = std::move(q);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; }))
        throw std::domain_error("inexact polynomial division");
    return LaurentPoly(shift, std::move(quot));
}

std::string to_string(const LaurentPoly& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (std::int64_t d = a.max_degree(); d >= a.min_degree(); --d) {
        Integer c = a.coeff(d);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (c != 1 || d == 0)
            out += c.get_str();
        if (d != 0) {
            out += "t";
            if (d != 1)
                out += "^" + std::to_string(d);
        }
    }
    return out;
}

} // namespace knotfog
