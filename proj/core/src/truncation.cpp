#include "locproj/truncation.hpp"

#include <algorithm>
#include <sstream>

namespace locproj {

Truncation::Truncation(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw EmptyWindow("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
}

Truncation Truncation::from_character(const Character& c, std::int64_t hi) {
    if (c.rank() != 1 && !c.is_zero()) throw BadRank("from_character needs a univariate character");
    std::int64_t lo = std::min<std::int64_t>(0, hi);
    for (const auto& [e, a] : c.terms()) lo = std::min(lo, e[0]);
    Truncation r(lo, hi);
    for (const auto& [e, a] : c.terms())
        if (e[0] <= hi) r.set(e[0], Rat(a));
    return r;
}

const Rat& Truncation::coefficient(std::int64_t d) const {
    if (d < lo_ || d > hi_)
        throw OutOfWindow("degree " + std::to_string(d) + " outside [" + std::to_string(lo_) +
                          ", " + std::to_string(hi_) + "]");
    return coeffs_[static_cast<std::size_t>(d - lo_)];
}

void Truncation::set(std::int64_t d, Rat v) {
    if (d < lo_ || d > hi_) throw OutOfWindow("set outside window");
    v.canonicalize();
    coeffs_[static_cast<std::size_t>(d - lo_)] = std::move(v);
}

void Truncation::add(std::int64_t d, const Rat& v) {
    if (d < lo_ || d > hi_) throw OutOfWindow("add outside window");
    auto& c = coeffs_[static_cast<std::size_t>(d - lo_)];
    c += v;
    c.canonicalize();
}

Truncation Truncation::operator+(const Truncation& o) const {
    std::int64_t lo = std::min(lo_, o.lo_);
    std::int64_t hi = std::min(hi_, o.hi_);
    Truncation r(lo, hi);
    for (std::int64_t d = lo; d <= hi; ++d) {
        Rat v = 0;
        if (d >= lo_) v += coefficient(d);
        if (d >= o.lo_) v += o.coefficient(d);
        r.set(d, v);
    }
    return r;
}

Truncation Truncation::operator-(const Truncation& o) const { return *this + o.scaled(Rat(-1)); }

Truncation Truncation::operator*(const Truncation& o) const {
    std::int64_t lo = lo_ + o.lo_;
    std::int64_t hi = std::min(hi_ + o.lo_, o.hi_ + lo_);
    Truncation r(lo, hi);
    for (std::int64_t a = lo_; a <= hi_; ++a) {
        const Rat& ca = coeffs_[static_cast<std::size_t>(a - lo_)];
        if (ca == 0) continue;
        for (std::int64_t b = o.lo_; b <= o.hi_ && a + b <= hi; ++b) {
            const Rat& cb = o.coeffs_[static_cast<std::size_t>(b - o.lo_)];
            if (cb == 0) continue;
            r.add(a + b, ca * cb);
        }
    }
    return r;
}

Truncation Truncation::scaled(const Rat& c) const {
    Truncation r(lo_, hi_);
    for (std::int64_t d = lo_; d <= hi_; ++d) r.set(d, coefficient(d) * c);
    return r;
}

Truncation Truncation::windowed(std::int64_t lo, std::int64_t hi) const {
    if (hi > hi_) throw OutOfWindow("cannot widen validity window");
    Truncation r(lo, hi);
    for (std::int64_t d = std::max(lo, lo_); d <= hi; ++d) r.set(d, coefficient(d));
    return r;
}

bool Truncation::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<std::int64_t> Truncation::valuation() const {
    for (std::int64_t d = lo_; d <= hi_; ++d)
        if (coefficient(d) != 0) return d;
    return std::nullopt;
}

bool Truncation::all_integer() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

std::optional<std::int64_t> Truncation::first_mismatch(const Truncation& a, const Truncation& b) {
    std::int64_t lo = std::max(a.lo_, b.lo_);
    std::int64_t hi = std::min(a.hi_, b.hi_);
    // degrees below one operand's window are zero for that operand
    std::int64_t start = std::min(a.lo_, b.lo_);
    for (std::int64_t d = start; d <= hi; ++d) {
        Rat va = (d >= a.lo_) ? a.coefficient(d) : Rat(0);
        Rat vb = (d >= b.lo_) ? b.coefficient(d) : Rat(0);
        if (va != vb) return d;
    }
    (void)lo;
    return std::nullopt;
}

std::string Truncation::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::int64_t d = lo_; d <= hi_; ++d) {
        const Rat& c = coefficient(d);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (a != 1 || d == 0) os << to_decimal(a);
        if (d != 0) {
            if (a != 1) os << "*";
            os << var;
            if (d != 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << (hi_ + 1) << ")";
    return os.str();
}

Truncation expand(const RationalCharacter& r, std::int64_t order) {
    if (r.rank() != 1 && !r.is_zero()) throw BadRank("expand needs a univariate rational character");

    // Normalize negative-exponent denominator factors:
    // 1/(1 - t^{-k}) = -t^k / (1 - t^k).
    Character num = r.numerator();
    std::vector<std::pair<std::int64_t, std::int64_t>> den; // (positive exponent, mult)
    for (const auto& [e, m] : r.denominator()) {
        std::int64_t d = e[0];
        if (d == 0) throw ZeroGradeDenominator("expand: (1 - t^0) denominator");
        if (d < 0) {
            Int sign = (m % 2 == 0) ? 1 : -1;
            num = num * Character::t_power(-d * m, sign);
            den.emplace_back(-d, m);
        } else {
            den.emplace_back(d, m);
        }
    }

    if (num.is_zero()) return Truncation::zero(order);

    std::int64_t lo = num.min_grade(Grading({1})).value();
    if (lo > order) return Truncation::zero(order);

    Truncation acc(lo, order);
    for (const auto& [e, a] : num.terms())
        if (e[0] <= order) acc.add(e[0], Rat(a));
    // dividing by (1 - t^d) is an in-place prefix sum with stride d
    for (const auto& [d, m] : den)
        for (std::int64_t i = 0; i < m; ++i)
            for (std::int64_t k = lo + d; k <= order; ++k) acc.add(k, acc.coefficient(k - d));
    return acc;
}

} // namespace locproj
