#include "locproj/character.hpp"

#include <sstream>

namespace locproj {

Character Character::monomial(const Exponent& e, Int c) {
    Character r(e.size());
    r.add_term(e, c);
    return r;
}

Character Character::one(std::size_t rank) { return monomial(Exponent(rank, 0), 1); }

Character Character::t_power(std::int64_t d, Int c) { return monomial(Exponent{d}, std::move(c)); }

Int Character::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int Character::constant_term() const { return coeff(Exponent(rank_, 0)); }

void Character::add_term(const Exponent& e, const Int& c) {
    if (c == 0) return;
    if (e.size() != rank_) throw BadRank("character/exponent rank mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Character::check_rank(const Character& o) const {
    if (rank_ != o.rank_ && !is_zero() && !o.is_zero())
        throw BadRank("character rank mismatch");
}

Character Character::operator-() const {
    Character r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Character Character::operator+(const Character& o) const {
    Character r = *this;
    r += o;
    return r;
}

Character& Character::operator+=(const Character& o) {
    check_rank(o);
    if (terms_.empty()) rank_ = o.rank_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Character Character::operator-(const Character& o) const {
    Character r = *this;
    r -= o;
    return r;
}

Character& Character::operator-=(const Character& o) {
    check_rank(o);
    if (terms_.empty()) rank_ = o.rank_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Character Character::operator*(const Character& o) const {
    check_rank(o);
    Character r(rank_ == 0 ? o.rank_ : rank_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(exponent_add(ea, eb), ca * cb);
    return r;
}

Character Character::operator*(const Int& c) const {
    Character r(rank_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

Character Character::dual() const {
    Character r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(exponent_neg(e), c);
    return r;
}

Int Character::dim() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Exponent Character::det_exponent() const {
    Exponent r(rank_, 0);
    for (const auto& [e, c] : terms_) {
        if (!c.fits_slong_p()) throw Error("det: coefficient too large for exponent arithmetic");
        std::int64_t m = c.get_si();
        for (std::size_t i = 0; i < rank_; ++i) r[i] += m * e[i];
    }
    return r;
}

Character Character::restrict(const Grading& g) const {
    Character r(1);
    for (const auto& [e, c] : terms_) r.add_term(Exponent{g.grade(e)}, c);
    return r;
}

Character Character::pruned(const Grading& g, std::int64_t bound) const {
    Character r(rank_);
    for (const auto& [e, c] : terms_)
        if (g.grade(e) <= bound) r.terms_.emplace(e, c);
    return r;
}

Character Character::mul_pruned(const Character& a, const Character& b, const Grading& g,
                                std::int64_t bound) {
    Character r(a.rank_ == 0 ? b.rank_ : a.rank_);
    for (const auto& [ea, ca] : a.terms_) {
        std::int64_t ga = g.grade(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (ga + g.grade(eb) > bound) continue;
            r.add_term(exponent_add(ea, eb), ca * cb);
        }
    }
    return r;
}

std::optional<std::int64_t> Character::min_grade(const Grading& g) const {
    std::optional<std::int64_t> m;
    for (const auto& [e, c] : terms_) {
        auto v = g.grade(e);
        if (!m || v < *m) m = v;
    }
    return m;
}

std::optional<std::int64_t> Character::max_grade(const Grading& g) const {
    std::optional<std::int64_t> m;
    for (const auto& [e, c] : terms_) {
        auto v = g.grade(e);
        if (!m || v > *m) m = v;
    }
    return m;
}

Character Character::swap_variables(std::size_t i, std::size_t j) const {
    Character r(rank_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        std::swap(f[i], f[j]);
        r.add_term(f, c);
    }
    return r;
}

std::string Character::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool monomial_part = !exponent_is_zero(e);
        if (a != 1 || !monomial_part) os << a.get_str();
        bool star = (a != 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << (i < vars.size() ? vars[i] : "x" + std::to_string(i));
            if (e[i] != 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

} // namespace locproj
