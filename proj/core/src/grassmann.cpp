#include "locproj/grassmann.hpp"

#include <algorithm>
#include <set>

#include "locproj/parallel.hpp"

namespace locproj::grassmann {

Character WeightList::total() const {
    Character c(rank);
    for (const auto& w : weights) c.add_term(w, 1);
    return c;
}

std::vector<std::int64_t> WeightList::distinct_grades(const Grading& g) const {
    std::vector<std::int64_t> grades;
    grades.reserve(weights.size());
    std::set<std::int64_t> seen;
    for (const auto& w : weights) {
        std::int64_t v = g.grade(w);
        if (!seen.insert(v).second)
            throw DegenerateGrading("two weights share grade " + std::to_string(v) +
                                    "; choose a more generic grading");
        grades.push_back(v);
    }
    return grades;
}

std::vector<FixedPoint> enumerate_fixed_points(const WeightList& Z, std::int64_t n) {
    std::int64_t d = static_cast<std::int64_t>(Z.size());
    if (n < 0 || n > d) throw BadRank("rank " + std::to_string(n) + " on " + std::to_string(d) + " weights");
    std::vector<FixedPoint> out;
    std::vector<std::size_t> subset(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) subset[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    auto emit = [&] {
        FixedPoint p;
        p.indices = subset;
        Character u(Z.rank), v(Z.rank);
        std::size_t k = 0;
        for (std::size_t i = 0; i < Z.size(); ++i) {
            if (k < subset.size() && subset[k] == i) {
                u.add_term(Z.weights[i], 1);
                ++k;
            } else {
                v.add_term(Z.weights[i], 1);
            }
        }
        p.U = std::move(u);
        p.V = std::move(v);
        out.push_back(std::move(p));
    };
    if (n == 0) {
        emit();
        return out;
    }
    for (;;) {
        emit();
        std::int64_t i = n - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] ==
                             static_cast<std::size_t>(d - n + i))
            --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < n; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Character tangent_character(const FixedPoint& p) { return p.U * p.V.dual(); }

Truncation virtual_localization_term(const Character& integrand, const Character& cotangent,
                                     const Grading& g, std::int64_t N) {
    // gamma / lambda(chi) = gamma * lambda(-chi): positive cotangent weights
    // become denominator factors, negative ones numerator factors.
    Character chi = cotangent.restrict(g);
    if (chi.constant_term() != 0)
        throw DegenerateGrading("virtual cotangent has a grade-0 weight");
    RationalCharacter term = plethysm::lambda_total(-chi) * integrand.restrict(g);
    return expand(term, N);
}

std::vector<Truncation> localization_terms(const WeightList& Z, std::int64_t n,
                                           const GammaFn& gamma, const Grading& g,
                                           std::int64_t N) {
    Z.distinct_grades(g);
    auto points = enumerate_fixed_points(Z, n);
    std::vector<Truncation> terms(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const FixedPoint& p = points[i];
        Character cot = tangent_character(p).dual();
        terms[i] = virtual_localization_term(gamma(p), cot, g, N);
    });
    return terms;
}

Truncation euler_localized(const WeightList& Z, std::int64_t n, const GammaFn& gamma,
                           const Grading& g, std::int64_t N) {
    auto terms = localization_terms(Z, n, gamma, g, N);
    Truncation acc = Truncation::zero(N);
    for (const auto& t : terms) acc = acc + t;
    return acc;
}

namespace {

// h_m(t^{g_1}, ..., t^{g_d}) for m = 0..M, as univariate characters
std::vector<Character> homogeneous_sums(const std::vector<std::int64_t>& grades, std::int64_t M) {
    std::vector<Character> h(static_cast<std::size_t>(M + 1), Character(1));
    h[0] = Character::one(1);
    // DP over weights: after weight i, h[m] = sum_{j<=m} t^{g_i j} h_prev[m-j]
    std::vector<Character> cur = h;
    for (auto gi : grades) {
        std::vector<Character> next(static_cast<std::size_t>(M + 1), Character(1));
        for (std::int64_t m = 0; m <= M; ++m) {
            Character acc(1);
            for (std::int64_t j = 0; j <= m; ++j)
                acc += cur[static_cast<std::size_t>(m - j)] * Character::t_power(gi * j);
            next[static_cast<std::size_t>(m)] = std::move(acc);
        }
        cur = std::move(next);
    }
    return cur;
}

// sum over j_1..j_d >= 1 with sum = s of t^{-sum g_i j_i}, for s = 0..S
std::vector<Character> positive_compositions(const std::vector<std::int64_t>& grades, std::int64_t S) {
    std::vector<Character> cur(static_cast<std::size_t>(S + 1), Character(1));
    cur[0] = Character::one(1);
    for (auto gi : grades) {
        std::vector<Character> next(static_cast<std::size_t>(S + 1), Character(1));
        for (std::int64_t s = 0; s <= S; ++s) {
            Character acc(1);
            for (std::int64_t j = 1; j <= s; ++j)
                acc += cur[static_cast<std::size_t>(s - j)] * Character::t_power(-gi * j);
            next[static_cast<std::size_t>(s)] = std::move(acc);
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace

Truncation xi0(const XPoly& f, const WeightList& Z, const Grading& g, std::int64_t N) {
    auto grades = Z.distinct_grades(g);
    std::int64_t M = 0;
    for (const auto& [m, c] : f) M = std::max(M, m);
    auto h = homogeneous_sums(grades, std::max<std::int64_t>(M, 0));
    Character out(1);
    for (const auto& [m, c] : f) {
        if (m < 0) continue; // no x^0 term arises from negative powers times the x^{-j} expansion
        out += h[static_cast<std::size_t>(m)] * c;
    }
    return Truncation::from_character(out, N);
}

Truncation xid(const XPoly& f, const WeightList& Z, const Grading& g, std::int64_t N) {
    auto grades = Z.distinct_grades(g);
    std::int64_t d = static_cast<std::int64_t>(Z.size());
    std::int64_t S = 0;
    for (const auto& [m, c] : f) S = std::max(S, -m);
    auto comp = positive_compositions(grades, S);
    Character out(1);
    for (const auto& [m, c] : f) {
        if (-m < d) continue; // expansion about x = 0 starts at x^d
        out += comp[static_cast<std::size_t>(-m)] * c;
    }
    // xi^d = -(-1)^d Res_{x=0} x^{-1} f X_x; the residue picks up (-1)^d from
    // the expansion of X_x about x = 0, leaving an overall minus sign
    return Truncation::from_character(-out, N);
}

IdentityReport residue_sum_check(const XPoly& f, const WeightList& Z, const Grading& g,
                                 std::int64_t N) {
    std::int64_t d = static_cast<std::int64_t>(Z.size());
    Truncation a = xi0(f, Z, g, N);
    Truncation b = xid(f, Z, g, N);
    Truncation lhs = (d % 2 == 0) ? a + b : a - b;
    GammaFn gamma = [&](const FixedPoint& p) {
        // U is a single weight; f(U) = sum f_m U^m
        const auto& [e, c] = *p.U.terms().begin();
        Character out(Z.rank);
        for (const auto& [m, fm] : f) {
            Exponent em(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) em[i] = e[i] * m;
            out.add_term(em, fm);
        }
        return out;
    };
    Truncation rhs = euler_localized(Z, 1, gamma, g, N);
    IdentityReport rep;
    rep.identity = "residue-sum";
    rep.order = N;
    rep.first_mismatch = Truncation::first_mismatch(lhs, rhs);
    rep.match = !rep.first_mismatch.has_value();
    return rep;
}

Character elementary_xpoly(std::int64_t i, std::size_t n) {
    if (i < 0 || static_cast<std::size_t>(i) > n) return Character(n);
    // coefficient extraction from prod (1 + x_p)
    Character acc = Character::one(n);
    for (std::size_t p = 0; p < n; ++p) {
        Exponent e(n, 0);
        e[p] = 1;
        acc = acc * (Character::one(n) + Character::monomial(e));
    }
    Character out(n);
    for (const auto& [e, c] : acc.terms()) {
        std::int64_t deg = 0;
        for (auto v : e) deg += v;
        if (deg == i) out.add_term(e, c);
    }
    return out;
}

Character symfun_xpoly(const plethysm::SymFun& f, std::size_t n) {
    Character out(n);
    for (const auto& term : f.terms) {
        Character prod = Character::one(n);
        for (auto i : term.indices) prod = prod * elementary_xpoly(i, n);
        out += prod * Int(term.coeff);
    }
    return out;
}

namespace {

Character vandermonde_lambda(std::size_t n) {
    // Delta_x = prod_{i != j} (1 - x_i x_j^{-1})
    Character acc = Character::one(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Exponent e(n, 0);
            e[i] = 1;
            e[j] = -1;
            acc = acc * (Character::one(n) - Character::monomial(e));
        }
    return acc;
}

void check_symmetric(const Character& f, std::size_t n) {
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(f.swap_variables(i, i + 1) == f))
            throw NotSymmetric("martin_chi integrand is not a symmetric polynomial");
}

} // namespace

Truncation martin_chi(const WeightList& Z, std::int64_t n, const Character& f_x,
                      const Grading& g, std::int64_t N, MartinMode mode) {
    std::size_t un = static_cast<std::size_t>(n);
    if (f_x.rank() != un && !f_x.is_zero()) throw BadRank("integrand rank must equal n");
    check_symmetric(f_x, un);
    auto grades = Z.distinct_grades(g);
    std::int64_t d = static_cast<std::int64_t>(Z.size());
    if (n > d) throw BadRank("n exceeds |Z|");

    Character integrand = f_x * vandermonde_lambda(un);
    Truncation acc = Truncation::zero(N);

    if (mode == MartinMode::borel_weil) {
        // apply xi0 one variable at a time: x_p^m -> h_m(t^{g_i}), m >= 0
        std::int64_t M = 0;
        for (const auto& [e, c] : integrand.terms())
            for (auto v : e) M = std::max(M, v);
        auto h = homogeneous_sums(grades, M);
        // work in rank n+1: x variables then t
        Character cur(un + 1);
        for (const auto& [e, c] : integrand.terms()) {
            Exponent lifted = e;
            lifted.push_back(0);
            cur.add_term(lifted, c);
        }
        for (std::size_t p = 0; p < un; ++p) {
            Character next(un + 1);
            for (const auto& [e, c] : cur.terms()) {
                std::int64_t m = e[p];
                if (m < 0) continue;
                for (const auto& [he, hc] : h[static_cast<std::size_t>(m)].terms()) {
                    Exponent f2 = e;
                    f2[p] = 0;
                    f2[un] += he[0];
                    next.add_term(f2, c * hc);
                }
            }
            cur = std::move(next);
        }
        Character uni(1);
        for (const auto& [e, c] : cur.terms()) uni.add_term(Exponent{e[un]}, c);
        acc = acc + Truncation::from_character(uni, N);
    } else {
        // sum over ordered tuples of distinct fixed weights; Delta kills the
        // coincident tuples, so skipping them changes nothing
        std::vector<std::size_t> tuple(un);
        std::vector<bool> used(static_cast<std::size_t>(d), false);
        std::function<void(std::size_t)> rec = [&](std::size_t p) {
            if (p == un) {
                Character num(1);
                for (const auto& [e, c] : integrand.terms()) {
                    std::int64_t t = 0;
                    for (std::size_t q = 0; q < un; ++q) t += e[q] * grades[tuple[q]];
                    num.add_term(Exponent{t}, c);
                }
                if (num.is_zero()) return;
                RationalCharacter term(num);
                for (std::size_t q = 0; q < un; ++q)
                    for (std::int64_t i = 0; i < d; ++i) {
                        if (static_cast<std::size_t>(i) == tuple[q]) continue;
                        term.multiply_denominator_factor(
                            Exponent{grades[static_cast<std::size_t>(i)] - grades[tuple[q]]}, 1);
                    }
                acc = acc + expand(term, N);
                return;
            }
            for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
                if (used[i]) continue;
                used[i] = true;
                tuple[p] = i;
                rec(p + 1);
                used[i] = false;
            }
        };
        rec(0);
    }
    Rat inv_nfact(Int(1), factorial(n));
    inv_nfact.canonicalize();
    return acc.scaled(inv_nfact);
}

} // namespace locproj::grassmann
