#include "locproj/models.hpp"

#include <algorithm>
#include <sstream>

namespace locproj::models {

std::int64_t Partition::size() const {
    std::int64_t s = 0;
    for (auto p : parts) s += p;
    return s;
}

bool Partition::contains_box(std::int64_t row, std::int64_t col) const {
    return row >= 0 && static_cast<std::size_t>(row) < parts.size() && col >= 0 &&
           col < parts[static_cast<std::size_t>(row)];
}

Partition Partition::transposed() const {
    Partition t;
    if (parts.empty()) return t;
    for (std::int64_t col = 0; col < parts[0]; ++col) {
        std::int64_t h = 0;
        for (auto p : parts)
            if (p > col) ++h;
        t.parts.push_back(h);
    }
    return t;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(std::int64_t n) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rem, std::int64_t maxp) {
        if (rem == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (std::int64_t p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n == 0 ? 1 : n);
    return out;
}

std::string SemigroupIdeal::to_string() const {
    std::ostringstream os;
    os << "gaps{";
    bool first = true;
    for (auto v : complement) {
        if (!first) os << ",";
        first = false;
        os << v;
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Hilbert scheme of points in the plane
// ---------------------------------------------------------------------------

namespace {

const Grading kTotalDegree2({1, 1});

Character plane_M() {
    // M = (1 - z1)(1 - z2)
    Character z1 = Character::monomial(Exponent{1, 0});
    Character z2 = Character::monomial(Exponent{0, 1});
    Character one = Character::one(2);
    return (one - z1) * (one - z2);
}

Character plane_Z_truncated(std::int64_t k) {
    RationalCharacter Z(Character::one(2));
    Z.multiply_denominator_factor(Exponent{1, 0}, 1);
    Z.multiply_denominator_factor(Exponent{0, 1}, 1);
    return Z.expand_truncated(kTotalDegree2, k);
}

Character hilb_cotangent_raw(const Partition& mu, std::int64_t k) {
    Character Z = plane_Z_truncated(k);
    Character U = hilb_U(mu);
    Character V = Z - U;
    Character M = plane_M();
    Character inv = Character::monomial(Exponent{-1, -1});
    // chi(R,R) - chi(I,I) = z1^{-1} z2^{-1} M (Z^* Z - V^* V)
    return inv * M * (Z.dual() * Z - V.dual() * V);
}

} // namespace

Character hilb_U(const Partition& mu) {
    Character u(2);
    for (std::size_t i = 0; i < mu.parts.size(); ++i)
        for (std::int64_t j = 0; j < mu.parts[i]; ++j)
            u.add_term(Exponent{j, static_cast<std::int64_t>(i)}, 1);
    return u;
}

std::vector<std::pair<Partition, Character>> hilb_fixed_points(std::int64_t n) {
    std::vector<std::pair<Partition, Character>> out;
    for (const auto& mu : partitions_of(n)) out.emplace_back(mu, hilb_U(mu));
    return out;
}

Character hilb_cotangent(const Partition& mu, std::int64_t k_trunc) {
    // Truncation junk lives at total degree ~ +-k; the cotangent itself is
    // supported well inside |degree| <= k/2 once k is large enough.
    auto window = [](const Character& c, std::int64_t w) {
        Character r(2);
        for (const auto& [e, a] : c.terms())
            if (std::abs(e[0] + e[1]) <= w) r.add_term(e, a);
        return r;
    };
    std::int64_t w = k_trunc / 2;
    Character a = window(hilb_cotangent_raw(mu, k_trunc), w);
    Character b = window(hilb_cotangent_raw(mu, k_trunc + 1), w);
    if (!(a == b))
        throw Unstable("hilb_cotangent: truncations " + std::to_string(k_trunc) + " and " +
                       std::to_string(k_trunc + 1) + " disagree");
    return a;
}

std::pair<std::int64_t, std::int64_t> coloring_counts(
    const std::set<std::pair<std::int64_t, std::int64_t>>& U) {
    auto black = [&](std::int64_t i, std::int64_t j) {
        if (i < 0 || j < 0) return true; // outside the quadrant nothing is a weight of V
        return U.count({i, j}) > 0;
    };
    auto white = [&](std::int64_t i, std::int64_t j) { return !black(i, j); };
    std::int64_t hi = 1;
    for (const auto& [i, j] : U) hi = std::max({hi, i + 2, j + 2});

    std::int64_t x0 = 0, x1 = 0;
    for (std::int64_t a = -1; a <= hi; ++a)
        for (std::int64_t b = -1; b <= hi; ++b) {
            // vertex (a, b): boxes (a, b) northeast, (a-1, b-1) southwest
            if (black(a, b) && white(a - 1, b - 1)) ++x0;
            // horizontal edge (a,b)-(a+1,b): boxes (a, b) above, (a, b-1) below
            if (black(a, b) && white(a, b - 1)) ++x1;
            // vertical edge (a,b)-(a,b+1): boxes (a, b) right, (a-1, b) left
            if (black(a, b) && white(a - 1, b)) ++x1;
        }
    return {x0, x1};
}

bool is_young_diagram(const std::set<std::pair<std::int64_t, std::int64_t>>& U) {
    for (const auto& [i, j] : U) {
        if (i < 0 || j < 0) return false;
        if (i > 0 && !U.count({i - 1, j})) return false;
        if (j > 0 && !U.count({i, j - 1})) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Hilbert scheme of the cuspidal curve
// ---------------------------------------------------------------------------

namespace {

const Grading kDegree1({1});

bool in_semigroup(std::int64_t i) { return i == 0 || i >= 2; }

Character curve_Z_truncated(std::int64_t k) {
    Character z(1);
    for (std::int64_t i = 0; i <= k; ++i)
        if (in_semigroup(i)) z.add_term(Exponent{i}, 1);
    return z;
}

} // namespace

std::vector<std::pair<SemigroupIdeal, Character>> curve_fixed_points(std::int64_t n) {
    std::vector<std::pair<SemigroupIdeal, Character>> out;
    if (n < 0) return out;
    // gaps live in {0, 2, ..., 2n+2}; closure under -2/-3 within the
    // semigroup keeps the complement an ideal
    std::vector<std::int64_t> pool;
    for (std::int64_t i = 0; i <= 2 * n + 2; ++i)
        if (in_semigroup(i)) pool.push_back(i);
    std::vector<std::int64_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<std::int64_t>(pick.size()) == n) {
            std::set<std::int64_t> T(pick.begin(), pick.end());
            for (auto t : T) {
                if (in_semigroup(t - 2) && !T.count(t - 2)) return;
                if (in_semigroup(t - 3) && !T.count(t - 3)) return;
            }
            SemigroupIdeal S{T};
            Character u(1);
            for (auto t : T) u.add_term(Exponent{t}, 1);
            out.emplace_back(std::move(S), std::move(u));
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

Character curve_virtual_cotangent(const SemigroupIdeal& S, std::int64_t k_trunc) {
    auto spec = cusp_curve_spec();
    Character U(1);
    for (auto t : S.complement) U.add_term(Exponent{t}, 1);
    auto at = [&](std::int64_t k) {
        Character Z = curve_Z_truncated(k);
        Character T_X = U * (Z - U).dual(); // tangent Hom(V, U)
        return T_X.dual() - spec.E_at(U, kDegree1, k);
    };
    Character a = at(k_trunc), b = at(k_trunc + 1);
    if (!(a == b))
        throw Unstable("curve_virtual_cotangent: truncations " + std::to_string(k_trunc) +
                       " and " + std::to_string(k_trunc + 1) + " disagree");
    return a;
}

// ---------------------------------------------------------------------------
// Affine Grassmannian of SL(2); variable order (q, z)
// ---------------------------------------------------------------------------

std::vector<std::pair<std::int64_t, Character>> affine_fixed_points(std::int64_t n, std::int64_t K) {
    if (K < 0 || K > n) throw BadRange("affine fixed points need 0 <= K <= n");
    std::vector<std::pair<std::int64_t, Character>> out;
    for (std::int64_t k = -K; k <= K; ++k) {
        Character u(2);
        for (std::int64_t i = -n; i <= k - 1; ++i) u.add_term(Exponent{i, 1}, 1);
        for (std::int64_t i = -n; i <= -k - 1; ++i) u.add_term(Exponent{i, -1}, 1);
        out.emplace_back(k, std::move(u));
    }
    return out;
}

namespace {
const Grading kQGrade({1, 0});
}

Character pochhammer(const Exponent& x, std::int64_t N) {
    if (x.size() != 2) throw BadRank("pochhammer expects a (q, z) monomial");
    if (N < 0) throw BadRange("pochhammer order must be nonnegative");
    std::int64_t qdeg = x[0];
    if (qdeg < 0) throw BadRange("pochhammer monomial must have nonnegative q-grade");
    Character acc = Character::one(2);
    Exponent cur = x;
    for (std::int64_t i = 0; cur[0] <= N; ++i) {
        acc = Character::mul_pruned(acc, Character::one(2) - Character::monomial(cur), kQGrade, N);
        cur[0] += 1;
    }
    return acc;
}

Truncation pochhammer_q(std::int64_t N) {
    Character p = pochhammer(Exponent{1, 0}, N);
    return Truncation::from_character(p.restrict(kQGrade), N);
}

Character theta(const Exponent& x, std::int64_t N) {
    Exponent xq = x;
    xq[0] += 1;
    Character t = Character::mul_pruned(pochhammer(Exponent{1, 0}, N), pochhammer(xq, N), kQGrade, N);
    return Character::mul_pruned(t, pochhammer(exponent_neg(x), N), kQGrade, N);
}

// ---------------------------------------------------------------------------
// Bundled example data
// ---------------------------------------------------------------------------

ExampleSpec ExampleSpec::specialized(std::int64_t n2) const {
    ExampleSpec s = *this;
    s.n = n2;
    if (specialize) s = specialize(std::move(s), n2);
    return s;
}

Character ExampleSpec::B_truncated(const Grading& g, std::int64_t l) const {
    if (B_correction) {
        Character b = Z.expand_truncated(g, l);
        b += B_correction->pruned(g, l);
        return b;
    }
    return B_direct->expand_truncated(g, l);
}

Character ExampleSpec::E_at(const Character& U, const Grading& g, std::int64_t l) const {
    Character Ud = U.dual();
    return A * U + B_truncated(g, l) * Ud + C * U * Ud;
}

grassmann::WeightList ExampleSpec::weight_list(const Grading& g, std::int64_t k) const {
    Character zk = Z.expand_truncated(g, k);
    grassmann::WeightList Zl;
    Zl.rank = rank();
    for (const auto& [e, c] : zk.terms()) {
        if (c < 0) throw Error("Z is not an honest representation");
        for (Int i = 0; i < c; ++i) Zl.weights.push_back(e);
    }
    return Zl;
}

Character closed_virtual_cotangent(const Character& U, const ExampleSpec& spec) {
    Character Ud = U.dual();
    Character cot = -(Ud * U) - spec.A * U - spec.C * U * Ud;
    if (!spec.B_correction) throw Error("closed virtual cotangent needs a finite B - Z correction");
    cot -= *spec.B_correction * Ud;
    return cot;
}

ExampleSpec hilbert_plane_spec() {
    ExampleSpec s;
    s.name = "hilbert-plane";
    s.variables = {"z1", "z2"};
    RationalCharacter Z(Character::one(2));
    Z.multiply_denominator_factor(Exponent{1, 0}, 1);
    Z.multiply_denominator_factor(Exponent{0, 1}, 1);
    s.Z = Z;
    s.A = -Character::monomial(Exponent{1, 1});
    s.C = plane_M() - Character::one(2);
    s.B_correction = -Character::one(2); // B = Z - 1
    s.n = 1;
    s.m = 0;
    s.min_m = 0;
    // weights (a, b) restrict to a + (2N+5) b: distinct as long as the
    // a-range stays below 2N+5, which the escalation path never exceeds
    s.grading_for_order = [](std::int64_t N) { return Grading({1, 2 * N + 5}); };
    s.y_points = [](const ExampleSpec& spec, std::int64_t n, const Grading&, std::int64_t,
                    std::int64_t) {
        std::vector<YPoint> out;
        for (const auto& [mu, U] : hilb_fixed_points(n))
            out.push_back({mu.to_string(), U, closed_virtual_cotangent(U, spec)});
        return out;
    };
    return s;
}

ExampleSpec cusp_curve_spec() {
    ExampleSpec s;
    s.name = "cusp-curve";
    s.variables = {"z"};
    // Z = (1 - z^6) / ((1 - z^2)(1 - z^3))
    RationalCharacter Z(Character::one(1) - Character::monomial(Exponent{6}));
    Z.multiply_denominator_factor(Exponent{2}, 1);
    Z.multiply_denominator_factor(Exponent{3}, 1);
    s.Z = Z;
    s.A = -Character::monomial(Exponent{5});
    Character M = (Character::one(1) - Character::monomial(Exponent{2})) *
                  (Character::one(1) - Character::monomial(Exponent{3}));
    s.C = M - Character::one(1);
    // B = Z + z^6 - 1
    Character corr = Character::monomial(Exponent{6}) - Character::one(1);
    s.B_correction = corr;
    s.n = 1;
    s.m = 1;
    s.min_m = 1;
    s.grading_for_order = [](std::int64_t) { return Grading({1}); };
    s.y_points = [](const ExampleSpec& spec, std::int64_t n, const Grading&, std::int64_t,
                    std::int64_t) {
        std::vector<YPoint> out;
        for (const auto& [S, U] : curve_fixed_points(n))
            out.push_back({S.to_string(), U, closed_virtual_cotangent(U, spec)});
        return out;
    };
    return s;
}

namespace {

ExampleSpec with_affine_n(ExampleSpec s, std::int64_t n) {
    s.n = n;
    Character W(2);
    W.add_term(Exponent{-n, 1}, 1);
    W.add_term(Exponent{-n, -1}, 1);
    RationalCharacter Z(W);
    Z.multiply_denominator_factor(Exponent{1, 0}, 1);
    s.Z = Z;
    s.A = Character(2);
    s.C = -Character::monomial(Exponent{1, 0}); // M - 1 with M = 1 - q
    s.B_correction = -W;                        // B = Z - W
    s.y_points = [](const ExampleSpec& spec, std::int64_t n2, const Grading&, std::int64_t,
                    std::int64_t) {
        if (n2 != spec.n) throw Error("affine spec must be specialized to n before enumeration");
        std::vector<YPoint> out;
        for (const auto& [k, U] : affine_fixed_points(n2, n2))
            out.push_back({"k=" + std::to_string(k), U, closed_virtual_cotangent(U, spec)});
        return out;
    };
    return s;
}

} // namespace

ExampleSpec affine_sl2_spec() {
    ExampleSpec s;
    s.name = "affine-sl2";
    s.variables = {"q", "z"};
    s.m = 0;
    s.min_m = 0;
    s.order_scale = 3; // q restricts to t^3 under the (3, 1) grading
    s.grass_rank = [](std::int64_t n) { return 2 * n; };
    s.grading_for_order = [](std::int64_t) { return Grading({3, 1}); };
    s.specialize = with_affine_n;
    // the finite-n value agrees with the q-series limit through q^{2n};
    // n = 3 covers the default order
    return with_affine_n(std::move(s), 3);
}

ExampleSpec builtin_spec(const std::string& name) {
    if (name == "hilbert-plane") return hilbert_plane_spec();
    if (name == "cusp-curve") return cusp_curve_spec();
    if (name == "affine-sl2") return affine_sl2_spec();
    throw Error("unknown example '" + name + "'");
}

} // namespace locproj::models
