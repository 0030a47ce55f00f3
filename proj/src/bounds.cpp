#include "repdec/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "repdec/galois.hpp"

namespace repdec::bounds {

namespace {

std::string str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

void require_k2(std::int64_t k) {
    if (k < 2) throw std::invalid_argument("bound needs k >= 2");
}

}  // namespace

Rational BoundInput::gamma() const {
    require_k2(k);
    return {n, k - 1};
}

Rational BoundInput::delta() const {
    require_k2(k);
    return {ell * n - 1, k - 1};
}

std::int64_t floor_of(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

std::int64_t bound_assignment2(std::int64_t n, std::int64_t k, std::int64_t ell, std::int64_t b) {
    const std::int64_t h = ell / 2;
    const bool odd = ell % 2 == 1;
    if (b == h + 1) return odd ? (n - k) * (h + 1) + h : (n - k) * h + h - 1;
    if (b == h && h >= 1) return odd ? (n - k) * (h + 2) + (h + 1) : (n - k) * (h + 1) + h;
    throw std::invalid_argument("threshold bound only covers b = floor(l/2) and floor(l/2) + 1");
}

Rational rate_threshold(std::int64_t n, std::int64_t ell, std::int64_t b) {
    if (ell < 2) throw std::invalid_argument("rate threshold needs l >= 2");
    const std::int64_t h = ell / 2;
    const bool odd = ell % 2 == 1;
    if (b == h + 1) return odd ? Rational(n + 2 * h - 1, ell) : Rational(2 * h - 3, 2 * h - 1);
    if (b == h) return odd ? Rational(3 * n + 2 * h + 1, 2 * h + 3) : Rational(2 * n + 2 * h - 1, 2 * h + 1);
    throw std::invalid_argument("rate threshold only covers b = floor(l/2) and floor(l/2) + 1");
}

Rational h_function(const BoundInput& in, const Rational& a) {
    const Rational denom = a - Rational(in.ell - 2);
    if (denom.numerator() == 0) throw DomainError("H has a pole at a = l - 2");
    const Rational ln(in.ell * in.n);
    const Rational num = ln * (a + Rational(1, 2) - Rational(in.ell, 2)) -
                         Rational(in.k - 1) * a * (a + 1) / Rational(2) - Rational(1);
    return num / denom;
}

std::int64_t bound_highrate(std::int64_t n, std::int64_t k, std::int64_t ell) {
    require_k2(k);
    if (ell < 3) throw std::invalid_argument("high-rate bound needs l >= 3");
    const BoundInput in{n, k, ell, std::nullopt};
    return floor_of(h_function(in, in.delta()));
}

std::int64_t bound_corollary(std::int64_t d, std::int64_t ell) {
    if (d < 1 || ell < 1) throw std::invalid_argument("corollary bound needs d >= 1 and l >= 1");
    return floor_of(Rational(d * ell * (ell + 1), 4) - Rational(1, 2));
}

Rational j_function(const BoundInput& in, const Rational& a) {
    const Rational a2 = a + 2;
    return Rational(-in.n * (in.ell + 3) - 1) / a2 - Rational(in.k - 1) * a * (a + 1) / (Rational(2) * a2) +
           Rational(in.ell * in.n);
}

std::string to_string(Trend t) {
    switch (t) {
        case Trend::increasing: return "increasing";
        case Trend::decreasing: return "decreasing";
        case Trend::constant: return "constant";
        case Trend::neither: break;
    }
    return "neither";
}

Trend j_trend(const BoundInput& in, std::int64_t a_lo, std::int64_t a_hi) {
    bool up = false, down = false;
    Rational prev = j_function(in, Rational(a_lo));
    for (std::int64_t a = a_lo + 1; a <= a_hi; ++a) {
        const Rational cur = j_function(in, Rational(a));
        up = up || cur > prev;
        down = down || cur < prev;
        prev = cur;
    }
    if (up && down) return Trend::neither;
    if (up) return Trend::increasing;
    if (down) return Trend::decreasing;
    return Trend::constant;
}

bool j_is_monotone_on(const BoundInput& in, std::int64_t a_lo, std::int64_t a_hi) {
    return j_trend(in, a_lo, a_hi) != Trend::neither;
}

std::int64_t bound_lowrate_increasing(std::int64_t n, std::int64_t k, std::int64_t ell) {
    return floor_of(j_function({n, k, ell, std::nullopt}, Rational(ell)));
}

std::int64_t bound_lowrate_decreasing(std::int64_t n, std::int64_t k, std::int64_t ell) {
    return floor_of(j_function({n, k, ell, std::nullopt}, Rational(2 * ell)));
}

std::int64_t equation_count(std::int64_t ell, std::span<const std::int64_t> tau_profile) {
    const auto n = static_cast<std::int64_t>(tau_profile.size());
    std::int64_t tau = 0, correction = 0;
    for (auto t : tau_profile) {
        if (t < 0 || t > ell) throw std::invalid_argument("column error count outside [0, l]");
        tau += t;
        correction += t + 2 * t * ell - t * t;
    }
    const std::int64_t twice = 2 * tau + n * (ell * ell + ell) - correction;
    if (twice % 2 != 0) throw std::logic_error("equation count is not an integer");
    return twice / 2;
}

std::int64_t equation_count_direct(std::int64_t ell, std::span<const std::int64_t> tau_profile) {
    std::int64_t total = 0;
    for (auto t : tau_profile) {
        if (t < 0 || t > ell) throw std::invalid_argument("column error count outside [0, l]");
        total += t + (ell - t) * (ell - t + 1) / 2;
    }
    return total;
}

std::int64_t monomial_count(std::int64_t k, std::int64_t a, std::int64_t b) {
    if (k < 2 || a < 0 || b < 0 || b > k - 2) throw std::invalid_argument("monomial count needs a >= 0, 0 <= b <= k-2");
    return a * (a + 1) / 2 * (k - 1) + (a + 1) * (b + 1);
}

BudgetSplit budget_split(std::int64_t n, std::int64_t k, std::int64_t ell, std::int64_t tau) {
    require_k2(k);
    const std::int64_t total = ell * n - tau - 1;
    if (total < 0) throw std::invalid_argument("tau exceeds l n - 1");
    return {total / (k - 1), total % (k - 1)};
}

std::int64_t unique_decoding_radius(std::int64_t d) { return d >= 1 ? (d - 1) / 2 : 0; }

std::vector<BoundRecord> all_bounds(const BoundInput& in) {
    if (in.n < 1 || in.k < 1 || in.k > in.n || in.ell < 1)
        throw std::invalid_argument("bounds need 1 <= k <= n and l >= 1");
    std::vector<BoundRecord> out;
    const std::int64_t d = in.d();
    const std::int64_t h = in.ell_half();

    out.push_back({"unique_repeated", std::to_string(unique_decoding_radius(in.ell * d)),
                   std::to_string(unique_decoding_radius(in.ell * d)), true, "floor((l d - 1)/2)"});
    out.push_back({"unique_rs_ln", std::to_string(unique_decoding_radius(in.ell * in.n - in.k + 1)),
                   std::to_string(unique_decoding_radius(in.ell * in.n - in.k + 1)), true,
                   "half minimum distance of an [l n, k] RS code"});

    std::vector<std::int64_t> bs;
    if (in.b)
        bs.push_back(*in.b);
    else
        for (std::int64_t b : {h + 1, h})
            if (b >= 1) bs.push_back(b);
    for (std::int64_t b : bs) {
        const std::string suffix = in.b ? "" : "[b=" + std::to_string(b) + "]";
        if (in.ell < 2 || (b != h + 1 && b != h) || b < 1) {
            out.push_back({"assignment2" + suffix, "n/a", "n/a", false, "b must be floor(l/2) or floor(l/2)+1"});
            continue;
        }
        const auto v = bound_assignment2(in.n, in.k, in.ell, b);
        out.push_back({"assignment2" + suffix, std::to_string(v), std::to_string(v), true,
                       "no nonzero error value repeated b times in a column"});
        const Rational thr = rate_threshold(in.n, in.ell, b);
        const std::int64_t kcap = floor_of(thr);
        out.push_back({"rate_threshold" + suffix, std::to_string(kcap), str(thr), in.k <= kcap,
                       "k <= " + str(thr) + " beats half the distance of an [l n, k] RS code"});
    }

    if (in.k >= 2) {
        const Rational gamma = in.gamma();
        const bool high_regime = gamma <= Rational(2);
        if (in.ell >= 3 && in.delta() != Rational(in.ell - 2)) {
            const Rational v = h_function(in, in.delta());
            out.push_back({"highrate", std::to_string(floor_of(v)), str(v), high_regime && in.delta() >= Rational(in.ell - 2),
                           "tau_i <= 1, n/(k-1) <= 2, a >= l-2"});
        }
        const Rational cor = Rational(d * in.ell * (in.ell + 1), 4) - Rational(1, 2);
        out.push_back({"corollary", std::to_string(bound_corollary(d, in.ell)), str(cor), high_regime,
                       "tau_i <= 1, n/(k-1) <= 2, a <= l"});

        const Trend trend = j_trend(in, in.ell, 2 * in.ell);
        const Rational inc = j_function(in, Rational(in.ell));
        const Rational dec = j_function(in, Rational(2 * in.ell));
        out.push_back({"lowrate_increasing", std::to_string(floor_of(inc)), str(inc),
                       !high_regime && trend == Trend::increasing,
                       "tau_i >= l-2, n/(k-1) > 2, J increasing (J on [l,2l] is " + to_string(trend) + ")"});
        out.push_back({"lowrate_decreasing", std::to_string(floor_of(dec)), str(dec),
                       !high_regime && trend == Trend::decreasing,
                       "tau_i >= l-2, n/(k-1) > 2, J decreasing (J on [l,2l] is " + to_string(trend) + ")"});
    }
    return out;
}

}  // namespace repdec::bounds
