#include "repdec/rscode.hpp"

#include <stdexcept>
#include <string>

namespace repdec {

namespace {

std::vector<Elem> power_points(const Field& f, std::uint32_t n) {
    if (n > f.size() - 1)
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds q - 1 for power evaluation points");
    std::vector<Elem> pts(n);
    for (std::uint32_t i = 0; i < n; ++i) pts[i] = f.exp(i);
    return pts;
}

}  // namespace

RSCode::RSCode(FieldPtr field, std::uint32_t n, std::uint32_t k)
    : field_(std::move(field)), n_(n), k_(k), points_(power_points(*field_, n)) {
    validate();
}

RSCode::RSCode(FieldPtr field, std::uint32_t k, std::vector<Elem> points)
    : field_(std::move(field)), n_(static_cast<std::uint32_t>(points.size())), k_(k), points_(std::move(points)) {
    validate();
}

void RSCode::validate() const {
    if (!field_) throw std::invalid_argument("RS code needs a field");
    if (k_ < 1 || k_ > n_ || n_ > field_->size())
        throw std::invalid_argument("RS code requires 1 <= k <= n <= q (n=" + std::to_string(n_) +
                                    ", k=" + std::to_string(k_) + ")");
    std::vector<bool> seen(field_->size(), false);
    for (auto a : points_) {
        if (a >= field_->size()) throw std::invalid_argument("evaluation point out of range");
        if (seen[a]) throw std::invalid_argument("evaluation points must be distinct");
        seen[a] = true;
    }
}

Codeword RSCode::encode(const UniPoly& message) const {
    if (message.degree() > static_cast<int>(k_) - 1)
        throw std::invalid_argument("message degree " + std::to_string(message.degree()) + " exceeds k-1");
    Codeword out(n_);
    for (std::uint32_t i = 0; i < n_; ++i) out[i] = message.evaluate(*field_, points_[i]);
    return out;
}

UniPoly RSCode::interpolate(const std::vector<Elem>& values) const {
    if (values.size() != n_) throw std::invalid_argument("interpolation needs n values");
    const Field& f = *field_;
    // Newton divided differences, then expand the Newton form.
    std::vector<Elem> dd(values);
    for (std::uint32_t level = 1; level < n_; ++level)
        for (std::uint32_t i = n_ - 1; i >= level; --i)
            dd[i] = f.div(f.sub(dd[i], dd[i - 1]), f.sub(points_[i], points_[i - level]));
    std::vector<Elem> poly{dd[n_ - 1]};
    for (std::uint32_t i = n_ - 1; i-- > 0;) {
        // poly = poly * (x - a_i) + dd[i]
        std::vector<Elem> next(poly.size() + 1, 0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] = f.add(next[t + 1], poly[t]);
            next[t] = f.sub(next[t], f.mul(poly[t], points_[i]));
        }
        next[0] = f.add(next[0], dd[i]);
        poly = std::move(next);
    }
    return UniPoly(std::move(poly));
}

bool RSCode::is_codeword(const Codeword& word) const {
    if (word.size() != n_) return false;
    return interpolate(word).degree() <= static_cast<int>(k_) - 1;
}

std::vector<std::vector<Elem>> RSCode::generator_matrix() const {
    std::vector<std::vector<Elem>> g;
    for (std::uint32_t r = 0; r < k_; ++r) {
        std::vector<Elem> mono(r + 1, 0);
        mono[r] = 1;
        g.push_back(encode(UniPoly(std::move(mono))));
    }
    return g;
}

std::uint32_t hamming_distance(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming distance of unequal lengths");
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::uint32_t hamming_weight(const std::vector<Elem>& a) {
    std::uint32_t w = 0;
    for (auto v : a) w += v != 0;
    return w;
}

}  // namespace repdec
