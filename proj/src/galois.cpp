#include "repdec/galois.hpp"

#include <numeric>
#include <sstream>

namespace repdec {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Digits = std::vector<std::uint32_t>;

// Remainder of a modulo the monic polynomial b over GF(p), in place.
void poly_mod_inplace(Digits& a, const Digits& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t t = 0; t <= db; ++t) {
                const std::uint32_t sub = (lead * b[t]) % p;
                a[shift + t] = (a[shift + t] + p - sub) % p;
            }
        }
        a.pop_back();
    }
}

Digits unpack(Elem a, std::uint32_t p, std::uint32_t m) {
    Digits d(m, 0);
    for (std::uint32_t t = 0; t < m; ++t) {
        d[t] = a % p;
        a /= p;
    }
    return d;
}

Elem pack(const Digits& d, std::uint32_t p) {
    Elem v = 0;
    for (std::size_t t = d.size(); t-- > 0;) v = v * p + d[t];
    return v;
}

// clang-format off
// Low-to-high coefficients; verified irreducible at construction.
const std::vector<std::uint32_t> kBinaryModuli[] = {
    {0, 1},
    {1, 1, 1},
    {1, 1, 0, 1},
    {1, 1, 0, 0, 1},
    {1, 0, 1, 0, 0, 1},
    {1, 1, 0, 0, 0, 0, 1},
    {1, 1, 0, 0, 0, 0, 0, 1},
    {1, 0, 1, 1, 1, 0, 0, 0, 1},
    {1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
    {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1},
};
const std::vector<std::uint32_t> kTernaryModuli[] = {
    {0, 1},
    {1, 0, 1},
    {1, 2, 0, 1},
    {2, 1, 0, 0, 1},
    {1, 2, 0, 0, 0, 1},
    {2, 1, 0, 0, 0, 0, 1},
    {2, 0, 1, 0, 0, 0, 0, 1},
    {2, 0, 1, 0, 0, 0, 0, 0, 1},
    {2, 0, 0, 0, 1, 0, 0, 0, 0, 1},
    {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1},
};
// clang-format on

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    if (poly.empty() || poly.back() == 0) return false;
    const std::size_t m = poly.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    const Digits f(poly.begin(), poly.end());
    // Every monic divisor candidate of degree d in [1, m/2].
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t t = 0; t < d; ++t) count *= p;
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            Digits g(d + 1, 0);
            std::uint64_t v = tail;
            for (std::size_t t = 0; t < d; ++t) {
                g[t] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            Digits r = f;
            poly_mod_inplace(r, g, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t m) {
    if (m < 1 || m > 10) throw FieldError("no default modulus for extension degree " + std::to_string(m));
    if (p == 2) return kBinaryModuli[m - 1];
    if (p == 3) return kTernaryModuli[m - 1];
    throw FieldError("no default modulus for characteristic " + std::to_string(p));
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m) {
    return std::make_shared<const Field>(p, m, default_modulus(p, m));
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m,
                                         std::vector<std::uint32_t> modulus) {
    return std::make_shared<const Field>(p, m, std::move(modulus));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("extension degree must be positive");
    for (std::uint32_t t = 0; t < m; ++t) {
        if (static_cast<std::uint64_t>(q_) * p > (1u << 16))
            throw FieldError("field size exceeds 2^16");
        q_ *= p;
    }
    if (modulus_.size() != m + 1 || modulus_.back() != 1)
        throw FieldError("modulus must be monic of degree " + std::to_string(m));
    for (auto c : modulus_)
        if (c >= p) throw FieldError("modulus coefficient out of range");
    if (!is_irreducible(p, modulus_)) throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");

    if (p_ != 2) {
        neg_.resize(q_);
        for (Elem a = 0; a < q_; ++a) {
            Digits d = unpack(a, p_, m_);
            for (auto& x : d) x = (p_ - x) % p_;
            neg_[a] = pack(d, p_);
        }
        if (q_ <= 256) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            for (Elem a = 0; a < q_; ++a)
                for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
        }
    }

    small_binom_.assign(static_cast<std::size_t>(p_) * p_, 0);
    for (std::uint32_t a = 0; a < p_; ++a) {
        small_binom_[a * p_] = 1;
        for (std::uint32_t b = 1; b <= a; ++b)
            small_binom_[a * p_ + b] =
                (small_binom_[(a - 1) * p_ + b - 1] + (b <= a - 1 ? small_binom_[(a - 1) * p_ + b] : 0)) % p_;
    }

    primitive_ = find_primitive();
    const std::uint32_t order = q_ - 1;
    exp_.resize(2 * static_cast<std::size_t>(order));
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_schoolbook(x, primitive_);
    }
    for (std::uint32_t i = order; i < 2 * order; ++i) exp_[i] = exp_[i - order];
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0, scale = 1;
    for (std::uint32_t t = 0; t < m_; ++t) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::mul_schoolbook(Elem a, Elem b) const noexcept {
    const Digits da = unpack(a, p_, m_), db = unpack(b, p_, m_);
    Digits prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    poly_mod_inplace(prod, modulus_, p_);
    prod.resize(m_, 0);
    return pack(prod, p_);
}

Elem Field::find_primitive() const {
    if (q_ == 2) return 1;
    const std::uint64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [this](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_schoolbook(r, a);
            a = mul_schoolbook(a, a);
            e >>= 1;
        }
        return r;
    };
    for (Elem g = 2; g < q_; ++g) {
        bool ok = true;
        for (auto r : factors) {
            if (slow_pow(g, order / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw FieldError("no primitive element found");  // unreachable for a field
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = q_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Elem Field::from_int(std::int64_t n) const noexcept {
    const std::int64_t pp = p_;
    return static_cast<Elem>(((n % pp) + pp) % pp);
}

std::uint64_t Field::order(Elem a) const {
    if (a == 0) throw DomainError("zero has no multiplicative order");
    const std::uint64_t group = q_ - 1;
    return group / std::gcd<std::uint64_t, std::uint64_t>(log_[a], group);
}

std::uint32_t Field::binomial_mod_p(std::uint64_t n, std::uint64_t r) const noexcept {
    if (r > n) return 0;
    if (p_ == 2) return (n & r) == r ? 1 : 0;
    std::uint32_t out = 1;
    while (r > 0) {
        const auto nd = static_cast<std::uint32_t>(n % p_), rd = static_cast<std::uint32_t>(r % p_);
        if (rd > nd) return 0;
        out = out * small_binom_[nd * p_ + rd] % p_;
        n /= p_;
        r /= p_;
    }
    return out;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (m_ > 1) os << "^" << m_;
    os << ")";
    return os.str();
}

Elem primitive_element(const Field& field) { return field.primitive(); }

FieldElement::FieldElement(FieldPtr field, Elem index) : field_(std::move(field)), index_(index) {
    if (!field_) throw FieldError("null field");
    if (index_ >= field_->size()) throw FieldError("element index out of range");
}

const Field& FieldElement::same_field(const FieldElement& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_)) throw FieldError("mismatched fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return {field_, same_field(o).add(index_, o.index_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return {field_, same_field(o).sub(index_, o.index_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    return {field_, same_field(o).mul(index_, o.index_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    return {field_, same_field(o).div(index_, o.index_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(index_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(index_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(index_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    same_field(o);
    return index_ == o.index_;
}

}  // namespace repdec
