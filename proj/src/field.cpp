#include "sumnet/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sumnet {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 26;
constexpr std::uint32_t kLutMaxOrder = 256;

int poly_degree(const PolyGFp& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// remainder of a modulo the monic polynomial m, over GF(p)
PolyGFp poly_rem(PolyGFp a, const PolyGFp& m, std::uint32_t p) {
    const int dm = poly_degree(m);
    for (int i = poly_degree(a); i >= dm && dm >= 0; i = poly_degree(a)) {
        const std::uint64_t c = a[static_cast<std::size_t>(i)];
        const int shift = i - dm;
        for (int j = 0; j <= dm; ++j) {
            const std::size_t idx = static_cast<std::size_t>(j + shift);
            const std::uint64_t sub = (c * m[static_cast<std::size_t>(j)]) % p;
            a[idx] = static_cast<std::uint32_t>((a[idx] + p - sub) % p);
        }
    }
    return a;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool poly_irreducible(const PolyGFp& f, std::uint32_t p) {
    const int k = poly_degree(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PolyGFp g(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_degree(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

PolyGFp smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    // candidates in ascending lexicographic order, c0 most significant
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PolyGFp f(k + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = k; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[k] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw InvalidParameter("no irreducible polynomial found");  // unreachable for prime p
}

Fq::Fq(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k_; ++i) q *= p_;
    q_ = static_cast<std::uint32_t>(q);
    if (q_ <= kLutMaxOrder) {
        add_lut_.resize(static_cast<std::size_t>(q_) * q_);
        mul_lut_.resize(static_cast<std::size_t>(q_) * q_);
        neg_lut_.resize(q_);
        inv_lut_.assign(q_, 0);
        for (FqElem a = 0; a < q_; ++a) {
            for (FqElem b = 0; b < q_; ++b) {
                add_lut_[static_cast<std::size_t>(a) * q_ + b] = add_direct(a, b);
                mul_lut_[static_cast<std::size_t>(a) * q_ + b] = mul_direct(a, b);
            }
        }
        for (FqElem a = 0; a < q_; ++a) {
            for (FqElem b = 0; b < q_; ++b) {
                if (add_lut_[static_cast<std::size_t>(a) * q_ + b] == 0) neg_lut_[a] = b;
                if (a != 0 && mul_lut_[static_cast<std::size_t>(a) * q_ + b] == 1) inv_lut_[a] = b;
            }
        }
        lut_ = true;
    }
}

FieldPtr Fq::make(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidParameter("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw InvalidParameter("field order " + std::to_string(p) + "^" + std::to_string(k) + " too large");
    }
    return FieldPtr(new Fq(p, k, smallest_irreducible(p, k)));
}

FieldPtr Fq::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const auto caret = s.find('^');
    try {
        std::size_t used = 0;
        const unsigned long p = std::stoul(s.substr(0, caret), &used);
        if (used != (caret == std::string::npos ? s.size() : caret)) throw ParseError("bad field spec: " + spec);
        unsigned long k = 1;
        if (caret != std::string::npos) {
            const std::string kpart = s.substr(caret + 1);
            k = std::stoul(kpart, &used);
            if (used != kpart.size()) throw ParseError("bad field spec: " + spec);
        }
        return make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad field spec: " + spec);
    } catch (const std::out_of_range&) {
        throw ParseError("bad field spec: " + spec);
    }
}

FqElem Fq::element(const std::vector<std::uint32_t>& coeffs) const {
    PolyGFp f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = coeffs[i] % p_;
    if (f.size() > k_) f = poly_rem(std::move(f), modulus_, p_);
    FqElem r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < k_ && i < f.size(); ++i) {
        r += static_cast<FqElem>(f[i] * scale);
        scale *= p_;
    }
    return r;
}

FqElem Fq::from_int(std::int64_t c) const {
    const std::int64_t r = ((c % p_) + p_) % p_;
    return static_cast<FqElem>(r);
}

std::vector<std::uint32_t> Fq::coeffs(FqElem a) const {
    std::vector<std::uint32_t> out(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

FqElem Fq::add_direct(FqElem a, FqElem b) const {
    FqElem r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

FqElem Fq::mul_direct(FqElem a, FqElem b) const {
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    std::uint32_t da[32], db[32];
    for (std::uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    // reduce by the monic modulus
    for (std::uint32_t i = 2 * k_ - 2; i + 1 > k_; --i) {
        const std::uint64_t c = prod[i] % p_;
        prod[i] = 0;
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j) prod[i - k_ + j] += c * (p_ - modulus_[j]);
    }
    FqElem r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += static_cast<FqElem>((prod[i] % p_) * scale);
        scale *= p_;
    }
    return r;
}

FqElem Fq::add(FqElem a, FqElem b) const {
    if (lut_) return add_lut_[static_cast<std::size_t>(a) * q_ + b];
    return add_direct(a, b);
}

FqElem Fq::neg(FqElem a) const {
    if (lut_) return neg_lut_[a];
    FqElem r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::mul(FqElem a, FqElem b) const {
    if (lut_) return mul_lut_[static_cast<std::size_t>(a) * q_ + b];
    return mul_direct(a, b);
}

FqElem Fq::pow(FqElem a, std::uint64_t e) const {
    FqElem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FqElem Fq::inv(FqElem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + label());
    if (lut_) return inv_lut_[a];
    return pow(a, q_ - 2);
}

std::vector<FqElem> Fq::elements() const {
    std::vector<FqElem> out(q_);
    for (FqElem i = 0; i < q_; ++i) out[i] = i;
    return out;
}

bool Fq::char_divides(std::int64_t c) const { return ((c % p_) + p_) % p_ == 0; }

std::string Fq::spec_string() const {
    if (k_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(k_);
}

std::string Fq::label() const { return "GF(" + std::to_string(q_) + ")"; }

std::string Fq::render(FqElem a) const {
    std::ostringstream os;
    os << '[';
    const auto c = coeffs(a);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

}  // namespace sumnet
