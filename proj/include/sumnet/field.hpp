#ifndef SUMNET_FIELD_HPP
#define SUMNET_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sumnet/errors.hpp"

namespace sumnet {

/// Element of GF(p^k) in polynomial representation, packed base p:
/// value = c0 + c1*p + ... + c_{k-1}*p^{k-1} (low-degree digit least
/// significant). Packed values 0..q-1 are exactly the canonical
/// element order: zero first, then the prime subfield, then higher
/// basis monomials.
using FqElem = std::uint32_t;

class Fq;
using FieldPtr = std::shared_ptr<const Fq>;

/// GF(p^k) descriptor. Owns all element arithmetic; elements are plain
/// packed integers and only meaningful relative to their field.
/// Immutable after construction.
class Fq {
public:
    /// Builds GF(p^k) with the lexicographically smallest monic irreducible
    /// modulus of degree k over GF(p) (coefficients compared low-degree first).
    /// Throws NotPrime / InvalidParameter.
    static FieldPtr make(std::uint32_t p, std::uint32_t k = 1);

    /// Parses "p" or "p^k", e.g. "2", "3", "2^2".
    static FieldPtr parse(const std::string& spec);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return q_; }

    /// Modulus polynomial, k+1 coefficients low-degree first, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }

    /// Element from polynomial coefficients (low-degree first); longer inputs
    /// are reduced by the modulus, entries are reduced mod p.
    FqElem element(const std::vector<std::uint32_t>& coeffs) const;

    /// Image of the integer c under repeated addition of 1, i.e. (c mod p)
    /// inside the prime subfield. This is the sense in which integer
    /// constants such as m-2 live in the field.
    FqElem from_int(std::int64_t c) const;

    /// Coefficients of a, low-degree first, always k entries.
    std::vector<std::uint32_t> coeffs(FqElem a) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;  // throws DivisionByZero on a == 0
    FqElem pow(FqElem a, std::uint64_t e) const;

    /// All q elements in canonical order (packed value 0..q-1), zero first.
    std::vector<FqElem> elements() const;

    /// True iff the field characteristic divides c.
    bool char_divides(std::int64_t c) const;

    std::string spec_string() const;       ///< "p" or "p^k"
    std::string label() const;             ///< "GF(q)"
    std::string render(FqElem a) const;    ///< "[c0,...,c_{k-1}]", low degree first

    bool operator==(const Fq& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Fq& other) const { return !(*this == other); }

private:
    Fq(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

    FqElem add_direct(FqElem a, FqElem b) const;
    FqElem mul_direct(FqElem a, FqElem b) const;

    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> modulus_;

    // q*q lookup tables, built for small fields only
    bool lut_ = false;
    std::vector<FqElem> add_lut_, mul_lut_, neg_lut_, inv_lut_;
};

/// True iff the two descriptors denote the same field.
inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

bool is_prime(std::uint32_t n);

/// Dense polynomial over GF(p), coefficients low-degree first.
using PolyGFp = std::vector<std::uint32_t>;

/// Trial division by all monic polynomials of degree <= deg(f)/2.
bool poly_irreducible(const PolyGFp& f, std::uint32_t p);

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// coefficients compared low-degree first. Returns k+1 coefficients.
PolyGFp smallest_irreducible(std::uint32_t p, std::uint32_t k);

}  // namespace sumnet

#endif
