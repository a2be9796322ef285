#ifndef SUMNET_SOLVER_HPP
#define SUMNET_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumnet/coding.hpp"
#include "sumnet/generators.hpp"

namespace sumnet {

enum class Solvability { SolvableWithWitness, UnsolvableExhaustive, UnsolvableStructural, Unknown };

std::string to_string(Solvability s);

struct SearchStats {
    std::uint64_t assignments_tried = 0;
    std::uint64_t solutions_found = 0;
    double elapsed_seconds = 0.0;
};

struct SolvabilityVerdict {
    std::string network_id;
    std::string field_spec;
    int block_len = 1;
    Solvability status = Solvability::Unknown;
    std::optional<LinearCode> witness;
    std::vector<LinearCode> witnesses;  // all found, capped (find_all searches only)
    std::string evidence;
    SearchStats stats;

    bool solvable() const { return status == Solvability::SolvableWithWitness; }
};

/// The sufficiency construction for the four-layer family: every coefficient
/// the identity, except the last terminal's decode row, which is the scalar
/// matrix (m-2)^{-1} I. Valid exactly when the field characteristic does not
/// divide m-2; otherwise throws CharacteristicDividesM2.
LinearCode smstar_structured_code(int m, const FieldPtr& field, int block_len);

/// True iff beta + gamma^{-1} = gamma + alpha^{-1} = alpha + beta^{-1} = 1.
/// Throws ZeroCoefficient when any argument is zero.
bool g1_condition_check(const FieldPtr& field, FqElem alpha, FqElem beta, FqElem gamma);

/// The g1 code shape parameterized by the combining coefficients: unit source
/// and relay coefficients, one unit in-coefficient per middle vertex with
/// (alpha, beta, gamma) on the partner in-edges, and decode rows
/// (1, gamma^{-1}), (1, alpha^{-1}), (1, beta^{-1}). All three must be
/// nonzero.
LinearCode g1_code_from_triple(const FieldPtr& field, FqElem alpha, FqElem beta, FqElem gamma);

/// Solving g1 code for any alpha outside {0,1}: beta = (1-alpha)^{-1},
/// gamma = 1 - alpha^{-1}. Throws FieldTooSmall over GF(2) and InvalidAlpha
/// for alpha in {0,1}.
LinearCode g1_structured_code(const FieldPtr& field, FqElem alpha);

struct BruteForceOptions {
    bool wlog_reduce = false;  // the reduction is opt-in
    bool find_all = false;
    std::uint64_t limit = 100000000;  // max assignments enumerated
    unsigned workers = 1;
    std::size_t witness_cap = 4096;  // stored witnesses under find_all
};

/// Exhaustive enumeration of scalar (N = 1) codes in canonical slot/element
/// order. With wlog_reduce, source-edge coefficients and relay coefficients
/// (local slots whose vertex has a single in-edge) are pinned to 1 and only
/// the remaining combining and decode coefficients are searched. Returns the
/// first witness or UnsolvableExhaustive with the full enumeration count.
/// Deterministic for any worker count. Throws SearchSpaceTooLarge when the
/// (reduced) space exceeds opts.limit.
SolvabilityVerdict brute_force_scalar(const SumNetwork& net, const FieldPtr& field,
                                      const BruteForceOptions& opts = {});

/// Number of assignments brute_force_scalar would enumerate; infinity-ish
/// values are saturated to UINT64_MAX.
std::uint64_t brute_force_space(const SumNetwork& net, const FieldPtr& field, bool wlog_reduce);

/// Replaces every coefficient of a solving scalar code over GF(p^N) by the
/// N x N matrix of its multiplication map over GF(p), producing an N-length
/// vector code over the prime field. Throws InputNotSolving.
LinearCode lift_scalar_to_vector(const SumNetwork& net, const LinearCode& scalar_code);

struct ProbeOptions {
    std::uint64_t brute_cross_check_limit = 1000000;  // cross-check when space fits
    std::uint64_t limit = 100000000;
};

/// One verdict per field for the four-layer family with parameter m: solvable
/// iff the characteristic does not divide m-2, with witnesses verified; the
/// structured route is cross-checked against brute force whenever the reduced
/// space is within the cross-check limit.
std::vector<SolvabilityVerdict> characteristic_set_probe(int m, const std::vector<FieldPtr>& fields,
                                                         const ProbeOptions& opts = {});

enum class SolveMode { Auto, Brute, Structured };

struct SolveOptions {
    SolveMode mode = SolveMode::Auto;
    int block_len = 1;
    bool wlog_reduce = false;
    std::uint64_t limit = 100000000;
    unsigned workers = 1;
};

/// Front-end dispatch: structured constructions for the recognized families
/// (vector block lengths handled by extension-field lifting), brute force for
/// everything else at N = 1, Unknown when no route applies.
SolvabilityVerdict solve(const SumNetwork& net, const FieldPtr& field, const SolveOptions& opts = {});

}  // namespace sumnet

#endif
