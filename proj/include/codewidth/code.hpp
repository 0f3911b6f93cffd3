#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "codewidth/matrix.hpp"

namespace codewidth {

/// An (n, k) linear code over GF(q), held as the rref of a generator matrix
/// so that two codes are equal iff their stored generators are equal.
/// Coordinates are indexed 0..n-1. Coordinate subsets are passed as 64-bit
/// masks, which limits shortening queries to n <= 64; constructing longer
/// codes is allowed.
class LinearCode {
public:
    static LinearCode from_generator(const Matrix& gen);
    static LinearCode from_generator(std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows);

    /// Reed-Muller code RM(r, m) of length 2^m in the standard bit order:
    /// row f of the raw generator is the evaluation of a degree-<= r monomial
    /// at the points b(0), b(1), ..., b(2^m - 1), where b(i) is the
    /// little-endian binary expansion of i.
    static LinearCode reed_muller(int r, int m);

    /// Reed-Solomon code over GF(p) with evaluation points 0, 1, ..., n-1;
    /// generator rows are the point powers (j^i). MDS with distance n-k+1.
    static LinearCode reed_solomon(int n, int k, std::uint32_t p);

    /// Loads the text format: first line "q n k", then k rows of n symbols.
    /// Malformed input raises std::runtime_error with file:line:column context.
    static LinearCode load(const std::string& path);
    static LinearCode parse(std::istream& in, const std::string& name);

    int length() const { return n_; }
    int dimension() const { return k_; }
    const PrimeField& field() const { return gen_.field(); }
    const Matrix& generator() const { return gen_; }

    /// Dimension of the shortening C_J = {c in C : supp(c) subseteq J},
    /// J given as a bitmask over coordinates. Equals k - rank(G restricted
    /// to the columns outside J).
    int dim_shortened(std::uint64_t support) const;

    /// Same, with J as a list of coordinate indices (validated).
    int dim_shortened(std::span<const int> coords) const;

    std::uint64_t full_support() const;

    bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }

private:
    LinearCode(Matrix gen, int n, int k);

    Matrix gen_;  // k x n, rref
    int n_, k_;
    std::vector<std::uint64_t> packed_rows_;  // GF(2) fast path, n <= 64 only
};

/// dim_shortened for every one of the 2^n coordinate subsets, indexed by
/// mask. Hard-gated at n <= 20; the exhaustive engines build on this table.
std::vector<std::int8_t> all_shortened_dims(const LinearCode& code);

}  // namespace codewidth
