#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ekrshift/bits.hpp"

namespace ekrshift {

bool is_prime(std::uint64_t n);

/// Deterministic 64-bit mixer used to derive sub-seeds (trials, per-size
/// matrices, per-instance corpora) from one user seed.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Prime field GF(p). The default prime 2^31-1 stands in for characteristic
/// zero; p < 2^31 keeps products of residues inside 64 bits.
struct FieldConfig {
    std::uint64_t p = 2147483647ULL;

    FieldConfig() = default;
    explicit FieldConfig(std::uint64_t prime);

    std::uint64_t reduce(std::uint64_t a) const { return a % p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // a != 0
};

/// Dense matrix of residues mod p, row-major.
struct MatrixGFp {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> a;

    MatrixGFp() = default;
    MatrixGFp(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Incremental exact rank over GF(p). Basis rows are kept in reduced
/// echelon form, sorted by pivot column; rank never decreases.
class RankOracle {
public:
    RankOracle(std::size_t dim, FieldConfig cfg) : dim_(dim), cfg_(cfg) {}

    /// Absorbs the row iff it is independent of the current basis;
    /// a dependent row leaves the oracle unchanged.
    bool insert(std::vector<std::uint64_t> row);

    std::size_t rank() const { return basis_.size(); }
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_;
    FieldConfig cfg_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::size_t> pivots_;
};

std::uint64_t det_gfp(MatrixGFp m, const FieldConfig& cfg);
std::size_t rank_gfp(MatrixGFp m, const FieldConfig& cfg);
MatrixGFp mul_gfp(const MatrixGFp& a, const MatrixGFp& b, const FieldConfig& cfg);

/// n x n matrix with nonzero determinant mod p, deterministic in the seed;
/// rejection-samples until invertible.
MatrixGFp random_invertible(int n, const FieldConfig& cfg, std::uint64_t seed);

/// Determinant of the submatrix of g with rows indexed by T and columns by
/// S (|S| = |T|): the e_T-coordinate of the wedge of the S-columns of g.
std::uint64_t compound_minor(const MatrixGFp& g, Mask S, Mask T, const FieldConfig& cfg);

}  // namespace ekrshift
