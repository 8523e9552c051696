#include "ekrshift/gfp.hpp"

#include <random>
#include <stdexcept>

namespace ekrshift {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

FieldConfig::FieldConfig(std::uint64_t prime) : p(prime) {
    if (p >= (1ULL << 31))
        throw std::invalid_argument("prime must be < 2^31 to keep products in 64 bits");
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

std::uint64_t FieldConfig::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldConfig::inv(std::uint64_t a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero");
    return pow(a, p - 2);
}

bool RankOracle::insert(std::vector<std::uint64_t> row) {
    if (row.size() != dim_) throw std::invalid_argument("row dimension mismatch");
    for (auto& x : row) x = cfg_.reduce(x);

    for (std::size_t b = 0; b < basis_.size(); ++b) {
        std::uint64_t c = row[pivots_[b]];
        if (c == 0) continue;
        const auto& br = basis_[b];
        for (std::size_t j = 0; j < dim_; ++j)
            row[j] = cfg_.sub(row[j], cfg_.mul(c, br[j]));
    }

    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (row[j] != 0) {
            piv = j;
            break;
        }
    if (piv == dim_) return false;

    std::uint64_t inv = cfg_.inv(row[piv]);
    for (std::size_t j = 0; j < dim_; ++j) row[j] = cfg_.mul(row[j], inv);

    // keep the basis fully reduced
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        std::uint64_t c = basis_[b][piv];
        if (c == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            basis_[b][j] = cfg_.sub(basis_[b][j], cfg_.mul(c, row[j]));
    }

    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
}

namespace {

// in-place elimination; returns (rank, det_sign_adjusted_product) where the
// second value is meaningful only for square inputs
std::pair<std::size_t, std::uint64_t> eliminate(MatrixGFp& m, const FieldConfig& cfg) {
    std::size_t rank = 0;
    std::uint64_t det = 1 % cfg.p;
    bool negate = false;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) {
            det = 0;
            continue;
        }
        if (piv != rank) {
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(rank, j));
            negate = !negate;
        }
        std::uint64_t d = m.at(rank, col);
        det = cfg.mul(det, d);
        std::uint64_t dinv = cfg.inv(d);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            std::uint64_t f = m.at(i, col);
            if (f == 0) continue;
            f = cfg.mul(f, dinv);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = cfg.sub(m.at(i, j), cfg.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    if (m.rows != m.cols || rank != m.rows) det = 0;
    if (negate) det = cfg.neg(det);
    return {rank, det};
}

}  // namespace

std::uint64_t det_gfp(MatrixGFp m, const FieldConfig& cfg) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    for (auto& x : m.a) x = cfg.reduce(x);
    return eliminate(m, cfg).second;
}

std::size_t rank_gfp(MatrixGFp m, const FieldConfig& cfg) {
    for (auto& x : m.a) x = cfg.reduce(x);
    return eliminate(m, cfg).first;
}

MatrixGFp mul_gfp(const MatrixGFp& a, const MatrixGFp& b, const FieldConfig& cfg) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
    MatrixGFp c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            std::uint64_t v = a.at(i, k) % cfg.p;
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = cfg.add(c.at(i, j), cfg.mul(v, b.at(k, j) % cfg.p));
        }
    return c;
}

MatrixGFp random_invertible(int n, const FieldConfig& cfg, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_invertible needs n >= 1");
    std::mt19937_64 rng(seed);
    for (;;) {
        MatrixGFp g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (auto& x : g.a) x = rng() % cfg.p;
        if (det_gfp(g, cfg) != 0) return g;
    }
}

std::uint64_t compound_minor(const MatrixGFp& g, Mask S, Mask T, const FieldConfig& cfg) {
    if (g.rows != g.cols) throw std::invalid_argument("compound_minor needs a square matrix");
    const auto cols = face_vertices(S);
    const auto rows = face_vertices(T);
    if (cols.size() != rows.size()) throw std::invalid_argument("|S| != |T|");
    const std::size_t k = cols.size();
    if (!rows.empty() && static_cast<std::size_t>(rows.back()) >= g.rows)
        throw std::invalid_argument("index out of range");
    if (!cols.empty() && static_cast<std::size_t>(cols.back()) >= g.cols)
        throw std::invalid_argument("index out of range");
    if (k == 0) return 1 % cfg.p;
    MatrixGFp sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            sub.at(i, j) = g.at(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
    return det_gfp(std::move(sub), cfg);
}

}  // namespace ekrshift
