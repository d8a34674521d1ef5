#include "regenum/guess.hpp"

#include <sstream>
#include <stdexcept>

namespace regenum {

std::optional<std::vector<Rat>> nullspace_vector(std::vector<std::vector<Rat>> M, size_t cols,
                                                 int skip) {
    size_t rows = M.size();
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[rank]);
        Rat inv = Rat(1) / M[rank][col];
        for (size_t c = col; c < cols; ++c) M[rank][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            Rat f = M[r][col];
            for (size_t c = col; c < cols; ++c) M[r][c] -= f * M[rank][c];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    // pick the requested free column
    long free_col = -1;
    int seen = 0;
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        if (seen == skip) {
            free_col = static_cast<long>(col);
            break;
        }
        ++seen;
    }
    if (free_col < 0) return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    x[static_cast<size_t>(free_col)] = 1;
    for (size_t col = 0; col < cols; ++col) {
        long piv = pivot_of_col[col];
        if (piv < 0) continue;
        x[col] = -M[static_cast<size_t>(piv)][static_cast<size_t>(free_col)];
    }
    return x;
}

namespace {

// Rank filter over F_p: a candidate grid with full column rank mod p cannot
// have a rational nullspace, so the exact solve is skipped. Exact
// verification still decides acceptance, so a (vanishingly unlikely)
// spurious mod-p nullspace costs time, never correctness.
constexpr uint64_t kPrime = (1ull << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kPrime - 2); }

std::optional<std::vector<uint64_t>> reduce_terms_mod_p(const std::vector<Rat>& terms) {
    std::vector<uint64_t> out(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        uint64_t num = mpz_fdiv_ui(terms[i].get_num().get_mpz_t(), kPrime);
        uint64_t den = mpz_fdiv_ui(terms[i].get_den().get_mpz_t(), kPrime);
        if (den == 0) return std::nullopt;  // cannot reduce; caller solves exactly
        out[i] = mulmod(num, invmod(den));
    }
    return out;
}

// true iff the mod-p system has a nontrivial nullspace
bool has_nullspace_mod_p(const std::vector<uint64_t>& terms_p, long v0, long row_end, int r,
                         int d) {
    size_t cols = static_cast<size_t>(r + 1) * static_cast<size_t>(d + 1);
    std::vector<std::vector<uint64_t>> M;
    M.reserve(static_cast<size_t>(row_end - v0));
    for (long n = v0; n + r < row_end; ++n) {
        std::vector<uint64_t> row;
        row.reserve(cols);
        uint64_t npow = 1;
        uint64_t nmod = static_cast<uint64_t>(n % static_cast<long>(kPrime));
        std::vector<uint64_t> powers(static_cast<size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) {
            powers[static_cast<size_t>(k)] = npow;
            npow = mulmod(npow, nmod);
        }
        for (int j = 0; j <= r; ++j)
            for (int k = 0; k <= d; ++k)
                row.push_back(mulmod(powers[static_cast<size_t>(k)],
                                     terms_p[static_cast<size_t>(n + j)]));
        M.push_back(std::move(row));
    }
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < M.size(); ++col) {
        size_t piv = rank;
        while (piv < M.size() && M[piv][col] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[rank]);
        uint64_t inv = invmod(M[rank][col]);
        for (size_t c = col; c < cols; ++c) M[rank][c] = mulmod(M[rank][c], inv);
        for (size_t rr = 0; rr < M.size(); ++rr) {
            if (rr == rank || M[rr][col] == 0) continue;
            uint64_t f = M[rr][col];
            for (size_t c = col; c < cols; ++c) {
                uint64_t sub = mulmod(f, M[rank][c]);
                M[rr][c] = (M[rr][c] >= sub) ? M[rr][c] - sub : M[rr][c] + kPrime - sub;
            }
        }
        ++rank;
    }
    return rank < cols;
}

// b_n = a_n / n! without touching the integer inputs.
std::vector<Rat> divide_by_factorials(const std::vector<Rat>& a) {
    std::vector<Rat> b(a.size());
    Int fact = 1;
    for (size_t n = 0; n < a.size(); ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        b[n] = a[n] / Rat(fact);
    }
    return b;
}

// Lift a recurrence for b_n = a_n/n! back to one for a_n: multiply row n by
// (n+r)!/n!; coefficient j picks up prod_{m=j+1..r} (n+m).
PRecurrence lift_egf_recurrence(const PRecurrence& brec, const std::vector<Rat>& a_terms) {
    PRecurrence arec;
    arec.valid_from = brec.valid_from;
    arec.egf_fitted = true;
    int r = brec.order();
    for (int j = 0; j <= r; ++j) {
        RatPoly rising = RatPoly::constant(Rat(1));
        for (int m = j + 1; m <= r; ++m)
            rising = rising * (RatPoly::variable() + RatPoly::constant(Rat(m)));
        arec.coeff.push_back(brec.coeff[static_cast<size_t>(j)] * rising);
    }
    long keep = std::min<long>(static_cast<long>(a_terms.size()), arec.valid_from + r);
    arec.initial.assign(a_terms.begin(), a_terms.begin() + keep);
    return arec;
}

}  // namespace

std::optional<PRecurrence> guess_recurrence(const std::vector<Rat>& terms,
                                            const GuessOptions& opts) {
    long T = static_cast<long>(terms.size());
    long needed = static_cast<long>(opts.max_order + 1) * (opts.max_degree + 2) + opts.max_order +
                  opts.guards;
    if (T < needed) {
        std::ostringstream os;
        os << "guess_recurrence: need at least " << needed << " terms for order "
           << opts.max_order << " degree " << opts.max_degree << " with " << opts.guards
           << " guards, got " << T;
        throw std::invalid_argument(os.str());
    }

    const std::vector<Rat>& fit_terms = opts.egf_mode ? divide_by_factorials(terms) : terms;
    const long fit_limit = T - opts.guards;  // indices < fit_limit may be fitted on
    const auto terms_p = reduce_terms_mod_p(fit_terms);

    for (int r = 1; r <= opts.max_order; ++r) {
        for (int d = 0; d <= opts.max_degree; ++d) {
            for (long v0 = 0; v0 <= opts.max_valid_from; ++v0) {
                size_t cols = static_cast<size_t>(r + 1) * static_cast<size_t>(d + 1);
                long n_rows = fit_limit - r - v0;
                if (n_rows < static_cast<long>(cols) + 2) continue;
                if (terms_p && !has_nullspace_mod_p(*terms_p, v0, fit_limit, r, d)) continue;
                // exact solve on a bounded, overdetermined window; full
                // verification below still covers every term
                long exact_end = std::min<long>(fit_limit, v0 + r + static_cast<long>(cols) + 24);
                std::vector<std::vector<Rat>> M;
                M.reserve(static_cast<size_t>(n_rows));
                for (long n = v0; n + r < exact_end; ++n) {
                    std::vector<Rat> row;
                    row.reserve(cols);
                    Rat npow(1);
                    std::vector<Rat> powers(static_cast<size_t>(d) + 1);
                    for (int k = 0; k <= d; ++k) {
                        powers[static_cast<size_t>(k)] = npow;
                        npow *= n;
                    }
                    for (int j = 0; j <= r; ++j)
                        for (int k = 0; k <= d; ++k)
                            row.push_back(powers[static_cast<size_t>(k)] *
                                          fit_terms[static_cast<size_t>(n + j)]);
                    M.push_back(std::move(row));
                }
                for (int skip = 0; skip < 3; ++skip) {
                    auto x = nullspace_vector(M, cols, skip);
                    if (!x) break;
                    PRecurrence rec;
                    rec.valid_from = v0;
                    for (int j = 0; j <= r; ++j) {
                        std::vector<Rat> cj(x->begin() + static_cast<long>(j) * (d + 1),
                                            x->begin() + static_cast<long>(j + 1) * (d + 1));
                        rec.coeff.emplace_back(std::move(cj));
                    }
                    if (rec.coeff.back().is_zero()) continue;  // try another free column
                    if (!rec.annihilates(fit_terms)) continue;
                    if (opts.egf_mode) {
                        rec = lift_egf_recurrence(rec, terms);
                        if (!rec.annihilates(terms)) continue;
                    } else {
                        rec.initial.assign(terms.begin(), terms.begin() + (v0 + r));
                    }
                    rec.canonicalize();
                    return rec;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace regenum
