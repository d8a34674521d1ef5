#include "regenum/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "regenum/symfunc.hpp"
#include "regenum/version.hpp"

namespace regenum {

RegularityProfile RegularityProfile::of(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) throw std::invalid_argument("RegularityProfile: degree set is empty");
    if (v.front() < 1) throw std::invalid_argument("RegularityProfile: degrees must be positive");
    RegularityProfile p;
    p.degrees = std::move(v);
    return p;
}

std::string RegularityProfile::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ",";
        os << degrees[i];
    }
    os << "}";
    return os.str();
}

namespace {

void check_profile(const RegularityProfile& S, const EnumerateOptions& opts) {
    if (S.max_degree() > opts.max_degree_limit) {
        std::ostringstream os;
        os << "degree profile " << S.str() << " exceeds the configured limit "
           << opts.max_degree_limit;
        throw std::invalid_argument(os.str());
    }
}

Int require_counting_term(const Rat& value, long n, const std::string& cls) {
    if (!is_integer(value) || value < 0) {
        std::ostringstream os;
        os << "non-integral or negative count a_" << n << " = " << value.get_str() << " for "
           << cls << " (truncation bug)";
        throw std::logic_error(os.str());
    }
    return value.get_num();
}

}  // namespace

Sequence count_adjoint(const SpeciesExpr& expr, const RegularityProfile& S, long N,
                       const EnumerateOptions& opts) {
    if (N < 0) throw std::invalid_argument("count_adjoint: negative term count");
    check_profile(S, opts);
    const int m = S.max_degree();
    const long W = N * m;
    const std::string cls = expr.canonical();

    PowerSumPoly g = compile_exponent(expr, m, W);
    std::vector<PowerSumPoly> dg(static_cast<size_t>(m) + 1);

    Sequence seq;
    seq.class_name = cls;
    seq.profile = S;
    seq.method = "adjoint";
    seq.generator_version = kEngineVersion;
    seq.terms.reserve(static_cast<size_t>(N) + 1);

    PowerSumPoly A = PowerSumPoly::constant(Rat(1), W);
    for (long n = 0; n <= N; ++n) {
        seq.terms.push_back(require_counting_term(A.constant_term(), n, cls));
        if (n == N) break;
        PowerSumPoly next((N - n - 1) * m);
        for (int i : S.degrees)
            next = add(next, adjoint_h_step(A, g, i, m).truncated((N - n - 1) * m));
        A = std::move(next);
    }
    return seq;
}

Sequence count_direct(const SpeciesExpr& expr, const RegularityProfile& S, long N,
                      const EnumerateOptions& opts) {
    if (N < 0) throw std::invalid_argument("count_direct: negative term count");
    check_profile(S, opts);
    const int m = S.max_degree();
    const long W = N * m;
    const std::string cls = expr.canonical();

    PowerSumPoly F = exp_trunc(compile_exponent(expr, m, W), W);
    PowerSumPoly hs(W);
    for (int i : S.degrees) hs = add(hs, h_poly(i).truncated(W));

    Sequence seq;
    seq.class_name = cls;
    seq.profile = S;
    seq.method = "direct";
    seq.generator_version = kEngineVersion;
    seq.terms.reserve(static_cast<size_t>(N) + 1);

    // a_n = <F, (sum h_i)^n>: the t-expansion of exp(t sum h_i) term by term.
    PowerSumPoly B = PowerSumPoly::constant(Rat(1), W);
    for (long n = 0; n <= N; ++n) {
        seq.terms.push_back(require_counting_term(scalar_product(F, B), n, cls));
        if (n == N) break;
        B = mul(B, hs);
    }
    return seq;
}

IdentityReport verify_identity(const SpeciesExpr& lhs_expr, const RegularityProfile& lhs_S,
                               const SpeciesExpr& rhs_expr, const RegularityProfile& rhs_S,
                               long N, const EnumerateOptions& opts) {
    Sequence lhs = count_adjoint(lhs_expr, lhs_S, N, opts);
    Sequence rhs = count_adjoint(rhs_expr, rhs_S, N, opts);
    for (long n = 0; n <= N; ++n) {
        if (lhs.terms[static_cast<size_t>(n)] != rhs.terms[static_cast<size_t>(n)])
            return {false, n};
    }
    return {true, -1};
}

}  // namespace regenum
