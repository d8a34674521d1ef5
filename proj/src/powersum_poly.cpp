#include "regenum/powersum_poly.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

namespace regenum {

namespace {

long combine_bounds(long a, long b) {
    if (a == PowerSumPoly::kUnbounded) return b;
    if (b == PowerSumPoly::kUnbounded) return a;
    return std::min(a, b);
}

bool within(long w, long bound) { return bound == PowerSumPoly::kUnbounded || w <= bound; }

// Below this many coefficient multiplications the OpenMP kernel is not worth
// spinning up.
constexpr size_t kParallelWork = 1u << 15;

}  // namespace

PowerSumPoly PowerSumPoly::constant(const Rat& c, long weight_bound) {
    PowerSumPoly p(weight_bound);
    p.add_term(PowerMonomial(), c);
    return p;
}

PowerSumPoly PowerSumPoly::var(int v, unsigned exp, long weight_bound) {
    PowerSumPoly p(weight_bound);
    p.add_term(PowerMonomial::var(v, exp), Rat(1));
    return p;
}

PowerSumPoly PowerSumPoly::monomial(const PowerMonomial& m, const Rat& c, long weight_bound) {
    PowerSumPoly p(weight_bound);
    p.add_term(m, c);
    return p;
}

Rat PowerSumPoly::coeff(const PowerMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

long PowerSumPoly::max_weight() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

long PowerSumPoly::min_term_weight() const {
    return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

int PowerSumPoly::max_var() const {
    int m = 0;
    for (const auto& [mon, c] : terms_) m = std::max(m, mon.max_var());
    return m;
}

void PowerSumPoly::add_term(const PowerMonomial& m, const Rat& c) {
    if (c == 0) return;
    if (!within(m.weight(), bound_)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PowerSumPoly PowerSumPoly::truncated(long W) const {
    PowerSumPoly r(combine_bounds(bound_, W));
    for (const auto& [m, c] : terms_) {
        if (!within(m.weight(), W)) break;  // terms are graded-ordered
        r.terms_.emplace(m, c);
    }
    return r;
}

PowerSumPoly PowerSumPoly::restricted_vars(int m) const {
    PowerSumPoly r(bound_);
    for (const auto& [mon, c] : terms_)
        if (mon.max_var() <= m) r.terms_.emplace(mon, c);
    return r;
}

PowerSumPoly PowerSumPoly::with_bound(long W) const {
    PowerSumPoly r = *this;
    r.bound_ = W;
    if (W != kUnbounded && max_weight() > W)
        throw std::logic_error("with_bound: existing terms exceed requested bound");
    return r;
}

PowerSumPoly add(const PowerSumPoly& a, const PowerSumPoly& b) {
    long bound = combine_bounds(a.bound_, b.bound_);
    PowerSumPoly r(bound);
    for (const auto& [m, c] : a.terms_) r.add_term(m, c);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

PowerSumPoly sub(const PowerSumPoly& a, const PowerSumPoly& b) {
    long bound = combine_bounds(a.bound_, b.bound_);
    PowerSumPoly r(bound);
    for (const auto& [m, c] : a.terms_) r.add_term(m, c);
    for (const auto& [m, c] : b.terms_) r.add_term(m, Rat(-c));
    return r;
}

PowerSumPoly scale(const PowerSumPoly& a, const Rat& c) {
    PowerSumPoly r(a.bound_);
    if (c == 0) return r;
    for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, Rat(k * c));
    return r;
}

PowerSumPoly mul_serial(const PowerSumPoly& a, const PowerSumPoly& b) {
    long bound = combine_bounds(a.bound_, b.bound_);
    PowerSumPoly r(bound);
    for (const auto& [ma, ca] : a.terms_) {
        long wa = ma.weight();
        for (const auto& [mb, cb] : b.terms_) {
            if (!within(wa + mb.weight(), bound)) break;  // b graded-ordered
            r.add_term(ma.times(mb), Rat(ca * cb));
        }
    }
    return r;
}

PowerSumPoly mul_parallel(const PowerSumPoly& a, const PowerSumPoly& b) {
    long bound = combine_bounds(a.bound_, b.bound_);
    // Chunk the left factor; each thread accumulates an independent map.
    // Exact rational addition commutes, so the merge order cannot change
    // the result.
    std::vector<const std::pair<const PowerMonomial, Rat>*> av;
    av.reserve(a.terms_.size());
    for (const auto& t : a.terms_) av.push_back(&t);

    int nthreads = omp_get_max_threads();
    std::vector<PowerSumPoly::TermMap> partial(static_cast<size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
    {
        auto& local = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (long idx = 0; idx < static_cast<long>(av.size()); ++idx) {
            const auto& [ma, ca] = *av[static_cast<size_t>(idx)];
            long wa = ma.weight();
            for (const auto& [mb, cb] : b.terms_) {
                if (!within(wa + mb.weight(), bound)) break;
                PowerMonomial m = ma.times(mb);
                auto [it, inserted] = local.emplace(std::move(m), Rat(ca * cb));
                if (!inserted) {
                    it->second += ca * cb;
                    if (it->second == 0) local.erase(it);
                }
            }
        }
    }

    PowerSumPoly r(bound);
    for (auto& part : partial)
        for (auto& [m, c] : part) r.add_term(m, c);
    return r;
}

PowerSumPoly mul(const PowerSumPoly& a, const PowerSumPoly& b) {
    size_t work = a.size() * b.size();
    if (work >= kParallelWork && omp_get_max_threads() > 1) return mul_parallel(a, b);
    return mul_serial(a, b);
}

PowerSumPoly derivative(const PowerSumPoly& a, int v) {
    PowerSumPoly r(a.weight_bound());
    for (const auto& [m, c] : a.terms()) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m.divided_by_var(v), Rat(c * e));
    }
    return r;
}

PowerSumPoly exp_trunc(const PowerSumPoly& g, long W) {
    if (W < 0) throw std::invalid_argument("exp_trunc: negative weight bound");
    if (g.constant_term() != 0)
        throw std::invalid_argument("exp_trunc: exponent has a nonzero constant term");
    PowerSumPoly gt = g.truncated(W);
    PowerSumPoly acc = PowerSumPoly::constant(Rat(1), W);
    if (gt.is_zero()) return acc;
    long minw = gt.min_term_weight();
    PowerSumPoly term = PowerSumPoly::constant(Rat(1), W);
    for (long j = 1; j * minw <= W; ++j) {
        term = scale(mul(term, gt), make_rat(1, j));
        if (term.is_zero()) break;
        acc = add(acc, term);
    }
    return acc;
}

PowerSumPoly plethysm_pn(const PowerSumPoly& a, int n) {
    if (n < 1) throw std::invalid_argument("plethysm_pn: n must be >= 1");
    if (n == 1) return a;
    long bound = a.weight_bound();
    PowerSumPoly r(bound == PowerSumPoly::kUnbounded ? bound : bound * n);
    for (const auto& [m, c] : a.terms()) r.add_term(m.stretched(n), c);
    return r;
}

Int monomial_z(const PowerMonomial& m) {
    Int z = 1;
    const auto& e = m.exps();
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i + 1), e[i]);
        z *= pw * factorial(e[i]);
    }
    return z;
}

Rat scalar_product_serial(const PowerSumPoly& a, const PowerSumPoly& b) {
    const PowerSumPoly& small = a.size() <= b.size() ? a : b;
    const PowerSumPoly& big = a.size() <= b.size() ? b : a;
    Rat acc(0);
    for (const auto& [m, c] : small.terms()) {
        auto it = big.terms().find(m);
        if (it == big.terms().end()) continue;
        acc += c * it->second * Rat(monomial_z(m));
    }
    return acc;
}

Rat scalar_product_parallel(const PowerSumPoly& a, const PowerSumPoly& b) {
    const PowerSumPoly& small = a.size() <= b.size() ? a : b;
    const PowerSumPoly& big = a.size() <= b.size() ? b : a;
    std::vector<const std::pair<const PowerMonomial, Rat>*> sv;
    sv.reserve(small.size());
    for (const auto& t : small.terms()) sv.push_back(&t);

    int nthreads = omp_get_max_threads();
    std::vector<Rat> partial(static_cast<size_t>(nthreads), Rat(0));
#pragma omp parallel num_threads(nthreads)
    {
        Rat local(0);
#pragma omp for schedule(static)
        for (long i = 0; i < static_cast<long>(sv.size()); ++i) {
            const auto& [m, c] = *sv[static_cast<size_t>(i)];
            auto it = big.terms().find(m);
            if (it != big.terms().end()) local += c * it->second * Rat(monomial_z(m));
        }
        partial[static_cast<size_t>(omp_get_thread_num())] = local;
    }
    Rat acc(0);
    for (const Rat& x : partial) acc += x;
    return acc;
}

Rat scalar_product(const PowerSumPoly& a, const PowerSumPoly& b) {
    size_t n = std::min(a.size(), b.size());
    if (n >= (1u << 12) && omp_get_max_threads() > 1) return scalar_product_parallel(a, b);
    return scalar_product_serial(a, b);
}

UniSeries theta(const PowerSumPoly& a, long N) {
    if (N < 0) throw std::invalid_argument("theta: negative order bound");
    UniSeries s;
    s.coeff.assign(static_cast<size_t>(N) + 1, Rat(0));
    for (const auto& [m, c] : a.terms()) {
        if (m.max_var() > 1) continue;  // theta kills p_n, n > 1
        long k = m.exponent(1);
        if (k <= N) s.coeff[static_cast<size_t>(k)] += c;
    }
    return s;
}

UniSeries specialize_egf(const PowerSumPoly& a, long N) { return theta(a, N); }

UniSeries specialize_ogf(const PowerSumPoly& a, long N) {
    if (N < 0) throw std::invalid_argument("specialize_ogf: negative order bound");
    UniSeries s;
    s.coeff.assign(static_cast<size_t>(N) + 1, Rat(0));
    for (const auto& [m, c] : a.terms()) {
        long w = m.weight();  // p_i -> t^i turns a monomial into t^{weight}
        if (w <= N) s.coeff[static_cast<size_t>(w)] += c;
    }
    return s;
}

PowerMonomial monomial_of(const Partition& lambda) {
    PowerMonomial m;
    for (int p : lambda.parts) m = m.times(PowerMonomial::var(p));
    return m;
}

std::string to_canonical_string(const PowerSumPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        if (!first) os << " + ";
        os << c.get_str() << " * " << m.str();
        first = false;
    }
    return os.str();
}

}  // namespace regenum
