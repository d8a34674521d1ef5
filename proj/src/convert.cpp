#include "regenum/convert.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "regenum/guess.hpp"

namespace regenum {

namespace {

RatPoly rising_product(long from, long to) {
    // prod_{i=from..to} (n + i)
    RatPoly p = RatPoly::constant(Rat(1));
    for (long i = from; i <= to; ++i) p = p * (RatPoly::variable() + RatPoly::constant(Rat(i)));
    return p;
}

// Standard-form recurrence from an offset map j' -> polynomial, valid for
// all original rows n >= 0.
PRecurrence standard_form(std::map<long, RatPoly>& by_offset) {
    for (auto it = by_offset.begin(); it != by_offset.end();)
        it = it->second.is_zero() ? by_offset.erase(it) : std::next(it);
    if (by_offset.empty())
        throw std::invalid_argument("conversion produced the zero recurrence");
    long jmin = by_offset.begin()->first;
    long jmax = by_offset.rbegin()->first;
    PRecurrence rec;
    rec.valid_from = std::max(0l, jmin);
    rec.coeff.assign(static_cast<size_t>(jmax - jmin) + 1, RatPoly());
    for (const auto& [j, poly] : by_offset)
        rec.coeff[static_cast<size_t>(j - jmin)] = poly.shifted(Rat(-jmin));
    rec.canonicalize();
    return rec;
}

}  // namespace

void LinearODE::canonicalize() {
    if (q.empty()) return;
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (q.empty()) return;
    Int num_gcd = 0, den_lcm = 1;
    for (const RatPoly& p : q) {
        Rat c = p.content();
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return;
    Rat content = make_rat(num_gcd, den_lcm);
    if (q.back().leading() < 0) content = -content;
    for (RatPoly& p : q) p = p.scaled(Rat(1) / content);
}

std::string LinearODE::canonical_text() const {
    std::ostringstream os;
    os << "order " << order() << ";";
    for (int k = 0; k <= order(); ++k) {
        os << " q" << k << "=[";
        const RatPoly& p = q[static_cast<size_t>(k)];
        for (int i = 0; i <= p.degree(); ++i) {
            if (i) os << ",";
            os << p.coeff(i).get_str();
        }
        os << "]";
    }
    return os.str();
}

PRecurrence ode_to_rec(const LinearODE& ode, bool egf) {
    if (ode.q.empty() || ode.leading().is_zero())
        throw std::invalid_argument("ode_to_rec: degenerate operator");
    std::map<long, RatPoly> by_offset;
    for (int k = 0; k <= ode.order(); ++k) {
        const RatPoly& qk = ode.q[static_cast<size_t>(k)];
        for (int i = 0; i <= qk.degree(); ++i) {
            Rat c = qk.coeff(i);
            if (c == 0) continue;
            RatPoly mult;
            if (egf) {
                // [t^n/n!] t^i f^{(k)} = n(n-1)...(n-i+1) a_{n+k-i}
                mult = RatPoly::falling_factorial(i).scaled(c);
            } else {
                // [t^n] t^i f^{(k)} = (n-i+k)(n-i+k-1)...(n-i+1) a_{n+k-i}
                mult = RatPoly::constant(c);
                for (int w = 1; w <= k; ++w)
                    mult = mult * (RatPoly::variable() + RatPoly::constant(Rat(w - i)));
            }
            by_offset[k - i] = by_offset.count(k - i) ? by_offset[k - i] + mult : mult;
        }
    }
    return standard_form(by_offset);
}

namespace {

LinearODE compose_homogenizer(const LinearODE& L, const RatPoly& rho) {
    // (rho D - rho') o L kills the constant inhomogeneity rho.
    LinearODE out;
    out.q.assign(L.q.size() + 1, RatPoly());
    RatPoly drho = rho.derivative();
    for (size_t k = 0; k < L.q.size(); ++k) {
        out.q[k] = out.q[k] + rho * L.q[k].derivative() - drho * L.q[k];
        out.q[k + 1] = out.q[k + 1] + rho * L.q[k];
    }
    out.canonicalize();
    return out;
}

}  // namespace

LinearODE rec_to_ode_raw(const PRecurrence& rec, bool egf) {
    int r = rec.order();
    if (r < 1 || rec.coeff.back().is_zero())
        throw std::invalid_argument("rec_to_ode: degenerate recurrence");

    // Operator terms t^u D^v accumulated as q[v] += coeff * t^u.
    std::map<int, RatPoly> qmap;
    auto add_term = [&qmap](int v, int u, const Rat& c) {
        RatPoly t_pow = RatPoly::monomial(u, c);
        qmap[v] = qmap.count(v) ? qmap[v] + t_pow : t_pow;
    };

    std::vector<RatPoly> ceff(rec.coeff);
    if (!egf) {
        // multiply every row by (n+1)...(n+r) so each coefficient becomes
        // expressible through t^u D^{j+u}
        RatPoly R = rising_product(1, r);
        for (auto& p : ceff) p = p * R;
    }

    for (int j = 0; j <= r; ++j) {
        if (ceff[static_cast<size_t>(j)].is_zero()) continue;
        if (egf) {
            // c_j(n) = sum_s gamma_s (n)_s  ->  gamma_s t^s D^{s+j}
            std::vector<Rat> gamma = ceff[static_cast<size_t>(j)].falling_coeffs(0);
            for (size_t s = 0; s < gamma.size(); ++s)
                if (gamma[s] != 0) add_term(static_cast<int>(s) + j, static_cast<int>(s), gamma[s]);
        } else {
            // c~_j = (n+1)..(n+j) * Q_j; expand Q_j in (n)_u:
            // (n+j)...(n+1) (n)_u = (n+j)_{j+u}  ->  t^u D^{j+u}
            RatPoly Qj = poly_divexact(ceff[static_cast<size_t>(j)], rising_product(1, j));
            std::vector<Rat> beta = Qj.falling_coeffs(0);
            for (size_t u = 0; u < beta.size(); ++u)
                if (beta[u] != 0) add_term(j + static_cast<int>(u), static_cast<int>(u), beta[u]);
        }
    }

    LinearODE L;
    int vmax = qmap.empty() ? 0 : qmap.rbegin()->first;
    L.q.assign(static_cast<size_t>(vmax) + 1, RatPoly());
    for (const auto& [v, p] : qmap) L.q[static_cast<size_t>(v)] = p;

    // Rows below valid_from contribute an inhomogeneous polynomial.
    RatPoly rho;
    if (rec.valid_from > 0) {
        if (static_cast<long>(rec.initial.size()) < rec.valid_from + r)
            throw std::invalid_argument("rec_to_ode: recurrence lacks the initial terms "
                                        "needed to account for its validity offset");
        Int nfact = 1;
        for (long n = 0; n < rec.valid_from; ++n) {
            if (n > 0) nfact *= static_cast<unsigned long>(n);
            Rat violation(0);
            for (int j = 0; j <= r; ++j)
                violation += ceff[static_cast<size_t>(j)].eval_int(n) *
                             rec.initial[static_cast<size_t>(n + j)];
            if (egf) violation /= Rat(nfact);
            rho = rho + RatPoly::monomial(static_cast<int>(n), violation);
        }
    }
    if (!rho.is_zero()) L = compose_homogenizer(L, rho);
    L.canonicalize();
    if (L.q.empty() || L.leading().is_zero())
        throw std::logic_error("rec_to_ode: construction yielded a degenerate operator");
    return L;
}

namespace {

// Smallest operator (order, then coefficient degree) annihilating the given
// prefix, certified by running its own coefficient recurrence over all of it.
std::optional<LinearODE> minimize_ode(const std::vector<Rat>& terms, bool egf, int max_order,
                                      int max_degree) {
    long T = static_cast<long>(terms.size());
    std::vector<Rat> series(terms);
    if (egf) {
        Int fact = 1;
        for (size_t n = 0; n < series.size(); ++n) {
            if (n > 0) fact *= static_cast<unsigned long>(n);
            series[n] /= Rat(fact);
        }
    }
    const int guards = 10;
    for (int K = 1; K <= max_order; ++K) {
        for (int I = 0; I <= max_degree; ++I) {
            size_t cols = static_cast<size_t>(K + 1) * static_cast<size_t>(I + 1);
            long rows = T - guards - K;
            if (rows < static_cast<long>(cols) + 2) continue;
            std::vector<std::vector<Rat>> M(static_cast<size_t>(rows),
                                            std::vector<Rat>(cols, Rat(0)));
            for (long n = 0; n < rows; ++n)
                for (int k = 0; k <= K; ++k)
                    for (int i = 0; i <= I; ++i) {
                        // coefficient of t^n in t^i f^{(k)} given series coeffs
                        long m = n - i;  // power of t in f^{(k)}
                        if (m < 0) continue;
                        long idx = m + k;
                        // d^k/dt^k of t^idx -> (idx)_k t^{idx-k}
                        Rat ff(1);
                        for (int w = 0; w < k; ++w) ff *= Rat(idx - w);
                        M[static_cast<size_t>(n)][static_cast<size_t>(k) * (I + 1) +
                                                  static_cast<size_t>(i)] =
                            ff * series[static_cast<size_t>(idx)];
                    }
            for (int skip = 0; skip < 3; ++skip) {
                auto x = nullspace_vector(M, cols, skip);
                if (!x) break;
                LinearODE cand;
                cand.q.resize(static_cast<size_t>(K) + 1);
                for (int k = 0; k <= K; ++k) {
                    std::vector<Rat> qk(x->begin() + static_cast<long>(k) * (I + 1),
                                        x->begin() + static_cast<long>(k + 1) * (I + 1));
                    cand.q[static_cast<size_t>(k)] = RatPoly(std::move(qk));
                }
                if (cand.leading().is_zero()) continue;
                cand.canonicalize();
                try {
                    PRecurrence check = ode_to_rec(cand, egf);
                    if (check.annihilates(terms)) return cand;
                } catch (const std::exception&) {
                    continue;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

LinearODE rec_to_ode(const PRecurrence& rec, bool egf) {
    LinearODE raw = rec_to_ode_raw(rec, egf);
    int raw_deg = 0;
    for (const RatPoly& p : raw.q) raw_deg = std::max(raw_deg, p.degree());

    long need = static_cast<long>(raw.order() + 1) * (raw_deg + 2) + raw.order() + 30;
    long M = std::max(100l, need);
    std::vector<Rat> terms;
    try {
        terms = extend_terms(rec, M);
    } catch (const std::exception&) {
        return raw;  // cannot sample; the construction is still exact
    }
    if (auto smaller = minimize_ode(terms, egf, raw.order(), raw_deg)) return *smaller;
    return raw;
}

PRecurrence borel_scale(const PRecurrence& rec, long q) {
    int r = rec.order();
    PRecurrence out;
    out.valid_from = rec.valid_from;
    out.egf_fitted = false;
    for (int j = 0; j <= r; ++j) {
        RatPoly factor = RatPoly::constant(Rat(1));
        if (q >= 0) {
            RatPoly base = rising_product(1, j);
            for (long rep = 0; rep < q; ++rep) factor = factor * base;
        } else {
            RatPoly base = rising_product(j + 1, r);
            for (long rep = 0; rep < -q; ++rep) factor = factor * base;
        }
        out.coeff.push_back(rec.coeff[static_cast<size_t>(j)] * factor);
    }
    // initial terms: b_n = a_n / (n!)^q
    Int fact = 1;
    for (size_t n = 0; n < rec.initial.size(); ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        Rat scale_factor = Rat(fact);
        Rat b = rec.initial[n];
        for (long rep = 0; rep < std::abs(q); ++rep) {
            if (q > 0)
                b /= scale_factor;
            else
                b *= scale_factor;
        }
        out.initial.push_back(b);
    }
    out.canonicalize();
    return out;
}

std::vector<ScaledClass> borel_scale_frac(const PRecurrence& rec, const Rat& q,
                                          long sample_terms) {
    Int u = q.get_num();
    Int v = q.get_den();
    if (v == 1) {
        if (!u.fits_slong_p()) throw std::invalid_argument("borel_scale: exponent too large");
        ScaledClass c{0, 1, u.get_si(), 0, borel_scale(rec, u.get_si())};
        return {c};
    }
    if (v > 4) throw std::invalid_argument("borel_scale: denominators above 4 are unsupported");
    long vden = v.get_si();
    Int alpha_big;
    mpz_fdiv_q(alpha_big.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    long alpha = alpha_big.get_si();
    long beta = Int(u - alpha_big * v).get_si();  // 0 < beta < v

    GuessOptions gopt;
    gopt.max_order = 6;
    gopt.max_degree = 6;
    long per_class_needed =
        static_cast<long>(gopt.max_order + 1) * (gopt.max_degree + 2) + gopt.max_order +
        gopt.guards + 6;
    long N = std::max(sample_terms, vden * per_class_needed + vden);
    std::vector<Rat> a = extend_terms(rec, N);

    std::vector<ScaledClass> out;
    for (int rho = 0; rho < vden; ++rho) {
        std::vector<Rat> b;
        for (long m = 0; vden * m + rho <= N; ++m) {
            long n = vden * m + rho;
            Rat val = a[static_cast<size_t>(n)];
            Int nfact = factorial(static_cast<unsigned long>(n));
            Int mfact = factorial(static_cast<unsigned long>(m));
            for (long rep = 0; rep < std::abs(alpha); ++rep)
                if (alpha > 0)
                    val /= Rat(nfact);
                else
                    val *= Rat(nfact);
            for (long rep = 0; rep < beta; ++rep) val = val / Rat(mfact);
            b.push_back(val);
        }
        auto brec = guess_recurrence(b, gopt);
        if (!brec) {
            std::ostringstream os;
            os << "borel_scale: no certified recurrence for residue class " << rho << " mod "
               << vden;
            throw std::runtime_error(os.str());
        }
        out.push_back(ScaledClass{rho, static_cast<int>(vden), alpha, beta, *brec});
    }
    return out;
}

}  // namespace regenum
