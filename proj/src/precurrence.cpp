#include "regenum/precurrence.hpp"

#include <sstream>
#include <stdexcept>

namespace regenum {

void PRecurrence::canonicalize() {
    if (coeff.empty()) return;
    Int num_gcd = 0, den_lcm = 1;
    for (const RatPoly& p : coeff) {
        Rat c = p.content();
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return;
    Rat content = make_rat(num_gcd, den_lcm);
    if (coeff.back().leading() < 0) content = -content;
    for (RatPoly& p : coeff) p = p.scaled(Rat(1) / content);
}

int PRecurrence::degree() const {
    int d = 0;
    for (const RatPoly& p : coeff) d = std::max(d, p.degree());
    return d;
}

bool PRecurrence::annihilates(std::span<const Rat> terms) const {
    int r = order();
    long T = static_cast<long>(terms.size());
    for (long n = valid_from; n + r < T; ++n) {
        Rat acc(0);
        for (int j = 0; j <= r; ++j)
            acc += coeff[static_cast<size_t>(j)].eval_int(n) * terms[static_cast<size_t>(n + j)];
        if (acc != 0) return false;
    }
    return true;
}

std::string PRecurrence::canonical_text() const {
    // order r; valid_from v; c_j as dense rational coefficient lists
    std::ostringstream os;
    os << "order " << order() << "; valid_from " << valid_from << ";";
    for (int j = 0; j <= order(); ++j) {
        os << " c" << j << "=[";
        const RatPoly& p = coeff[static_cast<size_t>(j)];
        for (int i = 0; i <= p.degree(); ++i) {
            if (i) os << ",";
            os << p.coeff(i).get_str();
        }
        os << "]";
    }
    os << " initial=[";
    for (size_t i = 0; i < initial.size(); ++i) {
        if (i) os << ",";
        os << initial[i].get_str();
    }
    os << "]";
    return os.str();
}

std::vector<Rat> extend_terms(const PRecurrence& rec, long N) {
    int r = rec.order();
    if (r < 1) throw std::invalid_argument("extend_terms: degenerate order-0 recurrence");
    if (rec.coeff.back().is_zero())
        throw std::invalid_argument("extend_terms: leading coefficient is identically zero");
    long need = rec.valid_from + r;
    if (static_cast<long>(rec.initial.size()) < need)
        throw std::invalid_argument("extend_terms: initial terms do not cover the recurrence window");

    std::vector<Rat> a(rec.initial.begin(), rec.initial.end());
    if (static_cast<long>(a.size()) > N + 1) a.resize(static_cast<size_t>(N) + 1);
    long n = static_cast<long>(a.size()) - r;  // next row to apply
    while (static_cast<long>(a.size()) <= N) {
        Rat lead = rec.coeff.back().eval_int(n);
        if (lead == 0) {
            std::ostringstream os;
            os << "extend_terms: leading coefficient vanishes at n = " << n;
            throw std::runtime_error(os.str());
        }
        Rat acc(0);
        for (int j = 0; j < r; ++j)
            acc += rec.coeff[static_cast<size_t>(j)].eval_int(n) * a[static_cast<size_t>(n + j)];
        a.push_back(-acc / lead);
        ++n;
    }
    return a;
}

}  // namespace regenum
