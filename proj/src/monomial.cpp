#include "regenum/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace regenum {

PowerMonomial PowerMonomial::var(int v, unsigned exp) {
    if (v < 1) throw std::invalid_argument("PowerMonomial::var: index must be >= 1");
    PowerMonomial m;
    if (exp == 0) return m;
    m.e_.assign(static_cast<size_t>(v), 0);
    m.e_[static_cast<size_t>(v) - 1] = exp;
    return m;
}

PowerMonomial PowerMonomial::times(const PowerMonomial& o) const {
    PowerMonomial r;
    r.e_.resize(std::max(e_.size(), o.e_.size()), 0);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += e_[i];
    for (size_t i = 0; i < o.e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

PowerMonomial PowerMonomial::divided_by_var(int v) const {
    if (exponent(v) == 0) throw std::invalid_argument("divided_by_var: exponent is zero");
    PowerMonomial r = *this;
    r.e_[static_cast<size_t>(v) - 1] -= 1;
    r.trim();
    return r;
}

PowerMonomial PowerMonomial::stretched(int n) const {
    if (n < 1) throw std::invalid_argument("stretched: factor must be >= 1");
    if (n == 1) return *this;
    PowerMonomial r;
    r.e_.assign(e_.size() * static_cast<size_t>(n), 0);
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0) r.e_[(i + 1) * static_cast<size_t>(n) - 1] = e_[i];
    r.trim();
    return r;
}

std::string PowerMonomial::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) os << "*";
        os << "p" << (i + 1) << "^" << e_[i];
        first = false;
    }
    return os.str();
}

}  // namespace regenum
