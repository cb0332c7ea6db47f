#ifndef QDK_FORMAT_HPP
#define QDK_FORMAT_HPP

#include <sstream>
#include <string>

#include "qdk/ratfunc.hpp"

namespace qdk {

inline std::string to_string(const Scalar& s) { return s.str(); }

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        Scalar c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
            // single negative term: print with a leading minus outside
            cs = cs.substr(1);
            negated = true;
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        const bool composite = cs.find(' ') != std::string::npos;
        if (i == 0) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") {
                os << (composite ? "(" + cs + ")" : cs) << "*";
            }
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline std::string to_string(const RatFunc& r) {
    if (r.is_polynomial()) {
        if (r.den().coeff(0) == r.field()->one()) return to_string(r.num());
        // constant non-unit denominator cannot occur (monic), but keep safe
    }
    std::string n = to_string(r.num());
    std::string d = to_string(r.den());
    return "(" + n + ")/(" + d + ")";
}

}  // namespace qdk

#endif  // QDK_FORMAT_HPP
