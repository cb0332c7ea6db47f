#ifndef QDK_QCOMB_HPP
#define QDK_QCOMB_HPP

#include "qdk/field.hpp"

namespace qdk {

// q-combinatorics, memoized per field; see Field for the evaluation paths.
// q_binom is computed only by the q-Pascal recurrence, since q-factorials
// vanish for arguments >= N at a primitive N-th root of unity.

inline Scalar q_int(const FieldPtr& f, unsigned long k) { return f->q_int(k); }
inline Scalar q_factorial(const FieldPtr& f, unsigned long k) { return f->q_factorial(k); }
inline Scalar q_binom(const FieldPtr& f, unsigned long r, unsigned long s) {
    return f->q_binom(r, s);
}
inline Scalar binom(const FieldPtr& f, unsigned long r, unsigned long s) {
    return f->binom(r, s);
}

}  // namespace qdk

#endif  // QDK_QCOMB_HPP
