#ifndef ZETAFORGE_SIGN_SEQUENCE_HPP
#define ZETAFORGE_SIGN_SEQUENCE_HPP

#include <string>
#include <vector>

#include "zetaforge/rational.hpp"
#include "zetaforge/real.hpp"

namespace zetaforge {

// Sign word of a nested radical sqrt(2 s1 sqrt(2 s2 sqrt(... sk sqrt(2)...))).
// The empty word is the bare sqrt(2) = 2 sin(pi/4); a word of length k names a
// radical of depth k+1 whose value is 2 sin(q pi) with q = angle_of(seq).
class SignSequence {
public:
    SignSequence() = default;
    explicit SignSequence(std::vector<int> signs) : signs_(std::move(signs)) {}

    // Accepts "(- + +)", "-++", with optional spaces/parentheses.
    static SignSequence parse(const std::string& text) {
        std::vector<int> signs;
        for (char ch : text) {
            if (ch == '+') signs.push_back(+1);
            else if (ch == '-') signs.push_back(-1);
            else if (ch == ' ' || ch == '(' || ch == ')' || ch == '\t') continue;
            else throw DomainError(std::string("SignSequence: unexpected character '") + ch + "'");
        }
        return SignSequence(std::move(signs));
    }

    size_t depth() const { return signs_.size(); }
    bool empty() const { return signs_.empty(); }
    const std::vector<int>& signs() const { return signs_; }
    int at(size_t i) const { return signs_[i]; }

    // Compact form, e.g. "-++"; empty word prints as "()".
    std::string str() const {
        if (signs_.empty()) return "()";
        std::string s;
        for (int v : signs_) s += (v > 0 ? '+' : '-');
        return s;
    }

    // Paper-style display, e.g. "(- + +)".
    std::string pretty() const {
        std::string s = "(";
        for (size_t i = 0; i < signs_.size(); ++i) {
            if (i) s += ' ';
            s += (signs_[i] > 0 ? '+' : '-');
        }
        return s + ")";
    }

    bool operator==(const SignSequence& o) const { return signs_ == o.signs_; }

private:
    std::vector<int> signs_;
};

// q with 2 sin(q pi) equal to the radical's value; q = (2i-1)/2^(depth+2).
// Recurrence from the half-angle identities, innermost out: q0 = 1/4,
// q <- 1/4 + s q/2.
inline BigRat angle_of(const SignSequence& seq) {
    BigRat q = make_rat(1, 4);
    for (size_t i = seq.depth(); i-- > 0;) {
        q = make_rat(1, 4) + (seq.at(i) > 0 ? q : -q) / 2;
    }
    return q;
}

// Inverse of angle_of: the length n-2 word with angle i/2^n.
inline SignSequence seq_of_angle(long i, long n) {
    if (n < 2) throw DomainError("seq_of_angle: n must be >= 2");
    if (i < 1 || i % 2 == 0 || BigInt(i) > pow2_int(static_cast<unsigned long>(n - 1)))
        throw DomainError("seq_of_angle: need odd i with 1 <= i <= 2^(n-1)");
    BigRat q = make_rat(BigInt(i), pow2_int(static_cast<unsigned long>(n)));
    std::vector<int> signs;
    const BigRat quarter = make_rat(1, 4);
    for (long k = 0; k < n - 2; ++k) {
        BigRat d = q - quarter;
        int s = sgn(d) >= 0 ? +1 : -1;
        signs.push_back(s);
        q = 2 * (s > 0 ? d : -d);
    }
    if (q != quarter) throw DomainError("seq_of_angle: angle does not reduce to a sign word");
    return SignSequence(std::move(signs));
}

// (-1)^(k+1) with k = number of '-' signs.
inline int sign_of(const SignSequence& seq) {
    int minus = 0;
    for (int v : seq.signs())
        if (v < 0) ++minus;
    return (minus % 2 == 0) ? -1 : +1;
}

// Numeric value of the radical, innermost out, entirely in Real arithmetic.
inline Real elementary_value(const SignSequence& seq, const PrecisionContext& ctx) {
    long wb = ctx.bits();
    Real v = sqrt(Real(2, wb));
    for (size_t i = seq.depth(); i-- > 0;) {
        v = sqrt(seq.at(i) > 0 ? 2 + v : 2 - v);
    }
    return v;
}

// p_n(x) = ((...(x^2-2)^2...-2)^2-2), n squarings; vanishes on depth-n terms.
inline Real minimal_poly_eval(long n, const Real& x, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("minimal_poly_eval: n must be >= 1");
    Real y = x.rounded(ctx.bits());
    for (long i = 0; i < n; ++i) y = y * y - 2;
    return y;
}

} // namespace zetaforge

#endif
