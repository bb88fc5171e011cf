// Truncated Taylor series in (X, Y, U) with exact rational coefficients.
//
// A graphing function is represented near a point by its Taylor polynomial;
// the frame fields H_1, H_2, T then act on series, and every invariant is
// read off as a constant term.  Each differentiation lowers the order up to
// which a series is exact.
#ifndef CARTANFORGE_JETSERIES_HPP
#define CARTANFORGE_JETSERIES_HPP

#include "cartanforge/jetcalc.hpp"
#include "cartanforge/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cartanforge {

/// Highest supported series order.
inline constexpr int kMaxSeriesOrder = 10;

class Series3 {
public:
    Series3() = default;
    /// Zero series exact up to total degree `order`.
    explicit Series3(int order);
    static Series3 constant(const Rational& c, int order);

    int order() const { return order_; }
    const Rational& coeff(int a, int b, int c) const;
    void set_coeff(int a, int b, int c, const Rational& v);
    const Rational& constant_term() const;

    Series3 operator+(const Series3& o) const;
    Series3 operator-(const Series3& o) const;
    Series3 operator-() const;
    Series3 operator*(const Series3& o) const;
    Series3 operator*(const Rational& s) const;
    Series3 operator+(const Rational& s) const;
    /// Multiplicative inverse; the constant term must be nonzero.
    Series3 inverse() const;
    Series3 operator/(const Series3& o) const { return *this * o.inverse(); }
    /// d/dX, d/dY or d/dU.
    Series3 derivative(Direction dir) const;
    /// Same series truncated to a lower order.
    Series3 truncated(int order) const;

private:
    int order_ = -1;
    std::vector<Rational> c_;
};

/// Frame fields and Phi-words computed on the Taylor polynomial of one graphing function.
class SeriesFrame {
public:
    /// Taylor polynomial of phi at `point` up to total degree `order`.
    SeriesFrame(const Poly3& phi, const std::array<Rational, 3>& point, int order);
    /// Taylor polynomial whose coefficients are the given jets (orders 1..6) and,
    /// for orders 7..`order`, the values supplied in `higher` keyed by (a,b,c).
    SeriesFrame(const JetPoint& jets, int order,
                const std::map<std::array<int, 3>, Rational>& higher = {});
    /// Fully random jets of every order up to `order`.
    static SeriesFrame random(RationalSampler& sampler, int order);

    int order() const { return order_; }
    const Series3& phi() const { return phi_; }
    const Series3& Delta() const { return delta_; }
    const Series3& Lambda(int i) const { return lambda_[i - 1]; }
    /// Upsilon obtained from the commutator [H_1, H_2] = 4T, i.e. Delta^2 (H_1(Lambda_2/Delta) - H_2(Lambda_1/Delta)).
    const Series3& Upsilon() const { return upsilon_; }

    Series3 H(int i, const Series3& f) const;
    Series3 T(const Series3& f) const;

    /// Series of H_{k_m}(...H_{k_1}(Phi_i)); Phi_i is defined by [H_i, T] = Phi_i T.
    const Series3& phi_word(const std::vector<int>& word, int i);
    /// Constant term of phi_word; throws JetOrderOverflow when the order budget is exhausted.
    Rational phi_value(const std::vector<int>& word, int i);

    /// Jet values phi_(a,b,c)(0) for 1 <= a+b+c <= 6.
    JetPoint jet_point() const;
    /// True when Upsilon(0) != 0, i.e. the frame is defined.
    bool nondegenerate() const { return upsilon_.constant_term() != 0; }

private:
    void build();

    int order_;
    Series3 phi_, delta_, lambda_[2], lam_over_delta_[2], upsilon_, tau_;
    std::map<std::pair<std::vector<int>, int>, Series3> words_;
};

}  // namespace cartanforge

#endif
