#pragma once

#include <variant>

#include "jacbound/surd.hpp"

namespace jacbound {

/// How an operation should evaluate: fast machine floats, or certified
/// rational intervals at a given target precision (bits).
struct EvalMode {
    enum class Kind { Float64, Certified };
    Kind kind = Kind::Float64;
    unsigned prec = kDefaultPrec;

    static EvalMode float64() { return {Kind::Float64, 0}; }
    static EvalMode certified(unsigned prec = kDefaultPrec) { return {Kind::Certified, prec}; }
    bool is_certified() const { return kind == Kind::Certified; }
};

/// A computed value in either mode. In Certified mode the true real value
/// lies inside the carried interval.
class Scalar {
public:
    Scalar() : v_(0.0) {}

    static Scalar of(double x) { return Scalar(x); }
    static Scalar of(Interval iv) { return Scalar(std::move(iv)); }

    static Scalar from_rat(const Rat& r, const EvalMode& mode) {
        if (mode.is_certified()) return Scalar(Interval::point(r));
        return Scalar(r.to_double());
    }

    static Scalar from_surd(const Surd& s, const EvalMode& mode) {
        if (mode.is_certified()) return Scalar(s.enclosure(mode.prec));
        return Scalar(s.to_double());
    }

    bool is_certified() const { return std::holds_alternative<Interval>(v_); }

    const Interval& interval() const {
        if (!is_certified()) throw Error(ErrorCode::DomainError, "scalar is not certified");
        return std::get<Interval>(v_);
    }

    /// Midpoint in certified mode, the float otherwise.
    double to_double() const {
        if (is_certified()) return std::get<Interval>(v_).midpoint().to_double();
        return std::get<double>(v_);
    }

private:
    explicit Scalar(double x) : v_(x) {}
    explicit Scalar(Interval iv) : v_(std::move(iv)) {}

    std::variant<double, Interval> v_;
};

} // namespace jacbound
