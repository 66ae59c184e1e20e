#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace staircase {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Point of the rational projective line: p/q in lowest terms, q >= 0.
// q == 0 encodes the point at infinity (stored as 1/0).
class Slope {
public:
    Slope() : num_(0), den_(1) {}

    Slope(long long p, long long q) {
        if (p == 0 && q == 0)
            throw std::invalid_argument("Slope: 0/0 is not a projective point");
        if (q < 0) { p = -p; q = -q; }
        if (q == 0) {
            num_ = 1; den_ = 0;
        } else {
            long long g = std::gcd(p < 0 ? -p : p, q);
            num_ = p / g; den_ = q / g;
        }
    }

    static Slope infinity() { return Slope(1, 0); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }

    Slope shifted(long long k) const {
        if (is_infinite()) return *this;
        return Slope(num_ + k * den_, den_);
    }

    Slope negated() const { return Slope(-num_, den_); }

    // z -> -1/z
    Slope inverted_neg() const { return Slope(-den_, num_); }

    double to_double() const {
        if (is_infinite())
            throw std::domain_error("Slope: infinity has no double value");
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    BigRat to_rat() const {
        if (is_infinite())
            throw std::domain_error("Slope: infinity has no rational value");
        return BigRat(num_, den_);
    }

    std::string str() const {
        if (is_infinite()) return "inf";
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    static Slope parse(const std::string& text) {
        if (text == "inf" || text == "-inf" || text == "oo")
            return infinity();
        const auto whole = [](const std::string& part) {
            std::size_t used = 0;
            const long long v = std::stoll(part, &used);
            if (used != part.size())
                throw std::invalid_argument("trailing characters");
            return v;
        };
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Slope(whole(text), 1);
            long long p = whole(text.substr(0, slash));
            long long q = whole(text.substr(slash + 1));
            return Slope(p, q);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Slope: cannot parse '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("Slope: value out of range in '" + text + "'");
        }
    }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    // Total order: finite slopes by value, infinity greatest.
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }

private:
    long long num_, den_;
};

} // namespace staircase
