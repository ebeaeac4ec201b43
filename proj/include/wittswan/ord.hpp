#ifndef WITTSWAN_ORD_HPP
#define WITTSWAN_ORD_HPP

#include <stdexcept>
#include <string>

namespace wittswan {

// Value of a discrete valuation: an integer or +infinity (for 0).
class Ord {
public:
    constexpr Ord() : inf_(true), v_(0) {}
    constexpr explicit Ord(long v) : inf_(false), v_(v) {}

    static constexpr Ord inf() { return Ord(); }

    bool is_inf() const { return inf_; }

    long value() const {
        if (inf_) throw std::logic_error("Ord: value() on infinity");
        return v_;
    }

    // k * v with k > 0; infinity absorbs
    Ord scaled(long k) const {
        if (k <= 0) throw std::invalid_argument("Ord: scale factor must be positive");
        return inf_ ? inf() : Ord(v_ * k);
    }

    Ord operator+(Ord o) const {
        return (inf_ || o.inf_) ? inf() : Ord(v_ + o.v_);
    }

    bool operator==(Ord o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(Ord o) const { return !(*this == o); }

    // infinity compares greater than every integer
    bool operator<(Ord o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator>(Ord o) const { return o < *this; }
    bool operator<=(Ord o) const { return !(o < *this); }
    bool operator>=(Ord o) const { return !(*this < o); }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    bool inf_;
    long v_;
};

inline Ord min(Ord a, Ord b) { return a < b ? a : b; }
inline Ord max(Ord a, Ord b) { return a < b ? b : a; }

} // namespace wittswan

#endif
