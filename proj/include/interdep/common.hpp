#ifndef INTERDEP_COMMON_HPP
#define INTERDEP_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace interdep {

// Global comparison tolerance for cost arithmetic. Strict/weak inequalities in
// the model are fragile under floating point, so every comparison goes through
// the helpers below. Tests prefer integer-valued instances where these are exact.
inline double& global_tolerance() {
    static double eps = 1e-9;
    return eps;
}

inline bool approx_eq(double a, double b) { return (a > b ? a - b : b - a) <= global_tolerance(); }
// weak a <= b
inline bool leq(double a, double b) { return a <= b + global_tolerance(); }
// strict a < b (a tie counts as not-less)
inline bool lt(double a, double b) { return a < b - global_tolerance(); }

// Input failed validation (schema violation, unknown node, negative cost, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration guard (instance too large for an exact exponential routine).
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

using NodeId = int;

// Node subset with bitset semantics. Multi-word so coalitions over networks of
// any size are representable; the enumeration-heavy algorithms use the 64-bit
// fast path behind their own size guards.
class Coalition {
public:
    Coalition() = default;
    explicit Coalition(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static Coalition all(int universe) {
        Coalition c(universe);
        for (int i = 0; i < universe; ++i) c.add(i);
        return c;
    }
    static Coalition of(int universe, std::initializer_list<int> members) {
        Coalition c(universe);
        for (int i : members) c.add(i);
        return c;
    }
    static Coalition from_mask(int universe, std::uint64_t mask) {
        Coalition c(universe);
        if (!c.w_.empty()) c.w_[0] = mask;
        return c;
    }

    int universe() const { return n_; }
    bool contains(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void add(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void remove(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool is_full() const { return count() == n_; }

    bool subset_of(const Coalition& other) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~other.w_[k]) return false;
        return true;
    }
    bool intersects(const Coalition& other) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & other.w_[k]) return true;
        return false;
    }

    Coalition& operator|=(const Coalition& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Coalition& operator&=(const Coalition& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Coalition operator|(const Coalition& o) const { Coalition r = *this; r |= o; return r; }
    Coalition operator&(const Coalition& o) const { Coalition r = *this; r &= o; return r; }
    Coalition complement() const {
        Coalition r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        // clear bits beyond the universe
        int spare = int(w_.size()) * 64 - n_;
        if (spare > 0 && !r.w_.empty()) r.w_.back() &= ~std::uint64_t(0) >> spare;
        return r;
    }
    Coalition minus(const Coalition& o) const {
        Coalition r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }

    bool operator==(const Coalition& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Coalition& o) const { return !(*this == o); }

    // 64-bit view, valid only when the universe fits one word.
    std::uint64_t mask() const {
        if (n_ > 64) throw GuardExceeded("coalition mask requested for universe > 64 nodes");
        return w_.empty() ? 0 : w_[0];
    }

    std::vector<int> members() const {
        std::vector<int> m;
        m.reserve(count());
        for (int i = 0; i < n_; ++i)
            if (contains(i)) m.push_back(i);
        return m;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Per-node cost shares summing to the grand-coalition cost.
struct Allocation {
    std::vector<double> shares;
    double total = 0.0;

    Allocation() = default;
    explicit Allocation(std::vector<double> s) : shares(std::move(s)) {
        for (double v : shares) total += v;
    }
    int size() const { return int(shares.size()); }
};

} // namespace interdep

#endif
