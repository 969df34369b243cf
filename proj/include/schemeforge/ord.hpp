#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace schemeforge {

using Level = int;

// Distinguished value for Delta(a,a); compares above every real level.
inline constexpr Level kLevelInf = std::numeric_limits<Level>::max();

enum class Errc {
    InvalidType,
    NotALevelCardinality,
    DomainExceeded,
    BadOrder,
    XiUndefined,
    NotAMember,
    RequestOutOfDomain,
    NoWitnessInSchedule,
    FuelExhausted,
    NotATwoType,
    TypeTooSmall,
    NotAnEmbedding,
    UnknownCheck,
    IoError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidType: return "InvalidType";
        case Errc::NotALevelCardinality: return "NotALevelCardinality";
        case Errc::DomainExceeded: return "DomainExceeded";
        case Errc::BadOrder: return "BadOrder";
        case Errc::XiUndefined: return "XiUndefined";
        case Errc::NotAMember: return "NotAMember";
        case Errc::RequestOutOfDomain: return "RequestOutOfDomain";
        case Errc::NoWitnessInSchedule: return "NoWitnessInSchedule";
        case Errc::FuelExhausted: return "FuelExhausted";
        case Errc::NotATwoType: return "NotATwoType";
        case Errc::TypeTooSmall: return "TypeTooSmall";
        case Errc::NotAnEmbedding: return "NotAnEmbedding";
        case Errc::UnknownCheck: return "UnknownCheck";
        case Errc::IoError: return "IoError";
    }
    return "?";
}

class SchemeError : public std::runtime_error {
public:
    SchemeError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw SchemeError(code, what); }

// Ordinal below omega*Q, encoded as omega*block + offset.
struct Ord {
    std::uint32_t block = 0;
    std::uint64_t offset = 0;

    constexpr Ord() = default;
    constexpr Ord(std::uint32_t b, std::uint64_t o) : block(b), offset(o) {}

    static constexpr Ord fin(std::uint64_t n) { return Ord{0, n}; }
    static constexpr Ord omega_times(std::uint32_t q) { return Ord{q, 0}; }

    bool finite() const { return block == 0; }
    Ord succ() const { return Ord{block, offset + 1}; }

    friend constexpr auto operator<=>(const Ord& a, const Ord& b) {
        if (auto c = a.block <=> b.block; c != 0) return c;
        return a.offset <=> b.offset;
    }
    friend constexpr bool operator==(const Ord&, const Ord&) = default;

    std::string str() const {
        if (block == 0) return std::to_string(offset);
        std::string s = block == 1 ? "w" : "w*" + std::to_string(block);
        if (offset > 0) s += "+" + std::to_string(offset);
        return s;
    }
};

// Nonempty-or-empty strictly increasing finite set of ordinals.  Elements are
// indexable in increasing order, following the convention A(i) = i-th element.
class FinOrdSet {
public:
    FinOrdSet() = default;
    FinOrdSet(std::initializer_list<Ord> xs) : elems_(xs) { normalize(); }

    static FinOrdSet from(std::vector<Ord> xs) {
        FinOrdSet s;
        s.elems_ = std::move(xs);
        s.normalize();
        return s;
    }
    static FinOrdSet from_sorted(std::vector<Ord> xs) {
        FinOrdSet s;
        s.elems_ = std::move(xs);
        for (std::size_t i = 1; i < s.elems_.size(); ++i)
            if (!(s.elems_[i - 1] < s.elems_[i]))
                raise(Errc::IoError, "set not strictly increasing");
        return s;
    }
    // Finite ordinals {lo, lo+1, ..., hi-1}.
    static FinOrdSet interval(std::uint64_t lo, std::uint64_t hi) {
        FinOrdSet s;
        s.elems_.reserve(hi > lo ? hi - lo : 0);
        for (std::uint64_t v = lo; v < hi; ++v) s.elems_.push_back(Ord::fin(v));
        return s;
    }
    // {base, base+1, ..., base+count-1} within a single block.
    static FinOrdSet interval_at(Ord base, std::uint64_t count) {
        FinOrdSet s;
        s.elems_.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) s.elems_.push_back(Ord{base.block, base.offset + i});
        return s;
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    Ord operator()(std::size_t i) const { return elems_.at(i); }
    Ord min() const { return elems_.front(); }
    Ord max() const { return elems_.back(); }
    const std::vector<Ord>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(Ord a) const { return std::binary_search(elems_.begin(), elems_.end(), a); }

    // Number of elements strictly below a; equals the index of a when present.
    std::size_t rank(Ord a) const {
        return std::size_t(std::lower_bound(elems_.begin(), elems_.end(), a) - elems_.begin());
    }

    void insert(Ord a) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
        if (it == elems_.end() || *it != a) elems_.insert(it, a);
    }

    FinOrdSet slice(std::size_t i, std::size_t j) const {  // by rank, [i, j)
        FinOrdSet s;
        if (i < j && i < elems_.size())
            s.elems_.assign(elems_.begin() + long(i), elems_.begin() + long(std::min(j, elems_.size())));
        return s;
    }
    FinOrdSet first(std::size_t n) const { return slice(0, n); }

    FinOrdSet below(Ord a) const { return slice(0, rank(a)); }        // elements < a
    FinOrdSet upto(Ord a) const { return slice(0, rank(a.succ())); }  // elements <= a
    FinOrdSet at_least(Ord a) const { return slice(rank(a), size()); }

    FinOrdSet set_union(const FinOrdSet& o) const {
        FinOrdSet s;
        std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                       std::back_inserter(s.elems_));
        return s;
    }
    FinOrdSet set_intersection(const FinOrdSet& o) const {
        FinOrdSet s;
        std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                              std::back_inserter(s.elems_));
        return s;
    }
    FinOrdSet set_minus(const FinOrdSet& o) const {
        FinOrdSet s;
        std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                            std::back_inserter(s.elems_));
        return s;
    }

    bool subset_of(const FinOrdSet& o) const {
        return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
    }
    // A is an initial segment of B (written A ⊑ B in the domain literature).
    bool initial_segment_of(const FinOrdSet& o) const {
        if (size() > o.size()) return false;
        return std::equal(elems_.begin(), elems_.end(), o.elems_.begin());
    }

    // Image of this set (a subset of `from`) under the increasing bijection from -> to.
    FinOrdSet image(const FinOrdSet& from, const FinOrdSet& to) const {
        if (from.size() != to.size()) raise(Errc::BadOrder, "bijection between sets of different size");
        FinOrdSet s;
        s.elems_.reserve(size());
        for (Ord a : elems_) {
            std::size_t i = from.rank(a);
            if (i >= from.size() || from(i) != a) raise(Errc::NotAMember, "element outside bijection domain");
            s.elems_.push_back(to(i));
        }
        return s;  // increasing since the bijection is
    }

    friend bool operator==(const FinOrdSet&, const FinOrdSet&) = default;
    friend auto operator<=>(const FinOrdSet& a, const FinOrdSet& b) {
        return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(),
                                                      b.elems_.begin(), b.elems_.end());
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) s += ",";
            s += elems_[i].str();
        }
        return s + "}";
    }

private:
    void normalize() {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }
    std::vector<Ord> elems_;
};

}  // namespace schemeforge
