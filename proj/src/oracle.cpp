#include "compstat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace compstat::oracle {

StatKey statistics(std::span<const int> parts) {
    StatKey key;
    key.parts = static_cast<int>(parts.size());
    for (std::size_t t = 1; t < parts.size(); ++t) {
        if (parts[t - 1] < parts[t]) ++key.rises;
        else if (parts[t - 1] == parts[t]) ++key.levels;
        else ++key.drops;
    }
    return key;
}

namespace {

bool is_palindrome(std::span<const int> p) { return std::equal(p.begin(), p.begin() + p.size() / 2, p.rbegin()); }

bool no_equal_neighbours(std::span<const int> p) {
    return std::adjacent_find(p.begin(), p.end()) == p.end();
}

bool weakly_decreasing(std::span<const int> p) {
    return std::adjacent_find(p.begin(), p.end(), std::less<>{}) == p.end();
}

// First-part recursion for the three classes defined by a local adjacency rule.
class SequenceWalker {
public:
    SequenceWalker(CompositionClass cls, std::span<const int> alphabet, const Visitor& visit)
        : cls_(cls), alphabet_(alphabet), visit_(visit) {}

    void run(int remaining) {
        if (remaining == 0) {
            visit_(buf_);
            return;
        }
        for (int a : alphabet_) {
            if (a > remaining) break;
            if (!buf_.empty()) {
                if (cls_ == CompositionClass::Carlitz && a == buf_.back()) continue;
                if (cls_ == CompositionClass::Partitions && a > buf_.back()) break;
            }
            buf_.push_back(a);
            run(remaining - a);
            buf_.pop_back();
        }
    }

private:
    CompositionClass cls_;
    std::span<const int> alphabet_;
    const Visitor& visit_;
    std::vector<int> buf_;
};

// Builds palindromes from the outside in: choose the outer part a, then a
// palindrome of n - 2a for the inside, or stop at a single centre part.
// Two palindromes of equal size are never prefixes of each other, so this
// yields lexicographic order.
class PalindromeWalker {
public:
    PalindromeWalker(bool carlitz, std::span<const int> alphabet, const Visitor& visit)
        : carlitz_(carlitz), alphabet_(alphabet), visit_(visit) {}

    void run(int remaining) {
        if (remaining == 0) {
            // Even length: the two middle parts are equal, which a Carlitz palindrome forbids.
            if (carlitz_ && !left_.empty()) return;
            emit(std::nullopt);
            return;
        }
        for (int a : alphabet_) {
            if (a > remaining) break;
            if (carlitz_ && !left_.empty() && a == left_.back()) continue;
            if (a == remaining) {
                emit(a);
            } else if (2 * a <= remaining) {
                left_.push_back(a);
                run(remaining - 2 * a);
                left_.pop_back();
            }
        }
    }

private:
    void emit(std::optional<int> centre) {
        out_.assign(left_.begin(), left_.end());
        if (centre) out_.push_back(*centre);
        out_.insert(out_.end(), left_.rbegin(), left_.rend());
        visit_(out_);
    }

    bool carlitz_;
    std::span<const int> alphabet_;
    const Visitor& visit_;
    std::vector<int> left_;
    std::vector<int> out_;
};

}  // namespace

bool belongs(CompositionClass cls, std::span<const int> parts) {
    switch (cls) {
        case CompositionClass::Compositions: return true;
        case CompositionClass::Palindromes: return is_palindrome(parts);
        case CompositionClass::Carlitz: return no_equal_neighbours(parts);
        case CompositionClass::CarlitzPalindromes:
            return is_palindrome(parts) && no_equal_neighbours(parts);
        case CompositionClass::Partitions: return weakly_decreasing(parts);
    }
    return false;
}

void enumerate(CompositionClass cls, std::span<const int> alphabet, int n, const Visitor& visit) {
    if (n < 0) return;
    switch (cls) {
        case CompositionClass::Palindromes:
        case CompositionClass::CarlitzPalindromes:
            PalindromeWalker(cls == CompositionClass::CarlitzPalindromes, alphabet, visit).run(n);
            return;
        default: SequenceWalker(cls, alphabet, visit).run(n);
    }
}

void enumerate(CompositionClass cls, const PartSet& a, int n, const Visitor& visit) {
    const std::vector<int> alphabet = a.materialize(n);
    enumerate(cls, alphabet, n, visit);
}

void enumerate_filtered(CompositionClass cls, std::span<const int> alphabet, int n,
                        const Visitor& visit) {
    enumerate(CompositionClass::Compositions, alphabet, n, [&](std::span<const int> p) {
        if (belongs(cls, p)) visit(p);
    });
}

std::vector<Composition> enumerate_all(CompositionClass cls, const PartSet& a, int n) {
    std::vector<Composition> out;
    enumerate(cls, a, n, [&out](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); });
    return out;
}

JointDistribution joint_distribution(CompositionClass cls, const PartSet& a, int n) {
    JointDistribution dist;
    dist.n = n;
    enumerate(cls, a, n, [&dist](std::span<const int> p) { ++dist.counts[statistics(p)]; });
    return dist;
}

}  // namespace compstat::oracle
