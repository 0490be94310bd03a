#pragma once

#include <gammalink/numeric.hpp>

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gammalink {

/// Truncated integer sequence (s_0, ..., s_N). Entry k is known exactly for
/// k <= N; nothing is assumed about entries beyond the order.
class GammaSeq {
public:
    explicit GammaSeq(std::vector<Integer> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw error("sequence needs at least one entry");
    }

    GammaSeq(std::initializer_list<Integer> entries) : GammaSeq(std::vector<Integer>(entries)) {}

    static GammaSeq zero(std::size_t order) { return GammaSeq(std::vector<Integer>(order + 1)); }

    std::size_t order() const noexcept { return e_.size() - 1; }

    const Integer& operator[](std::size_t k) const { return e_.at(k); }

    const std::vector<Integer>& entries() const noexcept { return e_; }

    bool is_zero() const {
        for (const auto& z : e_)
            if (sgn(z) != 0) return false;
        return true;
    }

    /// Index of the first nonzero entry, or order()+1 when the sequence is zero.
    std::size_t first_nonzero() const {
        std::size_t k = 0;
        while (k < e_.size() && sgn(e_[k]) == 0) ++k;
        return k;
    }

    GammaSeq truncated(std::size_t order) const {
        require_order(order);
        return GammaSeq(std::vector<Integer>(e_.begin(), e_.begin() + static_cast<long>(order) + 1));
    }

    void require_order(std::size_t order) const {
        if (order > this->order()) throw insufficient_order(order, this->order());
    }

    friend bool operator==(const GammaSeq& a, const GammaSeq& b) { return a.e_ == b.e_; }

    friend GammaSeq operator+(const GammaSeq& a, const GammaSeq& b) {
        if (a.order() != b.order()) throw error("order mismatch");
        std::vector<Integer> v(a.e_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.e_[i] + b.e_[i];
        return GammaSeq(std::move(v));
    }

    /// Space-separated entries, the CLI's plain-text format.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ' ';
            s += e_[i].get_str();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GammaSeq& s) { return os << '(' << s.str() << ')'; }

private:
    std::vector<Integer> e_;
};

}  // namespace gammalink
