#include "polyfam/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyfam {

Family::Family(const Field& f, int ell, std::vector<Poly> members)
    : field_(f), ell_(ell), members_(std::move(members)) {
    if (members_.empty())
        throw std::invalid_argument("a family must have at least one member");
    if (ell_ < 0) throw std::invalid_argument("intersection level must be >= 0");
    for (const Poly& m : members_) {
        if (m.field() != field_)
            throw std::invalid_argument("family member over a different field");
        if (!m.is_monic())
            throw std::invalid_argument("family member " + m.to_string() +
                                        " is not monic");
    }
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 1; i < members_.size(); ++i)
        if (members_[i] == members_[i - 1])
            throw std::invalid_argument("duplicate family member " +
                                        members_[i].to_string());
    for (const Poly& m : members_) {
        int d = m.degree().value();
        if (degree_set_.empty() || degree_set_.back() != d) degree_set_.push_back(d);
    }
    if (ell_ > degree_set_.front())
        throw std::invalid_argument(
            "declared level " + std::to_string(ell_) +
            " exceeds the smallest member degree " + std::to_string(degree_set_.front()));
}

bool operator==(const Family& a, const Family& b) {
    return a.field_ == b.field_ && a.ell_ == b.ell_ && a.members_ == b.members_;
}

}  // namespace polyfam
