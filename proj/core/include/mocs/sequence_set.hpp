#pragma once

#include "mocs/gbf.hpp"

#include <vector>

namespace mocs {

// Ordered list of N sequences sharing alphabet and length: one GCS candidate,
// or one C^p of a family.
class ComplementarySet {
public:
    explicit ComplementarySet(std::vector<QarySequence> members);

    Symbol q() const noexcept { return members_.front().q(); }
    std::size_t length() const noexcept { return members_.front().size(); }
    std::size_t flock_size() const noexcept { return members_.size(); }

    const std::vector<QarySequence>& members() const noexcept { return members_; }
    const QarySequence& operator[](std::size_t n) const { return members_[n]; }

    bool operator==(const ComplementarySet& other) const = default;

private:
    std::vector<QarySequence> members_;
};

} // namespace mocs
