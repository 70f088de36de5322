#include "mocs/sequence_set.hpp"

#include "mocs/error.hpp"

namespace mocs {

ComplementarySet::ComplementarySet(std::vector<QarySequence> members) : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("a complementary set needs at least one sequence");
    for (const auto& s : members_) {
        if (s.q() != members_.front().q() || s.size() != members_.front().size()) {
            throw DomainError("all members of a complementary set must share q and length");
        }
    }
}

} // namespace mocs
