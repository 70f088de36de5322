#include "mocs/enumeration.hpp"

#include "mocs/error.hpp"
#include "mocs/verification.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mocs {

std::vector<std::size_t> length_spectrum(unsigned m, unsigned t_min, unsigned t_max) {
    if (m < 1 || m > kMaxVariables) throw DomainError("m out of range");
    std::vector<std::size_t> out;
    for (unsigned t = t_min; t <= t_max; ++t) {
        if (t > m - 1) throw DomainError("t = " + std::to_string(t) + " exceeds m-1 = " + std::to_string(m - 1));
        out.push_back((std::size_t{1} << (m - 1)) + (std::size_t{1} << t));
    }
    return out;
}

namespace {

using RecordKey = std::tuple<std::size_t, std::size_t, std::size_t, Construction>;

// Set partitions of {1..n} as restricted growth strings, so parts come out
// ordered by their smallest element.
void set_partitions(unsigned n, unsigned next, std::vector<std::vector<unsigned>>& parts,
                    std::vector<std::vector<std::vector<unsigned>>>& out) {
    if (next > n) {
        out.push_back(parts);
        return;
    }
    // Indexed: the recursion may reallocate `parts`.
    for (std::size_t i = 0; i < parts.size(); ++i) {
        parts[i].push_back(next);
        set_partitions(n, next + 1, parts, out);
        parts[i].pop_back();
    }
    parts.push_back({next});
    set_partitions(n, next + 1, parts, out);
    parts.pop_back();
}

class PlanSearch {
public:
    PlanSearch(unsigned m, unsigned t, std::map<RecordKey, ExistenceRecord>& records)
        : m_(m), t_(t), records_(records) {}

    void run(const std::vector<std::vector<unsigned>>& partition) {
        ordered_.assign(partition.begin(), partition.end());
        order_part(0, 0);
    }

private:
    // Position `offset` is where part `alpha` starts in the traversal.
    void order_part(std::size_t alpha, std::size_t offset) {
        if (alpha == ordered_.size()) {
            emit();
            return;
        }
        auto& part = ordered_[alpha];
        std::sort(part.begin(), part.end());
        do {
            if (prefix_consistent(part, offset)) order_part(alpha + 1, offset + part.size());
        } while (std::next_permutation(part.begin(), part.end()));
    }

    // Traversal positions below t may only hold values in 1..t.
    bool prefix_consistent(const std::vector<unsigned>& part, std::size_t offset) const {
        for (std::size_t i = 0; i < part.size() && offset + i < t_; ++i) {
            if (part[i] > t_) return false;
        }
        return true;
    }

    void emit() {
        const PartitionPlan plan(m_, ordered_, t_);
        const std::size_t k = plan.k();
        const std::size_t length = plan.length();
        const std::size_t flock = std::size_t{1} << (k + 1);
        const TDecomposition d = *decompose_t(plan);
        if (t_ >= plan.part_size(1)) add(std::size_t{1} << d.k_prime, flock, length, Construction::theorem2, plan);
        if (d.alpha_prime == k) add(std::size_t{1} << k, flock, length, Construction::corollary1, plan);
    }

    void add(std::size_t set_size, std::size_t flock, std::size_t length, Construction c, const PartitionPlan& plan) {
        records_.try_emplace(RecordKey{set_size, flock, length, c}, ExistenceRecord{set_size, flock, length, c, plan});
    }

    unsigned m_;
    unsigned t_;
    std::map<RecordKey, ExistenceRecord>& records_;
    std::vector<std::vector<unsigned>> ordered_;
};

} // namespace

std::vector<ExistenceRecord> enumerate_existence(Symbol q, unsigned m_max, std::size_t max_length,
                                                 const EnumerationOptions& options) {
    if (q < 2 || q % 2 != 0) throw DomainError("alphabet size q must be even, got " + std::to_string(q));
    if (q > kMaxEnumerationAlphabet) {
        throw DomainError("q = " + std::to_string(q) + " exceeds the enumeration cap of " +
                          std::to_string(kMaxEnumerationAlphabet));
    }
    if (m_max > kMaxEnumerationVariables) {
        throw DomainError("m_max = " + std::to_string(m_max) + " exceeds the desk-scale cap of " +
                          std::to_string(kMaxEnumerationVariables));
    }

    std::map<RecordKey, ExistenceRecord> found;
    for (unsigned m = 2; m <= m_max; ++m) {
        std::vector<std::vector<std::vector<unsigned>>> partitions;
        std::vector<std::vector<unsigned>> scratch;
        set_partitions(m - 1, 1, scratch, partitions);
        for (unsigned t = 1; t <= m - 1; ++t) {
            if ((std::size_t{1} << (m - 1)) + (std::size_t{1} << t) > max_length) continue;
            PlanSearch search(m, t, found);
            for (const auto& partition : partitions) search.run(partition);
        }
    }

    std::vector<ExistenceRecord> records;
    records.reserve(found.size());
    for (auto& [key, record] : found) {
        if (options.verify_witnesses) {
            const MocsFamily family = build_witness(q, record);
            record.verified = verify_mocs(family, options.mode).passed && family.set_size() == record.set_size &&
                              family.flock_size() == record.flock_size && family.length() == record.length;
        }
        records.push_back(std::move(record));
    }
    return records;
}

MocsFamily build_witness(Symbol q, const ExistenceRecord& record) {
    switch (record.construction) {
    case Construction::theorem2: return build_mocs_theorem2(q, record.witness);
    case Construction::corollary1: return build_mocs_corollary1(q, record.witness);
    default: throw DomainError("existence records come only from theorem 2 or corollary 1");
    }
}

std::string witness_spec(const PartitionPlan& plan) {
    std::string out = "m=" + std::to_string(plan.m()) + "/t=" + std::to_string(plan.t()) + "/parts=";
    for (std::size_t a = 0; a < plan.parts().size(); ++a) {
        if (a) out += ';';
        for (std::size_t b = 0; b < plan.parts()[a].size(); ++b) {
            if (b) out += ',';
            out += std::to_string(plan.parts()[a][b]);
        }
    }
    return out;
}

const ExistenceTable& existence_table_by_set_size() {
    static const ExistenceTable table{
        1,
        {4, 8, 12, 16, 20, 24, 32, 36, 40, 48, 64},
        {
            {"M=4", Construction::unspecified, 4, std::nullopt, {8, 12, 16, 20, 24, 32, 36, 40, 48, 64}},
            {"M=8", Construction::unspecified, 8, std::nullopt, {16, 24, 32, 40, 48, 64}},
            {"M=16", Construction::unspecified, 16, std::nullopt, {32, 48, 64}},
        },
    };
    return table;
}

const ExistenceTable& existence_table_by_flock() {
    using C = Construction;
    static const ExistenceTable table{
        2,
        {4, 6, 8, 10, 12, 16, 18, 20, 24, 32, 34, 36, 40},
        {
            {"theorem2 (2,4)", C::theorem2, 2, 4, {4, 8, 16, 32}},
            {"theorem2 (2,8)", C::theorem2, 2, 8, {6, 10, 12, 18, 20, 24, 34, 36, 40}},
            {"theorem2 (2,16)", C::theorem2, 2, 16, {10, 18, 20, 34, 36, 40}},
            {"theorem2 (2,32)", C::theorem2, 2, 32, {18, 34, 36}},
            {"theorem2 (2,64)", C::theorem2, 2, 64, {34}},
            {"theorem2 (4,8)", C::theorem2, 4, 8, {8, 16, 32}},
            {"theorem2 (4,16)", C::theorem2, 4, 16, {12, 20, 24, 36, 40}},
            {"theorem2 (4,32)", C::theorem2, 4, 32, {20, 36, 40}},
            {"theorem2 (4,64)", C::theorem2, 4, 64, {36}},
            {"theorem2 (8,16)", C::theorem2, 8, 16, {16, 32}},
            {"theorem2 (8,32)", C::theorem2, 8, 32, {24, 40}},
            {"theorem2 (8,64)", C::theorem2, 8, 64, {40}},
            {"theorem2 (16,32)", C::theorem2, 16, 32, {32}},
            {"corollary1 (2,4)", C::corollary1, 2, 4, {4, 6, 8, 10, 12, 16, 18, 20, 24, 32, 34, 36, 40}},
            {"corollary1 (4,8)", C::corollary1, 4, 8, {8, 12, 16, 20, 24, 32, 36, 40}},
            {"corollary1 (8,16)", C::corollary1, 8, 16, {16, 24, 32, 40}},
            {"corollary1 (16,32)", C::corollary1, 16, 32, {32}},
        },
    };
    return table;
}

const ExistenceTable& existence_table(unsigned id) {
    switch (id) {
    case 1: return existence_table_by_set_size();
    case 2: return existence_table_by_flock();
    default: throw DomainError("unknown table " + std::to_string(id) + "; expected 1 or 2");
    }
}

namespace {

bool row_matches(const TableRow& row, const ExistenceRecord& record) {
    if (row.construction != Construction::unspecified && row.construction != record.construction) return false;
    if (row.set_size != record.set_size) return false;
    return !row.flock_size || *row.flock_size == record.flock_size;
}

} // namespace

TableCheck check_table(const ExistenceTable& table, const std::vector<ExistenceRecord>& records) {
    TableCheck check;
    for (const TableRow& row : table.rows) {
        for (std::size_t length : table.columns) {
            ++check.cells_checked;
            const bool expected =
                std::find(row.checked_lengths.begin(), row.checked_lengths.end(), length) != row.checked_lengths.end();
            const bool found = std::any_of(records.begin(), records.end(), [&](const ExistenceRecord& r) {
                return r.verified && r.length == length && row_matches(row, r);
            });
            if (expected != found) check.mismatches.push_back({row.label, length, expected, found});
        }
    }
    for (const ExistenceRecord& record : records) {
        const bool in_columns =
            std::find(table.columns.begin(), table.columns.end(), record.length) != table.columns.end();
        const bool in_rows = std::any_of(table.rows.begin(), table.rows.end(),
                                         [&](const TableRow& row) { return row_matches(row, record); });
        if (!in_columns || !in_rows) {
            check.beyond_table.push_back(record);
        } else if (!record.verified) {
            check.unverified.push_back(record);
        }
    }
    check.matched = check.mismatches.empty() && check.unverified.empty();
    return check;
}

} // namespace mocs
