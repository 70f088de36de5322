#include "mocs/enumeration.hpp"
#include "mocs/error.hpp"
#include "mocs/verification.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace mocs;

namespace {

std::set<std::size_t> lengths_for(const std::vector<ExistenceRecord>& records, std::size_t M,
                                  std::optional<std::size_t> N = std::nullopt,
                                  std::optional<Construction> c = std::nullopt) {
    std::set<std::size_t> out;
    for (const auto& r : records) {
        if (r.set_size == M && (!N || r.flock_size == *N) && (!c || r.construction == *c) && r.verified) {
            out.insert(r.length);
        }
    }
    return out;
}

} // namespace

TEST(LengthSpectrum, Values) {
    EXPECT_EQ(length_spectrum(6, 1, 5), (std::vector<std::size_t>{34, 36, 40, 48, 64}));
    EXPECT_EQ(length_spectrum(5, 3, 3), (std::vector<std::size_t>{24}));
    for (unsigned m = 2; m <= 10; ++m) EXPECT_EQ(length_spectrum(m, m - 1, m - 1).front(), std::size_t{1} << m);
    EXPECT_THROW(length_spectrum(6, 1, 6), DomainError);
}

TEST(Enumerate, Caps) {
    EXPECT_THROW(enumerate_existence(2, 12, 1000), DomainError);
    EXPECT_THROW(enumerate_existence(3, 4, 1000), DomainError);
    EXPECT_THROW(enumerate_existence(128, 4, 1000), DomainError);
    try {
        enumerate_existence(2, 9, 1000);
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("cap"), std::string::npos);
    }
}

TEST(Enumerate, SmallCases) {
    const auto records = enumerate_existence(2, 3, 1000);
    // m = 2: single part {1}, t = 1 -> (2,4,4) by both constructions.
    // m = 3: t = 1 gives L = 6, t = 2 gives L = 8.
    EXPECT_EQ(lengths_for(records, 2, 4), (std::set<std::size_t>{4, 6, 8}));
    EXPECT_EQ(lengths_for(records, 4, 8), (std::set<std::size_t>{8}));
    for (const auto& r : records) {
        EXPECT_TRUE(r.verified);
        EXPECT_LE(r.set_size, r.flock_size);
        const MocsFamily f = build_witness(2, r);
        EXPECT_EQ(f.set_size(), r.set_size);
        EXPECT_EQ(f.length(), r.length);
    }
}

TEST(Enumerate, SortedAndDeterministic) {
    const auto a = enumerate_existence(4, 5, 1000, {false, ZeroTestMode::exact()});
    const auto b = enumerate_existence(4, 5, 1000, {false, ZeroTestMode::exact()});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(witness_spec(a[i].witness), witness_spec(b[i].witness));
        EXPECT_FALSE(a[i].verified);
        if (i) {
            EXPECT_LT(std::tie(a[i - 1].set_size, a[i - 1].flock_size, a[i - 1].length, a[i - 1].construction),
                      std::tie(a[i].set_size, a[i].flock_size, a[i].length, a[i].construction));
        }
    }
}

TEST(Enumerate, MaxLengthFilter) {
    for (const auto& r : enumerate_existence(2, 6, 20)) EXPECT_LE(r.length, 20u);
}

TEST(Enumerate, TableOneRows) {
    const auto records = enumerate_existence(4, 6, 64);
    const std::set<std::size_t> columns{4, 8, 12, 16, 20, 24, 32, 36, 40, 48, 64};
    auto in_columns = [&](std::set<std::size_t> s) {
        std::set<std::size_t> out;
        for (auto l : s) {
            if (columns.count(l)) out.insert(l);
        }
        return out;
    };
    EXPECT_EQ(in_columns(lengths_for(records, 4)), (std::set<std::size_t>{8, 12, 16, 20, 24, 32, 36, 40, 48, 64}));
    EXPECT_EQ(in_columns(lengths_for(records, 16)), (std::set<std::size_t>{32, 48, 64}));
    const TableCheck check = check_table(existence_table(1), records);
    EXPECT_TRUE(check.matched);
    EXPECT_EQ(check.cells_checked, 33u);
}

TEST(Enumerate, CorollaryPairsAtEveryEvenLength) {
    const auto records = enumerate_existence(2, 6, 40);
    EXPECT_EQ(lengths_for(records, 2, 4, Construction::corollary1),
              (std::set<std::size_t>{4, 6, 8, 10, 12, 16, 18, 20, 24, 32, 34, 36, 40}));
}

TEST(TableCheck, DetectsMissingAndExtraCells) {
    auto records = enumerate_existence(2, 6, 40);
    const ExistenceTable& table = existence_table(2);
    EXPECT_TRUE(check_table(table, records).matched);

    auto missing = records;
    missing.erase(std::remove_if(missing.begin(), missing.end(),
                                 [](const ExistenceRecord& r) {
                                     return r.set_size == 2 && r.flock_size == 64 && r.length == 34;
                                 }),
                  missing.end());
    const TableCheck m = check_table(table, missing);
    EXPECT_FALSE(m.matched);
    ASSERT_EQ(m.mismatches.size(), 1u);
    EXPECT_EQ(m.mismatches[0].length, 34u);
    EXPECT_TRUE(m.mismatches[0].expected);
    EXPECT_FALSE(m.mismatches[0].found);

    auto unverified = records;
    for (auto& r : unverified) {
        if (r.set_size == 4 && r.flock_size == 8 && r.length == 8) r.verified = false;
    }
    const TableCheck u = check_table(table, unverified);
    EXPECT_FALSE(u.matched);
    EXPECT_FALSE(u.unverified.empty());

    ExistenceTable stricter = table;
    stricter.rows[0].checked_lengths = {4, 8};
    EXPECT_FALSE(check_table(stricter, records).matched);
}

TEST(TableCheck, UnknownTable) { EXPECT_THROW(existence_table(3), DomainError); }

TEST(WitnessSpec, Format) {
    EXPECT_EQ(witness_spec(PartitionPlan(6, {{1, 2}, {3, 4, 5}}, 3)), "m=6/t=3/parts=1,2;3,4,5");
}
