#include "../random_plans.hpp"
#include "../reference_data.hpp"

#include "mocs/enumeration.hpp"
#include "mocs/error.hpp"
#include "mocs/family_io.hpp"
#include "mocs/verification.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

using namespace mocs;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (condition) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && elapsed >= limit_seconds) {
        o.require(false, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s");
    }
    std::printf("[%s] %d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, elapsed, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

PartitionPlan two_part_plan(unsigned t) { return PartitionPlan(6, {{1, 2}, {3, 4, 5}}, t); }
PartitionPlan three_part_plan() { return PartitionPlan(6, {{1}, {4, 2}, {3, 5}}, 4); }

std::string shape(const MocsFamily& f) {
    std::ostringstream s;
    s << '(' << f.set_size() << ',' << f.flock_size() << ',' << f.length() << ')';
    return s.str();
}

std::vector<MocsFamily> known_families() {
    return {build_mocs_theorem2(4, two_part_plan(3)), build_mocs_theorem2(4, two_part_plan(4)),
            build_mocs_corollary1(4, two_part_plan(4)), build_mocs_corollary1(2, three_part_plan())};
}

std::vector<ExistenceRecord> enumerated;

} // namespace

int main() {
    criterion(1, "digit-exact reproduction of the (8,40)-GCS", 0.1, [] {
        Outcome o;
        const ComplementarySet set = build_gcs_theorem1(4, two_part_plan(3));
        o.require(set.flock_size() == 8 && set.length() == 40, "wrong shape");
        for (std::size_t n = 0; n < std::min<std::size_t>(8, set.flock_size()); ++n) {
            o.require(format_sequence(set[n]) == reference::kGcs840[n], "member " + std::to_string(n) + " differs");
        }
        return o;
    });

    criterion(2, "GCS oracle for the (8,40), (8,36) and (8,33) sets", 1.0, [] {
        Outcome o;
        const VerificationReport r = verify_gcs(build_gcs_theorem1(4, two_part_plan(3)), ZeroTestMode::exact());
        o.require(r.passed, "(8,40) failed");
        o.require(r.peak == 320, "peak " + std::to_string(r.peak));
        o.require(r.values_checked == 78, "expected 78 nonzero shifts checked");
        for (unsigned t : {2u, 0u}) {
            const ComplementarySet s = build_gcs_theorem1(4, two_part_plan(t));
            const std::size_t expected = t == 2 ? 36 : 33;
            o.require(s.flock_size() == 8 && s.length() == expected, "t=" + std::to_string(t) + " wrong shape");
            const VerificationReport rt = verify_gcs(s, ZeroTestMode::exact());
            o.require(rt.passed && rt.peak == static_cast<std::int64_t>(8 * expected), "t=" + std::to_string(t) + " failed");
        }
        return o;
    });

    criterion(3, "MOCS oracle for (2,8,40), (2,8,48), (4,8,48), (8,16,48)", 5.0, [] {
        Outcome o;
        const char* expected[] = {"(2,8,40)", "(2,8,48)", "(4,8,48)", "(8,16,48)"};
        const auto families = known_families();
        for (std::size_t i = 0; i < families.size(); ++i) {
            o.require(shape(families[i]) == expected[i], shape(families[i]) + " != " + expected[i]);
            const VerificationReport r = verify_mocs(families[i], ZeroTestMode::exact());
            o.require(r.passed, std::string(expected[i]) + " failed verification");
            const std::size_t M = families[i].set_size(), L = families[i].length();
            o.require(r.values_checked == M * 2 * (L - 1) + M * (M - 1) / 2 * (2 * L - 1),
                      std::string(expected[i]) + " did not check every shift");
        }
        return o;
    });

    criterion(4, "weight lemma: member differences have weight L/2", 0, [] {
        Outcome o;
        for (const MocsFamily& f : known_families()) {
            o.require(check_weight_lemma(f), shape(f) + " violates the weight lemma");
        }
        return o;
    });

    criterion(5, "table reproduction at q in {2,4}, m <= 7 with verified witnesses", 60.0, [] {
        Outcome o;
        for (Symbol q : {2u, 4u}) {
            const auto records = enumerate_existence(q, 7, std::numeric_limits<std::size_t>::max());
            for (const ExistenceRecord& r : records) {
                o.require(r.verified, "q=" + std::to_string(q) + " witness " + witness_spec(r.witness) + " did not verify");
            }
            for (unsigned id : {1u, 2u}) {
                const TableCheck check = check_table(existence_table(id), records);
                o.require(check.matched, "q=" + std::to_string(q) + " table " + std::to_string(id) + ": " +
                                             std::to_string(check.mismatches.size()) + " mismatched cells");
            }
            enumerated.insert(enumerated.end(), records.begin(), records.end());
        }
        return o;
    });

    criterion(6, "ratio claims: corollary M/N = 1/2, M <= N, t = m-1 gives 2^m", 0, [] {
        Outcome o;
        if (enumerated.empty()) {
            for (Symbol q : {2u, 4u}) {
                const auto r = enumerate_existence(q, 7, std::numeric_limits<std::size_t>::max(), {false, {}});
                enumerated.insert(enumerated.end(), r.begin(), r.end());
            }
        }
        std::vector<const ExistenceRecord*> all;
        for (const auto& r : enumerated) all.push_back(&r);
        o.require(!all.empty(), "no records");
        for (const ExistenceRecord* r : all) {
            const std::string tag = witness_spec(r->witness);
            o.require(r->set_size <= r->flock_size, tag + " has M > N");
            if (r->construction == Construction::corollary1) o.require(2 * r->set_size == r->flock_size, tag + " M/N != 1/2");
            if (r->witness.t() == r->witness.m() - 1) o.require(r->length == (std::size_t{1} << r->witness.m()), tag);
        }
        for (const MocsFamily& f : known_families()) {
            o.require(f.set_size() <= f.flock_size(), shape(f) + " has M > N");
            if (f.provenance()->construction == Construction::corollary1) {
                o.require(2 * f.set_size() == f.flock_size(), shape(f) + " M/N != 1/2");
            }
        }
        return o;
    });

    criterion(7, "property suite: 100 random families, mode agreement, 20 mutations", 0, [] {
        Outcome o;
        testing_support::PlanGenerator gen(20240601);
        std::vector<MocsFamily> passing;
        std::size_t disagreements = 0, values = 0;
        for (int i = 0; i < 100; ++i) {
            const auto inst = gen.next();
            const MocsFamily f = testing_support::build(inst);
            const VerificationReport r = verify_mocs(f, ZeroTestMode::exact());
            disagreements += r.mode_disagreements;
            values += r.values_checked;
            o.require(r.passed, "q=" + std::to_string(inst.q) + " " + witness_spec(inst.plan) + " " +
                                    to_string(inst.construction) + " failed");
            if (r.passed) passing.push_back(f);
        }
        o.require(disagreements == 0, std::to_string(disagreements) + " exact/float disagreements");
        std::mt19937& rng = gen.rng();
        int detected = 0;
        for (int trial = 0; trial < 20 && !passing.empty(); ++trial) {
            const MocsFamily& f = passing[rng() % passing.size()];
            std::vector<ComplementarySet> sets = f.sets();
            const std::size_t p = rng() % f.set_size(), n = rng() % f.flock_size(), k = rng() % f.length();
            std::vector<QarySequence> members = sets[p].members();
            std::vector<Symbol> v(members[n].values().begin(), members[n].values().end());
            v[k] = static_cast<Symbol>((v[k] + 1 + rng() % (f.q() - 1)) % f.q());
            members[n] = QarySequence(f.q(), std::move(v));
            sets[p] = ComplementarySet(std::move(members));
            if (!verify_mocs(MocsFamily(std::move(sets)), ZeroTestMode::exact()).passed) ++detected;
        }
        o.require(detected == 20, std::to_string(detected) + "/20 mutations detected");
        o.detail = o.ok ? std::to_string(values) + " correlation values checked" : o.detail;
        return o;
    });

    criterion(8, "negative path: prefix violations rejected with explanation", 0, [] {
        Outcome o;
        const PartitionPlan bad(6, {{1, 2}, {4, 3, 5}}, 3);
        const std::function<void()> builders[] = {
            [&] { build_gcs_theorem1(4, bad); },
            [&] { build_mocs_theorem2(4, bad); },
            [&] { build_mocs_corollary1(4, bad); },
        };
        for (const auto& build : builders) {
            try {
                build();
                o.require(false, "a builder accepted the violating plan");
            } catch (const PreconditionError& e) {
                o.require(e.found() == std::vector<unsigned>{1, 2, 4}, "wrong found set");
                o.require(e.expected() == std::vector<unsigned>{1, 2, 3}, "wrong expected set");
                o.require(std::string(e.what()).find("{1,2,4} != {1,2,3}") != std::string::npos, e.what());
            }
        }
        o.require(!check_prefix_condition(bad), "prefix check accepted the violating plan");
        return o;
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
