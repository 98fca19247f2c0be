#include "frobaut/autstruct.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace frobaut;

namespace {

const KernelActionSpec kCase1{15, {{31, {{1, 4}}}}};
const KernelActionSpec kCase2{15, {{31, {{1, 1}, {4, 1}, {11, 1}, {14, 1}}}}};
const KernelActionSpec kCase3{15, {{31, {{1, 1}, {7, 1}, {4, 1}, {13, 1}}}}};
const KernelActionSpec kS3{2, {{3, {{1, 1}}}}};
const KernelActionSpec kA4{3, {{2, {{1, 1}}}}};

}  // namespace

TEST_CASE("component_stabilizer frozen values") {
    auto d1 = validate_and_decompose(kCase1);
    CHECK(component_stabilizer(d1[0]).elements == std::vector<std::int64_t>{1});

    auto d2 = validate_and_decompose(kCase2);
    auto s2 = component_stabilizer(d2[0]);
    CHECK(s2.elements == std::vector<std::int64_t>{1, 4, 11, 14});
    CHECK(s2.order == 4);
    CHECK(s2.invariants == std::vector<std::int64_t>{2, 2});

    auto d3 = validate_and_decompose(kCase3);
    auto s3 = component_stabilizer(d3[0]);
    CHECK(s3.elements == std::vector<std::int64_t>{1, 4, 7, 13});
    CHECK(s3.invariants == std::vector<std::int64_t>{4});
}

TEST_CASE("stabilizer always contains the field automorphisms") {
    for (auto spec : {kCase1, kCase2, kCase3, kS3, kA4,
                      KernelActionSpec{7, {{2, {{1, 1}, {3, 1}}}}},
                      KernelActionSpec{8, {{3, {{1, 1}}}}}}) {
        auto decs = validate_and_decompose(spec);
        for (const auto& d : decs) {
            auto lam = component_stabilizer(d);
            std::set<std::int64_t> s(lam.elements.begin(), lam.elements.end());
            for (auto x : cyclic_subgroup(d.p % d.n, d.n)) CHECK(s.count(x) == 1);
            // closure
            for (auto x : lam.elements)
                for (auto y : lam.elements) CHECK(s.count(x * y % d.n) == 1);
        }
    }
}

TEST_CASE("global_stabilizer intersects the component stabilizers") {
    KernelActionSpec spec{4, {{3, {{1, 1}}}, {5, {{1, 1}, {3, 1}}}}};
    auto decs = validate_and_decompose(spec);
    auto g = global_stabilizer(decs);
    std::set<std::int64_t> expect;
    auto a = component_stabilizer(decs[0]);
    auto b = component_stabilizer(decs[1]);
    std::set<std::int64_t> sb(b.elements.begin(), b.elements.end());
    for (auto x : a.elements)
        if (sb.count(x)) expect.insert(x);
    CHECK(std::set<std::int64_t>(g.elements.begin(), g.elements.end()) == expect);
    CHECK(g.order == static_cast<std::int64_t>(expect.size()));
}

TEST_CASE("fusion frozen values") {
    auto d1 = validate_and_decompose(kCase1);
    auto fus1 = fusion(component_stabilizer(d1[0]), d1[0]);
    CHECK(fus1.ell == 1);
    CHECK(fus1.s == 1);
    CHECK(fus1.field_auto_order == 1);

    auto d2 = validate_and_decompose(kCase2);
    auto fus2 = fusion(component_stabilizer(d2[0]), d2[0]);
    CHECK(fus2.ell == 4);
    CHECK(fus2.s == 1);
    CHECK(fus2.field_auto_order == 1);

    // p=2, n=7, both classes: Lambda = all units, <p> has order 3
    KernelActionSpec both7{7, {{2, {{1, 1}, {3, 1}}}}};
    auto d7 = validate_and_decompose(both7);
    auto lam7 = component_stabilizer(d7[0]);
    CHECK(lam7.order == 6);
    auto fus7 = fusion(lam7, d7[0]);
    CHECK(fus7.field_auto_order == 3);
    CHECK(fus7.ell == 2);
    CHECK(fus7.s == 1);
}

TEST_CASE("fusion bookkeeping identities") {
    for (auto spec : {kCase1, kCase2, kCase3, kS3, kA4,
                      KernelActionSpec{7, {{2, {{1, 1}, {3, 1}}}}},
                      KernelActionSpec{15, {{2, {{1, 2}}}}},
                      KernelActionSpec{8, {{3, {{1, 1}, {5, 2}}}}}}) {
        auto decs = validate_and_decompose(spec);
        auto lam = global_stabilizer(decs);
        for (const auto& d : decs) {
            auto fus = fusion(lam, d);
            CHECK(fus.ell * fus.field_auto_order == lam.order);
            CHECK(fus.s * fus.ell == static_cast<std::int64_t>(d.classes.size()));
            std::int64_t covered = 0;
            for (const auto& orbit : fus.orbits) {
                CHECK(static_cast<std::int64_t>(orbit.size()) == fus.ell);
                covered += orbit.size();
            }
            CHECK(covered == static_cast<std::int64_t>(d.classes.size()));
            CHECK(static_cast<std::int64_t>(fus.e_per_orbit.size()) == fus.s);
        }
    }
}

TEST_CASE("centralizer and normalizer frozen values") {
    auto d1 = validate_and_decompose(kCase1);
    CHECK(centralizer_order(d1[0]) == gl_order(4, 31, 1));
    auto lam1 = global_stabilizer(d1);
    CHECK(normalizer_order(d1, lam1) == gl_order(4, 31, 1));

    auto d2 = validate_and_decompose(kCase2);
    CHECK(centralizer_order(d2[0]) == Nat(30) * 30 * 30 * 30);
    CHECK(normalizer_order(d2, global_stabilizer(d2)) == Nat(3'240'000));

    auto d3 = validate_and_decompose(kCase3);
    CHECK(normalizer_order(d3, global_stabilizer(d3)) == Nat(3'240'000));

    auto ds = validate_and_decompose(kS3);
    CHECK(normalizer_order(ds, global_stabilizer(ds)) == 2);
}

TEST_CASE("aut_order frozen values") {
    CHECK(aut_order(kS3) == 6);                                       // Aut(S_3)
    CHECK(aut_order(kA4) == 24);                                      // Aut(A_4) = S_4
    CHECK(aut_order(KernelActionSpec{5, {{2, {{1, 1}}}}}) == 960);    // C_2^4 : C_5
    CHECK(aut_order(KernelActionSpec{8, {{3, {{1, 1}}}}}) == 144);    // C_3^2 : C_8
    CHECK(aut_order(kCase1) == Nat(31) * 31 * 31 * 31 * gl_order(4, 31, 1));
    CHECK(aut_order(kCase2) == Nat(31) * 31 * 31 * 31 * 3'240'000);
}

TEST_CASE("structure_string frozen values") {
    CHECK(structure_string(analyze(kCase1)) == "C_31^4 : GL(4,31)");
    CHECK(structure_string(analyze(kCase2)) == "C_31^4 : ((GL(1,31)^4) . [C2 x C2])");
    CHECK(structure_string(analyze(kCase3)) == "C_31^4 : ((GL(1,31)^4) . [C4])");
    CHECK(structure_string(analyze(kA4)) == "C_2^2 : GammaL(1,4)");
    CHECK(structure_string(analyze(KernelActionSpec{5, {{2, {{1, 1}}}}})) ==
          "C_2^4 : GammaL(1,16)");
}

TEST_CASE("analyze assembles consistent totals") {
    for (auto spec : {kCase2, kA4, KernelActionSpec{4, {{3, {{1, 1}}}, {5, {{1, 1}}}}}}) {
        auto rep = analyze(spec);
        Nat cent = 1;
        for (const auto& c : rep.components) cent *= c.centralizer_order;
        CHECK(rep.centralizer_order == cent);
        CHECK(rep.normalizer_order == cent * rep.stabilizer.order);
        CHECK(rep.aut_order == rep.kernel_order * rep.normalizer_order);
    }
}

TEST_CASE("prime_power_complement_report") {
    // odd prime power: cyclic complement-side quotient
    auto rep9 = prime_power_complement_report(KernelActionSpec{9, {{2, {{1, 1}}}}});
    CHECK(!rep9.empty());
    auto rep8 = prime_power_complement_report(KernelActionSpec{8, {{3, {{1, 1}}}}});
    CHECK(!rep8.empty());
    auto rep4 = prime_power_complement_report(KernelActionSpec{4, {{3, {{1, 1}}}}});
    CHECK(!rep4.empty());
    CHECK_THROWS_WITH_AS(prime_power_complement_report(kCase1), "not applicable", ValidationError);
}
