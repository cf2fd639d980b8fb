#include <catch2/catch_amalgamated.hpp>

#include <hookcal/report.hpp>

#include <string>
#include <vector>

using namespace hookcal;

TEST_CASE("identity names match the CLI tokens") {
    CHECK(identity_name(IdentityId::eq1) == "eq1");
    CHECK(identity_name(IdentityId::eq2) == "eq2");
    CHECK(identity_name(IdentityId::eq3_vs_closed_form) == "eq3");
    CHECK(identity_name(IdentityId::split_relation) == "split");
    CHECK(identity_name(IdentityId::eq4) == "eq4");
    CHECK(identity_name(IdentityId::eq5) == "eq5");
    CHECK(identity_name(IdentityId::f_equals_rooted_count) == "link");
}

TEST_CASE("json serialization is flat with decimal strings") {
    const auto r = VerificationReport::make(
        IdentityId::eq1, 3, Rational(16), make_rational(BigInt(3), BigInt(2)),
        "closed", "enumerated", 5, 7);
    const auto j = to_json(r);
    CHECK(j["identity"] == "eq1");
    CHECK(j["n"] == 3);
    CHECK(j["lhs"] == "16");
    CHECK(j["rhs"] == "3/2");
    CHECK(j["method_lhs"] == "closed");
    CHECK(j["method_rhs"] == "enumerated");
    CHECK(j["object_count"] == 5);
    CHECK(j["verified"] == false);
    CHECK(j["elapsed_ms"] == 7);

    // key order is fixed for byte-stable output
    std::vector<std::string> keys;
    for (const auto& item : j.items()) {
        keys.push_back(item.key());
    }
    CHECK(keys == std::vector<std::string>{"identity", "n", "lhs", "rhs",
                                           "method_lhs", "method_rhs",
                                           "object_count", "verified",
                                           "elapsed_ms"});
}

TEST_CASE("report ordering: identity, then n, then method") {
    auto rep = [](IdentityId id, int n, const std::string& method) {
        return VerificationReport::make(id, n, Rational(1), Rational(1), "m",
                                        method, 0, 0);
    };
    CHECK(report_order_less(rep(IdentityId::eq1, 9, "z"),
                            rep(IdentityId::eq2, 1, "a")));
    CHECK(report_order_less(rep(IdentityId::eq4, 2, "a"),
                            rep(IdentityId::eq4, 3, "a")));
    CHECK(report_order_less(rep(IdentityId::eq4, 2, "closed"),
                            rep(IdentityId::eq4, 2, "exhaustive")));
    CHECK_FALSE(report_order_less(rep(IdentityId::eq5, 1, "a"),
                                  rep(IdentityId::eq4, 9, "a")));
}

TEST_CASE("csv rows are comma-safe") {
    const auto r = VerificationReport::make(IdentityId::split_relation, 2,
                                            make_rational(BigInt(9), BigInt(4)),
                                            make_rational(BigInt(9), BigInt(4)),
                                            "factorial form", "binomial form",
                                            0, 3);
    CHECK(to_csv_row(r) ==
          "split,2,9/4,9/4,factorial form,binomial form,0,true,3");
    CHECK(report_csv_header() ==
          "identity,n,lhs,rhs,method_lhs,method_rhs,object_count,verified,"
          "elapsed_ms");
}

TEST_CASE("text lines carry both sides even when equal") {
    const auto r = VerificationReport::make(IdentityId::eq2, 2, Rational(9),
                                            Rational(9), "closed form",
                                            "enumeration", 2, 0);
    const auto line = to_text_line(r);
    CHECK(line.find("lhs=9") != std::string::npos);
    CHECK(line.find("rhs=9") != std::string::npos);
    CHECK(line.find("[ ok ]") != std::string::npos);
}
