#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trig_enclose/remainder.hpp"
#include "trig_enclose/report_io.hpp"

using namespace trig_enclose;

TEST_CASE("digit counts cover binary round trips") {
    CHECK(decimal_digits_for(64) == 21);
    CHECK(decimal_digits_for(128) == 40);
    CHECK(decimal_digits_for(256) == 79);
}

TEST_CASE("serialized numbers round-trip bit-exactly at the emitted precision") {
    for (Prec prec : {64L, 128L, 256L}) {
        for (const char* seed :
             {"3.141592653589793", "-0.00012207031", "1e-40", "123456789.000001"}) {
            BigFloat x = BigFloat::from_string(seed, prec);
            std::string s1 = fmt_number(x, prec);
            BigFloat y = BigFloat::from_string(s1, prec);
            CHECK(x == y); // parse recovers the exact binary value
            CHECK(fmt_number(y, prec) == s1);
        }
    }
}

TEST_CASE("eval JSON carries every numeric field faithfully") {
    const Prec prec = 256;
    RemainderEval ev =
        eval_with_enclosure(FunctionId::tan, 3, BigFloat::from_double(1.0, prec), prec);
    nlohmann::json j = eval_to_json(ev, prec);

    CHECK(j["function"] == "tan");
    CHECK(j["order"] == 3);
    CHECK(j["terms_used"].get<unsigned long>() == ev.terms_used);

    BigFloat lo = BigFloat::from_string(j["value"]["lo"].get<std::string>(), prec);
    BigFloat hi = BigFloat::from_string(j["value"]["hi"].get<std::string>(), prec);
    CHECK(lo == BigFloat::from_string(fmt_number(ev.value.lo(), prec), prec));
    CHECK(hi == BigFloat::from_string(fmt_number(ev.value.hi(), prec), prec));
    CHECK(lo <= hi);

    // round-trip: re-serialize the parsed JSON and compare
    nlohmann::json j2 = nlohmann::json::parse(j.dump());
    CHECK(j2["value"]["lo"] == j["value"]["lo"]);
    CHECK(j2["partial_sum"] == j["partial_sum"]);
}

TEST_CASE("report JSON has the stable schema fields") {
    InequalityReport rep;
    rep.id = "demo";
    rep.domain = "(0, pi/2)";
    rep.grid_points = 11;
    rep.precision_bits = 128;
    rep.verdict = Verdict::certified;
    nlohmann::json j = report_to_json(rep, 128);
    for (const char* key : {"id", "domain", "guard_rel", "grid_points", "precision_bits",
                            "min_margin", "argmin", "verdict", "unresolved_points"}) {
        CAPTURE(key);
        CHECK(j.contains(key));
    }
    CHECK(j["verdict"] == "certified");
}
