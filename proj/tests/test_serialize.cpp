#include <doctest.h>

#include "constacode/analysis.hpp"
#include "constacode/families.hpp"
#include "constacode/serialize.hpp"

using namespace constacode;

TEST_CASE("code JSON round-trips and is byte-stable") {
    const ConstacyclicCode c = cprime(3, 4, 2, 1);
    const std::string j1 = code_to_json(c);
    const ConstacyclicCode back = code_from_json(j1);
    CHECK(back.n() == c.n());
    CHECK(back.k() == c.k());
    CHECK(back.lambda() == c.lambda());
    CHECK(back.generator() == c.generator());
    CHECK(code_to_json(back) == j1);
    CHECK(j1.find("\"field_spec\":\"3^4:2,0,0,2,1\"") != std::string::npos);
}

TEST_CASE("code JSON round-trip over a non-prime alphabet") {
    const ConstacyclicCode c = cfamily(4, 3, 3, 2);
    const ConstacyclicCode back = code_from_json(code_to_json(c));
    CHECK(code_equal(back, c));
    CHECK(back.r() == 3);
}

TEST_CASE("malformed code JSON is rejected") {
    CHECK_THROWS_AS(code_from_json("{"), ParseError);
    CHECK_THROWS_AS(code_from_json("{\"q\":3}"), ParseError);
    CHECK_THROWS_AS(code_from_json("{\"q\":7,\"n\":40,\"lambda_log\":40,"
                                   "\"field_spec\":\"3^4:2,0,0,2,1\",\"generator_coeffs\":[1],\"k\":40}"),
                    ParseError);
}

TEST_CASE("weight distributions serialize sparsely") {
    const WeightDistribution wd = weight_distribution(dual(cprime(5, 2, 2, 1)));
    const std::string j = weights_to_json(wd);
    CHECK(j == "{\"0\":\"1\",\"6\":\"8\",\"8\":\"144\",\"9\":\"144\",\"10\":\"168\",\"11\":\"96\",\"12\":\"64\"}");
    CHECK(weights_from_json(j, 12, 5) == wd);
    CHECK_THROWS_AS(weights_from_json("{\"99\":\"1\"}", 12, 5), ParseError);
}
