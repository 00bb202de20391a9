#include <gtest/gtest.h>

#include <cmath>

#include "rvec/values.hpp"

using namespace rvec;

TEST(Values, ModeNames) {
  EXPECT_EQ(mode_of(num_vector({1})), "numeric");
  EXPECT_EQ(mode_of(lgl_vector({true})), "logical");
  EXPECT_EQ(mode_of(chr_vector({"foo"})), "character");
  EXPECT_EQ(mode_of(RValue{Null{}}), "NULL");
  EXPECT_EQ(mode_of(RValue{Closure{}}), "function");
}

TEST(Values, Lengths) {
  EXPECT_EQ(length_of(RValue{Null{}}), 0u);
  EXPECT_EQ(length_of(num_vector({1, 2, 3})), 3u);
  EXPECT_EQ(length_of(make_array(Mode::Numeric, {2, 3}, std::vector<Scalar>(6, 1.0))), 6u);
  EXPECT_EQ(length_of(RValue{Closure{}}), 1u);
}

TEST(Values, ModeLattice) {
  EXPECT_EQ(mode_lub(Mode::Logical, Mode::Numeric), Mode::Numeric);
  EXPECT_EQ(mode_lub(Mode::Numeric, Mode::Character), Mode::Character);
  EXPECT_EQ(mode_lub(Mode::Logical, Mode::Logical), Mode::Logical);
  EXPECT_EQ(mode_lub(Mode::Character, Mode::Logical), Mode::Character);
}

TEST(Values, InvariantsAreEnforced) {
  EXPECT_THROW(check_invariants(RValue{Vector{Mode::Numeric, {Scalar{true}}}}), std::logic_error);
  EXPECT_THROW(check_invariants(RValue{Array{Mode::Numeric, {2, 2}, {Scalar{1.0}}}}), std::logic_error);
  EXPECT_THROW(check_invariants(RValue{Array{Mode::Numeric, {}, {}}}), std::logic_error);
  EXPECT_NO_THROW(check_invariants(make_vector(Mode::Numeric, {na(), Scalar{1.0}})));
  EXPECT_NO_THROW(check_invariants(make_array(Mode::Logical, {0, 3}, {})));
}

TEST(Values, ScalarCoercion) {
  EXPECT_EQ(std::get<double>(scalar_to_numeric(Scalar{true})), 1.0);
  EXPECT_EQ(std::get<double>(scalar_to_numeric(Scalar{false})), 0.0);
  EXPECT_EQ(std::get<bool>(scalar_to_logical(Scalar{-2.0})), true);
  EXPECT_EQ(std::get<bool>(scalar_to_logical(Scalar{0.0})), false);
  EXPECT_TRUE(is_na(scalar_to_logical(Scalar{std::nan("")})));
  EXPECT_TRUE(is_na(scalar_to_numeric(na())));
  EXPECT_EQ(std::get<std::string>(scalar_to_character(Scalar{true})), "TRUE");
  EXPECT_EQ(std::get<std::string>(scalar_to_character(Scalar{1.0 / 3.0})), "0.333333333333333");
  EXPECT_THROW(scalar_to_numeric(Scalar{std::string("a")}), RError);
}

TEST(Values, ContainerCoercionKeepsDims) {
  RValue a = make_array(Mode::Logical, {1, 2}, {Scalar{true}, na()});
  RValue n = coerce_to_numeric(a);
  ASSERT_TRUE(std::holds_alternative<Array>(n));
  EXPECT_EQ(std::get<Array>(n).dims, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(std::get<Array>(n).mode, Mode::Numeric);
  EXPECT_TRUE(is_na(std::get<Array>(n).elems[1]));
}

TEST(Values, Identity) {
  EXPECT_TRUE(values_identical(num_vector({1, 2}), num_vector({1, 2})));
  EXPECT_FALSE(values_identical(num_vector({1, 2}), num_vector({2, 1})));
  EXPECT_FALSE(values_identical(num_vector({1}), lgl_vector({true})));
  EXPECT_FALSE(values_identical(num_vector({1, 2, 3, 4}),
                                make_array(Mode::Numeric, {2, 2}, {1.0, 2.0, 3.0, 4.0})));
  EXPECT_TRUE(values_identical(RValue{Null{}}, RValue{Null{}}));
}

TEST(Values, Builtins) {
  EXPECT_EQ(builtin_from_name("c"), Builtin::Combine);
  EXPECT_EQ(builtin_from_name("matrix"), Builtin::Matrix);
  EXPECT_EQ(builtin_from_name("sum"), std::nullopt);
  EXPECT_EQ(builtin_name(Builtin::Length), "length");
}

TEST(Env, LexicalLookup) {
  auto global = std::make_shared<Env>();
  global->assign("x", num_vector({1}));
  auto inner = std::make_shared<Env>(global);
  inner->bind_missing("y");
  const RValue* v = nullptr;
  EXPECT_EQ(inner->lookup("x", &v), LookupStatus::Found);
  EXPECT_EQ(inner->lookup("y", &v), LookupStatus::Missing);
  EXPECT_EQ(inner->lookup("z", &v), LookupStatus::Unbound);
  inner->assign("x", num_vector({2}));
  ASSERT_EQ(global->lookup("x", &v), LookupStatus::Found);
  EXPECT_TRUE(values_identical(*v, num_vector({1})));
  inner->assign("y", num_vector({3}));
  EXPECT_EQ(inner->lookup("y", &v), LookupStatus::Found);
}
