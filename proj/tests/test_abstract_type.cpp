#include <gtest/gtest.h>

#include "rvec/abstract_type.hpp"

using namespace rvec;

TEST(AbsSize, JoinIsPointwise) {
  AbsType a = AbsType::vector(Mode::Numeric, AbsSize::known(3));
  AbsType b = AbsType::vector(Mode::Numeric, AbsSize::known(3));
  AbsType c = AbsType::vector(Mode::Numeric, AbsSize::known(4));
  EXPECT_EQ(abs_join(a, b).size, AbsSize::known(3));
  EXPECT_EQ(abs_join(a, c).size, AbsSize::unknown());
  EXPECT_EQ(abs_join(a, c).mode, Mode::Numeric);
  AbsType d = AbsType::vector(Mode::Logical, AbsSize::known(3));
  EXPECT_EQ(abs_join(a, d).mode, std::nullopt);
}

TEST(AbsSize, JoinWithBottomIsIdentity) {
  AbsType a = abstract_value(num_vector({1, 2}));
  AbsType j = abs_join(AbsType::bottom(), a);
  EXPECT_EQ(j.size, AbsSize::known(2));
  EXPECT_TRUE(abs_join(a, AbsType::top()).is_top());
}

TEST(Sign, Classification) {
  EXPECT_EQ(sign_of({1.0, 2.0, 0.0}), SignInfo::AllNonNeg);
  EXPECT_EQ(sign_of({-1.0, -0.5}), SignInfo::AllNonPos);  // -0.5 truncates to 0
  EXPECT_EQ(sign_of({0.9, 0.0}), SignInfo::AllNonNeg);
  EXPECT_EQ(sign_of({-1.0, -3.0}), SignInfo::AllNonPos);
  EXPECT_EQ(sign_of({-1.0, 1.0}), SignInfo::Mixed);
  EXPECT_EQ(sign_of({na(), -1.0}), SignInfo::AllNonPos);
  EXPECT_EQ(sign_join(SignInfo::AllNonNeg, SignInfo::AllNonPos), SignInfo::Unknown);
  EXPECT_EQ(sign_join(SignInfo::AllNonNeg, SignInfo::AllNonNeg), SignInfo::AllNonNeg);
}

TEST(Abstraction, ExactRoundTrip) {
  for (const RValue& v : {num_vector({1, 2}), lgl_vector({true}), chr_vector({"a", "b"}), RValue{Null{}},
                          make_array(Mode::Numeric, {2, 1}, {1.0, 2.0})}) {
    AbsType t = abstract_value(v);
    EXPECT_TRUE(t.is_exact());
    auto back = concrete_value(t);
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(values_identical(*back, v));
  }
  EXPECT_TRUE(abstract_value(RValue{Closure{}}).is_top());
}

TEST(Abstraction, ForgettingContents) {
  AbsType t = without_contents(abstract_value(num_vector({1, 2, 3})));
  EXPECT_FALSE(t.is_exact());
  EXPECT_EQ(t.size, AbsSize::known(3));
  EXPECT_FALSE(concrete_value(t).has_value());
}

TEST(Render, TypeStrings) {
  EXPECT_EQ(to_string(abstract_value(num_vector({1, 2, 3}))), "vector<numeric>[3]");
  EXPECT_EQ(to_string(abstract_value(make_array(Mode::Numeric, {2, 2}, std::vector<Scalar>(4, 1.0)))),
            "array<numeric>[2x2]");
  EXPECT_EQ(to_string(AbsType::null()), "NULL");
  EXPECT_EQ(to_string(AbsType::top()), "top");
  EXPECT_EQ(to_string(AbsType::bottom()), "error");
  EXPECT_EQ(to_string(AbsType::vector(Mode::Logical, AbsSize::unknown())), "vector<logical>[?]");
}

TEST(AbsEnvTest, MirrorsRuntimeEnv) {
  auto g = std::make_shared<AbsEnv>();
  g->assign("x", AbsType::null());
  auto f = std::make_shared<AbsEnv>(g);
  f->bind_missing("m");
  AbsType out;
  EXPECT_EQ(f->lookup("x", &out), AbsLookup::Found);
  EXPECT_TRUE(out.is_null());
  EXPECT_EQ(f->lookup("m", &out), AbsLookup::Missing);
  EXPECT_EQ(f->lookup("q", &out), AbsLookup::Unbound);
}
