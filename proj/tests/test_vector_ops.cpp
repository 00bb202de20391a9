#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "rvec/vector_ops.hpp"

using namespace rvec;

namespace {

RValue seq(std::size_t n) {
  std::vector<Scalar> xs;
  for (std::size_t i = 0; i < n; ++i) xs.emplace_back(static_cast<double>(i + 1));
  return make_vector(Mode::Numeric, std::move(xs));
}

Code code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const RError& e) {
    return e.condition().code;
  }
  ADD_FAILURE() << "no RError thrown";
  return Code::E_UNBOUND;
}

double num(const RValue& v, std::size_t i) { return std::get<double>(elements(v).at(i)); }

}  // namespace

TEST(Recycle, CyclicExtension) {
  std::vector<Scalar> xs{1.0, 2.0};
  RecycleResult r = recycle(xs, 5);
  ASSERT_EQ(r.elems.size(), 5u);
  EXPECT_EQ(std::get<double>(r.elems[4]), 1.0);
  EXPECT_TRUE(r.was_nonmultiple);
  EXPECT_FALSE(recycle(xs, 4).was_nonmultiple);
  EXPECT_TRUE(recycle(xs, 0).elems.empty());
  EXPECT_THROW(recycle({}, 2), std::logic_error);
}

TEST(Combine, ConcatenatesAndWidens) {
  std::vector<RValue> args{lgl_vector({true}), num_vector({2.5}), RValue{Null{}}};
  RValue r = combine(args);
  EXPECT_EQ(atomic_mode(r), Mode::Numeric);
  EXPECT_EQ(num(r, 0), 1.0);
  EXPECT_EQ(num(r, 1), 2.5);

  std::vector<RValue> chars{num_vector({1}), chr_vector({"a"})};
  EXPECT_EQ(std::get<std::string>(elements(combine(chars)).at(0)), "1");
}

TEST(Combine, EmptyIsNull) {
  EXPECT_TRUE(is_null(combine({})));
  std::vector<RValue> nulls{RValue{Null{}}, RValue{Null{}}};
  EXPECT_TRUE(is_null(combine(nulls)));
}

TEST(Combine, FlattensArrays) {
  std::vector<RValue> args{make_array(Mode::Numeric, {2, 2}, {1.0, 2.0, 3.0, 4.0})};
  RValue r = combine(args);
  EXPECT_TRUE(std::holds_alternative<Vector>(r));
  EXPECT_EQ(length_of(r), 4u);
}

TEST(Combine, LengthIsSumOfLengths) {
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      std::vector<RValue> args{a ? seq(a) : RValue{Null{}}, b ? seq(b) : RValue{Null{}}};
      EXPECT_EQ(length_of(combine(args)), a + b);
    }
  }
}

TEST(Combine, RejectsClosures) {
  std::vector<RValue> args{RValue{Closure{}}};
  EXPECT_EQ(code_of([&] { combine(args); }), Code::E_BADCOMBINE);
}

TEST(Arith, LengthAndWarningLaw) {
  for (BinaryOp op : {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div}) {
    for (std::size_t a = 0; a <= 6; ++a) {
      for (std::size_t b = 0; b <= 6; ++b) {
        Warnings w;
        RValue r = elementwise_arith(op, seq(a), seq(b), w);
        std::size_t expected = (a == 0 || b == 0) ? 0 : std::max(a, b);
        EXPECT_EQ(length_of(r), expected);
        bool warn = a > 0 && b > 0 && std::max(a, b) % std::min(a, b) != 0;
        EXPECT_EQ(w.size(), warn ? 1u : 0u) << a << "," << b;
      }
    }
  }
}

TEST(Arith, CoercesLogicalsAndPropagatesNA) {
  Warnings w;
  RValue r = elementwise_arith(BinaryOp::Add, num_vector({1, 1}), make_vector(Mode::Logical, {Scalar{true}, na()}), w);
  EXPECT_EQ(num(r, 0), 2.0);
  EXPECT_TRUE(is_na(elements(r)[1]));
  RValue d = elementwise_arith(BinaryOp::Div, num_vector({1, -1, 0}), num_vector({0}), w);
  EXPECT_TRUE(std::isinf(num(d, 0)) && num(d, 0) > 0);
  EXPECT_TRUE(std::isinf(num(d, 1)) && num(d, 1) < 0);
  EXPECT_TRUE(std::isnan(num(d, 2)));
  EXPECT_TRUE(w.empty());
}

TEST(Arith, Errors) {
  Warnings w;
  EXPECT_EQ(code_of([&] { elementwise_arith(BinaryOp::Add, num_vector({1}), chr_vector({"R"}), w); }),
            Code::E_NONNUMERIC);
  EXPECT_EQ(code_of([&] { elementwise_arith(BinaryOp::Mul, RValue{Closure{}}, num_vector({1}), w); }),
            Code::E_NONNUMERIC);
}

TEST(Arith, ArrayOperands) {
  Warnings w;
  RValue a = make_array(Mode::Numeric, {2, 2}, {1.0, 2.0, 3.0, 4.0});
  RValue r = elementwise_arith(BinaryOp::Mul, a, num_vector({10}), w);
  ASSERT_TRUE(std::holds_alternative<Array>(r));
  EXPECT_EQ(num(r, 3), 40.0);
  RValue b = make_array(Mode::Numeric, {4, 1}, {1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(code_of([&] { elementwise_arith(BinaryOp::Add, a, b, w); }), Code::E_DIMS_MISMATCH);
  EXPECT_EQ(code_of([&] { elementwise_arith(BinaryOp::Add, a, seq(5), w); }), Code::E_DIMS_MISMATCH);
}

TEST(Logical, KleeneTruthTables) {
  Warnings w;
  RValue lhs = make_vector(Mode::Logical, {Scalar{true}, Scalar{true}, Scalar{true}, Scalar{false}, Scalar{false},
                                           Scalar{false}, na(), na(), na()});
  RValue rhs = make_vector(Mode::Logical, {Scalar{true}, Scalar{false}, na(), Scalar{true}, Scalar{false}, na(),
                                           Scalar{true}, Scalar{false}, na()});
  auto render = [](const RValue& v) {
    std::string s;
    for (const auto& x : elements(v)) s += is_na(x) ? 'N' : (std::get<bool>(x) ? 'T' : 'F');
    return s;
  };
  EXPECT_EQ(render(elementwise_logical(BinaryOp::And, lhs, rhs, w)), "TFNFFFNFN");
  EXPECT_EQ(render(elementwise_logical(BinaryOp::Or, lhs, rhs, w)), "TTTTFNTNN");
}

TEST(Logical, NumbersAreTruthy) {
  Warnings w;
  RValue r = elementwise_logical(BinaryOp::And, lgl_vector({true, true}), num_vector({0, -2}), w);
  EXPECT_FALSE(std::get<bool>(elements(r)[0]));
  EXPECT_TRUE(std::get<bool>(elements(r)[1]));
  EXPECT_EQ(code_of([&] { elementwise_logical(BinaryOp::And, chr_vector({"a"}), lgl_vector({true}), w); }),
            Code::E_NONLOGICAL);
}

TEST(Comparison, NumericAndCharacter) {
  Warnings w;
  RValue r = elementwise_logical(BinaryOp::Lt, num_vector({1, 2, 3}), num_vector({2}), w);
  EXPECT_TRUE(std::get<bool>(elements(r)[0]));
  EXPECT_FALSE(std::get<bool>(elements(r)[1]));
  RValue s = elementwise_logical(BinaryOp::Eq, chr_vector({"1", "b"}), num_vector({1}), w);
  EXPECT_TRUE(std::get<bool>(elements(s)[0]));
  EXPECT_FALSE(std::get<bool>(elements(s)[1]));
  RValue n = elementwise_logical(BinaryOp::Eq, RValue{Null{}}, RValue{Null{}}, w);
  EXPECT_EQ(length_of(n), 0u);
  EXPECT_EQ(atomic_mode(n), Mode::Logical);
}

TEST(Construct, ArrayRecyclesData) {
  RValue a = construct_array(num_vector({3, 3}), num_vector({1, 2}));
  const auto& arr = std::get<Array>(a);
  EXPECT_EQ(arr.dims, (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(num(a, 2), 1.0);
  EXPECT_EQ(num(a, 3), 2.0);
}

TEST(Construct, ArrayErrors) {
  EXPECT_EQ(code_of([] { construct_array(RValue{Null{}}, RValue{Null{}}); }), Code::E_NULLDATA);
  EXPECT_EQ(code_of([] { construct_array(RValue{Null{}}, num_vector({1})); }), Code::E_BADDIMS);
  EXPECT_EQ(code_of([] { construct_array(num_vector({2, -1}), num_vector({1})); }), Code::E_BADDIMS);
  EXPECT_EQ(code_of([] { construct_array(make_vector(Mode::Numeric, {na()}), num_vector({1})); }), Code::E_BADDIMS);
  EXPECT_EQ(code_of([] { construct_array(num_vector({1e5, 1e5}), num_vector({1})); }), Code::E_BADDIMS);
}

TEST(Construct, ArrayTruncatesDims) {
  RValue a = construct_array(num_vector({2.9, 1}), num_vector({1}));
  EXPECT_EQ(std::get<Array>(a).dims, (std::vector<std::size_t>{2, 1}));
}

TEST(Construct, Matrix) {
  Warnings w;
  RValue m = construct_matrix(num_vector({1, 4}), num_vector({1, 2, 3, 4}), w);
  EXPECT_EQ(std::get<Array>(m).dims, (std::vector<std::size_t>{1, 4}));
  EXPECT_TRUE(w.empty());
  RValue t = construct_matrix(num_vector({1, 2, 9}), num_vector({1, 2}), w);
  EXPECT_EQ(std::get<Array>(t).dims, (std::vector<std::size_t>{1, 2}));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].code, Code::W_MATRIX_TRUNC);
  EXPECT_EQ(code_of([&] { construct_matrix(num_vector({2}), num_vector({1, 2}), w); }), Code::E_BADDIMS);
}

TEST(IndexGet, PositiveSubscripts) {
  RValue r = index_get(chr_vector({"a", "b", "c"}), num_vector({3, 2, 1}));
  EXPECT_EQ(std::get<std::string>(elements(r)[0]), "c");
  RValue oob = index_get(seq(3), num_vector({5, 1}));
  EXPECT_TRUE(is_na(elements(oob)[0]));
  EXPECT_EQ(length_of(index_get(seq(3), num_vector({0, 2, 0}))), 1u);
  EXPECT_EQ(num(index_get(seq(3), num_vector({2.9})), 0), 2.0);
}

TEST(IndexGet, NegativeSubscriptsAreASet) {
  RValue r = index_get(chr_vector({"a", "b", "c"}), num_vector({-1, -3, -1, -7}));
  ASSERT_EQ(length_of(r), 1u);
  EXPECT_EQ(std::get<std::string>(elements(r)[0]), "b");
  EXPECT_EQ(length_of(index_get(seq(3), num_vector({0, -1}))), 2u);
}

TEST(IndexGet, LogicalMaskExtends) {
  RValue r = index_get(seq(3), lgl_vector({true, true, true, true}));
  ASSERT_EQ(length_of(r), 4u);
  EXPECT_TRUE(is_na(elements(r)[3]));
  RValue m = index_get(chr_vector({"a", "b", "c"}), lgl_vector({true, false}));
  EXPECT_EQ(length_of(m), 2u);
  EXPECT_EQ(std::get<std::string>(elements(m)[1]), "c");
}

TEST(IndexGet, NullCases) {
  EXPECT_TRUE(is_null(index_get(RValue{Null{}}, num_vector({1}))));
  EXPECT_EQ(length_of(index_get(seq(3), RValue{Null{}})), 3u);
}

TEST(IndexGet, ArraysFlatten) {
  RValue a = make_array(Mode::Numeric, {2, 2}, {1.0, 2.0, 3.0, 4.0});
  RValue r = index_get(a, num_vector({3}));
  EXPECT_TRUE(std::holds_alternative<Vector>(r));
  EXPECT_EQ(num(r, 0), 3.0);
}

TEST(IndexGet, Errors) {
  EXPECT_EQ(code_of([] { index_get(seq(3), num_vector({1, -1})); }), Code::E_MIXEDSIGNS);
  EXPECT_EQ(code_of([] { index_get(seq(3), make_vector(Mode::Numeric, {Scalar{-1.0}, na()})); }),
            Code::E_MIXEDSIGNS);
  EXPECT_EQ(code_of([] { index_get(seq(3), chr_vector({"a"})); }), Code::E_BADSUBSCRIPT);
  EXPECT_EQ(code_of([] { index_get(RValue{Closure{}}, num_vector({1})); }), Code::E_BADSUBSCRIPT);
}

TEST(IndexAssign, Transcripts) {
  Warnings w;
  RValue a = index_assign(seq(4), num_vector({1, 2}), make_vector(Mode::Logical, {na()}), {}, w);
  EXPECT_TRUE(is_na(elements(a)[0]) && is_na(elements(a)[1]));
  EXPECT_EQ(num(a, 2), 3.0);
  RValue b = index_assign(a, num_vector({1, 2, 3, 4}), num_vector({1, 2}), {}, w);
  EXPECT_EQ(num(b, 2), 1.0);
  EXPECT_EQ(num(b, 3), 2.0);
  EXPECT_TRUE(w.empty());
  index_assign(seq(4), num_vector({1, 2}), num_vector({7, 8, 9}), {}, w);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].code, Code::W_REPLACE_NONMULTIPLE);
}

TEST(IndexAssign, ModeWidens) {
  Warnings w;
  RValue r = index_assign(seq(2), num_vector({1}), chr_vector({"x"}), {}, w);
  EXPECT_EQ(atomic_mode(r), Mode::Character);
  EXPECT_EQ(std::get<std::string>(elements(r)[1]), "2");
}

TEST(IndexAssign, NegativeAndLogicalTargets) {
  Warnings w;
  RValue r = index_assign(seq(4), num_vector({-1}), num_vector({0}), {}, w);
  EXPECT_EQ(num(r, 0), 1.0);
  EXPECT_EQ(num(r, 3), 0.0);
  RValue m = index_assign(seq(4), lgl_vector({false, true}), num_vector({0}), {}, w);
  EXPECT_EQ(num(m, 0), 1.0);
  EXPECT_EQ(num(m, 1), 0.0);
  EXPECT_EQ(num(m, 3), 0.0);
  EXPECT_TRUE(w.empty());
}

TEST(IndexAssign, ArraysKeepDims) {
  Warnings w;
  RValue a = make_array(Mode::Numeric, {2, 2}, {1.0, 2.0, 3.0, 4.0});
  RValue r = index_assign(a, num_vector({4}), num_vector({0}), {}, w);
  ASSERT_TRUE(std::holds_alternative<Array>(r));
  EXPECT_EQ(num(r, 3), 0.0);
}

TEST(IndexAssign, Errors) {
  Warnings w;
  EXPECT_EQ(code_of([&] { index_assign(seq(4), num_vector({1}), RValue{Null{}}, {}, w); }), Code::E_NULLREPL);
  EXPECT_EQ(code_of([&] { index_assign(seq(2), num_vector({5}), num_vector({1}), {}, w); }), Code::E_OOB_ASSIGN);
  EXPECT_EQ(code_of([&] { index_assign(seq(2), lgl_vector({true, false, true}), num_vector({1}), {}, w); }),
            Code::E_OOB_ASSIGN);
  EXPECT_EQ(code_of([&] { index_assign(seq(2), make_vector(Mode::Logical, {Scalar{true}, na()}), num_vector({1}), {}, w); }),
            Code::E_NA_SUBASSIGN);
  EXPECT_EQ(code_of([&] { index_assign(seq(2), num_vector({1, -1}), num_vector({1}), {}, w); }), Code::E_MIXEDSIGNS);
  EXPECT_EQ(code_of([&] { index_assign(seq(2), num_vector({1}), RValue{Closure{}}, {}, w); }), Code::E_BADCOMBINE);
}

TEST(IndexAssign, GrowthPolicy) {
  Warnings w;
  RValue r = index_assign(seq(2), num_vector({4}), num_vector({9}), AssignPolicy{true}, w);
  ASSERT_EQ(length_of(r), 4u);
  EXPECT_TRUE(is_na(elements(r)[2]));
  EXPECT_EQ(num(r, 3), 9.0);
  RValue n = index_assign(RValue{Null{}}, num_vector({2}), chr_vector({"a"}), AssignPolicy{true}, w);
  EXPECT_EQ(atomic_mode(n), Mode::Character);
  EXPECT_EQ(length_of(n), 2u);
}
