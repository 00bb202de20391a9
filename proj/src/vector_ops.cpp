#include "rvec/vector_ops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace rvec {

namespace {

// Upper bound on array sizes built by array()/matrix().
constexpr double kMaxArrayElements = 1e7;

std::optional<double> as_double(const Scalar& s) {
  if (const auto* d = std::get_if<double>(&s)) {
    if (std::isnan(*d)) return std::nullopt;
    return *d;
  }
  if (const auto* b = std::get_if<bool>(&s)) return *b ? 1.0 : 0.0;
  return std::nullopt;
}

RValue empty_vector(Mode m) { return Vector{m, {}}; }

RValue with_container(Mode mode, std::vector<Scalar> elems, const RValue* array_operand) {
  if (array_operand != nullptr) {
    return make_array(mode, std::get<Array>(*array_operand).dims, std::move(elems));
  }
  return make_vector(mode, std::move(elems));
}

// Shared recycling/container logic for every binary operator.
template <typename ElementOp>
RValue binary_elementwise(const RValue& lhs, const RValue& rhs, Mode result_mode, Warnings& warnings,
                          ElementOp&& op) {
  const auto& a = elements(lhs);
  const auto& b = elements(rhs);
  const Array* arr_a = std::get_if<Array>(&lhs);
  const Array* arr_b = std::get_if<Array>(&rhs);

  if (arr_a != nullptr && arr_b != nullptr && arr_a->dims != arr_b->dims) {
    throw RError(make_condition(Code::E_DIMS_MISMATCH));
  }
  if (a.empty() || b.empty()) return empty_vector(result_mode);

  const RValue* array_operand = arr_a != nullptr ? &lhs : (arr_b != nullptr ? &rhs : nullptr);
  std::size_t n = std::max(a.size(), b.size());
  if (array_operand != nullptr && arr_a == nullptr) {
    if (a.size() > b.size()) {
      throw RError(Condition{Code::E_DIMS_MISMATCH, "dims [product " + std::to_string(b.size()) +
                                                        "] do not match the length of object [" +
                                                        std::to_string(a.size()) + "]"});
    }
  } else if (array_operand != nullptr && arr_b == nullptr) {
    if (b.size() > a.size()) {
      throw RError(Condition{Code::E_DIMS_MISMATCH, "dims [product " + std::to_string(a.size()) +
                                                        "] do not match the length of object [" +
                                                        std::to_string(b.size()) + "]"});
    }
  }

  RecycleResult ra = recycle(a, n);
  RecycleResult rb = recycle(b, n);
  if (ra.was_nonmultiple || rb.was_nonmultiple) warnings.push_back(make_condition(Code::W_NONMULTIPLE));

  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(op(ra.elems[i], rb.elems[i]));
  return with_container(result_mode, std::move(out), array_operand);
}

Scalar arith(BinaryOp op, const Scalar& x, const Scalar& y) {
  Scalar nx = scalar_to_numeric(x);
  Scalar ny = scalar_to_numeric(y);
  if (is_na(nx) || is_na(ny)) return na();
  double l = std::get<double>(nx);
  double r = std::get<double>(ny);
  switch (op) {
    case BinaryOp::Add: return l + r;
    case BinaryOp::Sub: return l - r;
    case BinaryOp::Mul: return l * r;
    case BinaryOp::Div: return l / r;
    default: break;
  }
  throw std::logic_error("not an arithmetic operator");
}

Scalar kleene(BinaryOp op, const Scalar& x, const Scalar& y) {
  Scalar lx = scalar_to_logical(x);
  Scalar ly = scalar_to_logical(y);
  const bool* a = std::get_if<bool>(&lx);
  const bool* b = std::get_if<bool>(&ly);
  if (op == BinaryOp::And) {
    if ((a != nullptr && !*a) || (b != nullptr && !*b)) return false;
    if (a == nullptr || b == nullptr) return na();
    return true;
  }
  if ((a != nullptr && *a) || (b != nullptr && *b)) return true;
  if (a == nullptr || b == nullptr) return na();
  return false;
}

template <typename T>
bool compare_values(BinaryOp op, const T& l, const T& r) {
  switch (op) {
    case BinaryOp::Gt: return l > r;
    case BinaryOp::Lt: return l < r;
    case BinaryOp::Ge: return l >= r;
    case BinaryOp::Le: return l <= r;
    case BinaryOp::Eq: return l == r;
    case BinaryOp::Ne: return l != r;
    default: break;
  }
  throw std::logic_error("not a comparison operator");
}

Scalar compare(BinaryOp op, const Scalar& x, const Scalar& y, bool as_strings) {
  if (is_na(x) || is_na(y)) return na();
  if (as_strings) {
    const auto& l = std::get<std::string>(scalar_to_character(x));
    const auto& r = std::get<std::string>(scalar_to_character(y));
    return compare_values(op, l, r);
  }
  double l = std::get<double>(scalar_to_numeric(x));
  double r = std::get<double>(scalar_to_numeric(y));
  if (std::isnan(l) || std::isnan(r)) return na();
  return compare_values(op, l, r);
}

}  // namespace

std::vector<std::size_t> validate_dims(const RValue& shape) {
  auto mode = atomic_mode(shape);
  const auto& xs = elements(shape);
  if (!mode || *mode == Mode::Character || xs.empty()) throw RError(make_condition(Code::E_BADDIMS));
  std::vector<std::size_t> dims;
  double product = 1;
  for (const auto& x : xs) {
    auto d = as_double(x);
    if (!d || !std::isfinite(*d)) throw RError(make_condition(Code::E_BADDIMS));
    double t = std::trunc(*d);
    if (t < 0) throw RError(make_condition(Code::E_BADDIMS));
    product *= t;
    if (product > kMaxArrayElements) {
      throw RError(Condition{Code::E_BADDIMS, "the dims describe more elements than can be allocated"});
    }
    dims.push_back(static_cast<std::size_t>(t));
  }
  return dims;
}

namespace {

struct NumericSubscript {
  std::vector<std::optional<long long>> values;  // truncated; nullopt = NA
  bool any_positive = false;
  bool any_negative = false;
  bool any_na = false;
};

NumericSubscript read_numeric_subscript(const std::vector<Scalar>& xs) {
  NumericSubscript s;
  s.values.reserve(xs.size());
  for (const auto& x : xs) {
    auto d = as_double(x);
    if (!d) {
      s.values.push_back(std::nullopt);
      s.any_na = true;
      continue;
    }
    double t = std::trunc(*d);
    // Out-of-range magnitudes behave like "far out of bounds".
    t = std::clamp(t, -9.0e15, 9.0e15);
    auto v = static_cast<long long>(t);
    if (v > 0) s.any_positive = true;
    if (v < 0) s.any_negative = true;
    s.values.push_back(v);
  }
  return s;
}

void check_subscript_type(const RValue& sub) {
  if (is_closure(sub)) throw RError(bad_subscript_type("closure"));
  if (atomic_mode(sub) == Mode::Character) throw RError(bad_subscript_type("character"));
}

std::vector<bool> excluded_positions(const NumericSubscript& s, std::size_t n) {
  std::vector<bool> excluded(n, false);
  for (const auto& v : s.values) {
    auto k = static_cast<unsigned long long>(-*v);
    if (*v < 0 && k <= n) excluded[k - 1] = true;
  }
  return excluded;
}

}  // namespace

RecycleResult recycle(std::span<const Scalar> elems, std::size_t target) {
  if (elems.empty()) {
    if (target == 0) return {};
    throw std::logic_error("cannot recycle an empty sequence to a non-zero length");
  }
  RecycleResult r;
  r.elems.reserve(target);
  for (std::size_t i = 0; i < target; ++i) r.elems.push_back(elems[i % elems.size()]);
  r.was_nonmultiple = target % elems.size() != 0;
  return r;
}

RValue combine(std::span<const RValue> args) {
  std::optional<Mode> mode;
  std::size_t total = 0;
  for (const auto& a : args) {
    if (is_closure(a)) throw RError(make_condition(Code::E_BADCOMBINE));
    if (is_null(a)) continue;
    Mode m = *atomic_mode(a);
    mode = mode ? mode_lub(*mode, m) : m;
    total += elements(a).size();
  }
  if (total == 0) return Null{};
  std::vector<Scalar> out;
  out.reserve(total);
  for (const auto& a : args) {
    for (const auto& x : elements(a)) out.push_back(scalar_to_mode(x, *mode));
  }
  return make_vector(*mode, std::move(out));
}

RValue elementwise_arith(BinaryOp op, const RValue& lhs, const RValue& rhs, Warnings& warnings) {
  for (const RValue* v : {&lhs, &rhs}) {
    if (is_closure(*v) || atomic_mode(*v) == Mode::Character) {
      throw RError(make_condition(Code::E_NONNUMERIC));
    }
  }
  return binary_elementwise(lhs, rhs, Mode::Numeric, warnings,
                            [op](const Scalar& x, const Scalar& y) { return arith(op, x, y); });
}

RValue elementwise_logical(BinaryOp op, const RValue& lhs, const RValue& rhs, Warnings& warnings) {
  if (op == BinaryOp::And || op == BinaryOp::Or) {
    for (const RValue* v : {&lhs, &rhs}) {
      if (is_closure(*v) || atomic_mode(*v) == Mode::Character) {
        throw RError(make_condition(Code::E_NONLOGICAL));
      }
    }
    return binary_elementwise(lhs, rhs, Mode::Logical, warnings,
                              [op](const Scalar& x, const Scalar& y) { return kleene(op, x, y); });
  }
  for (const RValue* v : {&lhs, &rhs}) {
    if (is_closure(*v)) throw RError(make_condition(Code::E_NONNUMERIC));
  }
  bool as_strings = atomic_mode(lhs) == Mode::Character || atomic_mode(rhs) == Mode::Character;
  return binary_elementwise(
      lhs, rhs, Mode::Logical, warnings,
      [op, as_strings](const Scalar& x, const Scalar& y) { return compare(op, x, y, as_strings); });
}

RValue apply_binary(BinaryOp op, const RValue& lhs, const RValue& rhs, Warnings& warnings) {
  return is_arithmetic(op) ? elementwise_arith(op, lhs, rhs, warnings)
                           : elementwise_logical(op, lhs, rhs, warnings);
}

RValue construct_array(const RValue& shape, const RValue& elems) {
  if (is_null(elems) || length_of(elems) == 0) throw RError(make_condition(Code::E_NULLDATA));
  if (is_closure(elems)) {
    throw RError(Condition{Code::E_NULLDATA, "'data' must be of a vector type, was 'closure'"});
  }
  std::vector<std::size_t> dims = validate_dims(shape);
  std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  // R recycles array data silently, even when the length does not divide.
  RecycleResult r = recycle(elements(elems), total);
  return make_array(*atomic_mode(elems), std::move(dims), std::move(r.elems));
}

RValue construct_matrix(const RValue& shape, const RValue& elems, Warnings& warnings) {
  std::size_t k = is_closure(shape) ? 0 : length_of(shape);
  if (k < 2) throw RError(make_condition(Code::E_BADDIMS));
  if (k == 2) return construct_array(shape, elems);
  warnings.push_back(make_condition(Code::W_MATRIX_TRUNC));
  const auto& xs = elements(shape);
  RValue first_two = Vector{*atomic_mode(shape), {xs[0], xs[1]}};
  return construct_array(first_two, elems);
}

RValue index_get(const RValue& base, const RValue& sub) {
  if (is_closure(base)) {
    throw RError(Condition{Code::E_BADSUBSCRIPT, "object of type 'closure' is not subsettable"});
  }
  if (is_null(base)) return Null{};
  Mode mode = *atomic_mode(base);
  const auto& xs = elements(base);
  if (is_null(sub)) return make_vector(mode, xs);
  check_subscript_type(sub);

  const auto& ss = elements(sub);
  std::vector<Scalar> out;

  if (atomic_mode(sub) == Mode::Logical) {
    if (ss.empty()) return empty_vector(mode);
    std::size_t m = std::max(xs.size(), ss.size());
    for (std::size_t p = 0; p < m; ++p) {
      const Scalar& mask = ss[p % ss.size()];
      if (is_na(mask)) {
        out.push_back(na());
      } else if (std::get<bool>(mask)) {
        out.push_back(p < xs.size() ? xs[p] : na());
      }
    }
    return make_vector(mode, std::move(out));
  }

  NumericSubscript s = read_numeric_subscript(ss);
  if (s.any_negative && (s.any_positive || s.any_na)) throw RError(make_condition(Code::E_MIXEDSIGNS));
  if (s.any_negative) {
    std::vector<bool> excluded = excluded_positions(s, xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!excluded[i]) out.push_back(xs[i]);
    }
    return make_vector(mode, std::move(out));
  }
  for (const auto& v : s.values) {
    if (!v) {
      out.push_back(na());
    } else if (*v > 0) {
      auto k = static_cast<unsigned long long>(*v);
      out.push_back(k <= xs.size() ? xs[k - 1] : na());
    }
  }
  return make_vector(mode, std::move(out));
}

RValue index_assign(const RValue& base, const RValue& sub, const RValue& repl, AssignPolicy policy,
                    Warnings& warnings) {
  if (is_closure(base)) {
    throw RError(Condition{Code::E_BADSUBSCRIPT, "object of type 'closure' is not subsettable"});
  }
  check_subscript_type(sub);
  if (is_closure(repl)) throw RError(make_condition(Code::E_BADCOMBINE));
  if (length_of(repl) == 0) throw RError(make_condition(Code::E_NULLREPL));

  const auto& xs = elements(base);
  const std::size_t n = xs.size();
  std::vector<std::size_t> positions;
  std::size_t new_length = n;

  auto target = [&](std::size_t p) {
    if (p >= n) {
      if (!policy.allow_growth) throw RError(make_condition(Code::E_OOB_ASSIGN));
      new_length = std::max(new_length, p + 1);
    }
    positions.push_back(p);
  };

  if (is_null(sub)) {
    for (std::size_t p = 0; p < n; ++p) positions.push_back(p);
  } else if (atomic_mode(sub) == Mode::Logical) {
    const auto& ss = elements(sub);
    if (!ss.empty()) {
      for (const auto& m : ss) {
        if (is_na(m)) throw RError(make_condition(Code::E_NA_SUBASSIGN));
      }
      std::size_t m = std::max(n, ss.size());
      for (std::size_t p = 0; p < m; ++p) {
        if (std::get<bool>(ss[p % ss.size()])) target(p);
      }
    }
  } else {
    NumericSubscript s = read_numeric_subscript(elements(sub));
    if (s.any_negative && (s.any_positive || s.any_na)) throw RError(make_condition(Code::E_MIXEDSIGNS));
    if (s.any_na) throw RError(make_condition(Code::E_NA_SUBASSIGN));
    if (s.any_negative) {
      std::vector<bool> excluded = excluded_positions(s, n);
      for (std::size_t p = 0; p < n; ++p) {
        if (!excluded[p]) positions.push_back(p);
      }
    } else {
      for (const auto& v : s.values) {
        if (*v > 0) target(static_cast<std::size_t>(*v - 1));
      }
    }
  }

  const auto& rs = elements(repl);
  if (!positions.empty() && positions.size() % rs.size() != 0) {
    warnings.push_back(make_condition(Code::W_REPLACE_NONMULTIPLE));
  }

  Mode repl_mode = *atomic_mode(repl);
  Mode mode = is_null(base) ? repl_mode : mode_lub(*atomic_mode(base), repl_mode);
  std::vector<Scalar> out;
  out.reserve(new_length);
  for (const auto& x : xs) out.push_back(scalar_to_mode(x, mode));
  out.resize(new_length, na());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out[positions[i]] = scalar_to_mode(rs[i % rs.size()], mode);
  }

  if (const auto* arr = std::get_if<Array>(&base); arr != nullptr && new_length == n) {
    return make_array(mode, arr->dims, std::move(out));
  }
  return make_vector(mode, std::move(out));
}

}  // namespace rvec
