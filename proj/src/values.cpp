#include "rvec/values.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "rvec/number_format.hpp"

namespace rvec {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Numeric: return "numeric";
    case Mode::Logical: return "logical";
    case Mode::Character: return "character";
    case Mode::Function: return "function";
  }
  return "?";
}

namespace {

int mode_rank(Mode m) {
  switch (m) {
    case Mode::Logical: return 0;
    case Mode::Numeric: return 1;
    case Mode::Character: return 2;
    case Mode::Function: return 3;
  }
  return 0;
}

const std::vector<Scalar> kNoElements;

}  // namespace

Mode mode_lub(Mode a, Mode b) { return mode_rank(a) >= mode_rank(b) ? a : b; }

bool scalar_fits(const Scalar& s, Mode m) {
  if (is_na(s)) return m != Mode::Function;
  switch (m) {
    case Mode::Numeric: return std::holds_alternative<double>(s);
    case Mode::Logical: return std::holds_alternative<bool>(s);
    case Mode::Character: return std::holds_alternative<std::string>(s);
    case Mode::Function: return false;
  }
  return false;
}

Scalar scalar_to_numeric(const Scalar& s) {
  if (const auto* b = std::get_if<bool>(&s)) return *b ? 1.0 : 0.0;
  if (std::holds_alternative<std::string>(s)) throw RError(make_condition(Code::E_NONNUMERIC));
  return s;
}

Scalar scalar_to_logical(const Scalar& s) {
  if (const auto* d = std::get_if<double>(&s)) {
    if (std::isnan(*d)) return na();
    return *d != 0.0;
  }
  if (std::holds_alternative<std::string>(s)) throw RError(make_condition(Code::E_NONLOGICAL));
  return s;
}

Scalar scalar_to_character(const Scalar& s) {
  if (const auto* d = std::get_if<double>(&s)) return format_number(*d, 15);
  if (const auto* b = std::get_if<bool>(&s)) return std::string(*b ? "TRUE" : "FALSE");
  return s;
}

Scalar scalar_to_mode(const Scalar& s, Mode target) {
  switch (target) {
    case Mode::Numeric: return scalar_to_numeric(s);
    case Mode::Logical: return scalar_to_logical(s);
    case Mode::Character: return scalar_to_character(s);
    case Mode::Function: break;
  }
  throw std::logic_error("cannot convert an element to function mode");
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
  if (name == "c") return Builtin::Combine;
  if (name == "array") return Builtin::Array;
  if (name == "matrix") return Builtin::Matrix;
  if (name == "mode") return Builtin::Mode;
  if (name == "length") return Builtin::Length;
  return std::nullopt;
}

std::string_view builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Combine: return "c";
    case Builtin::Array: return "array";
    case Builtin::Matrix: return "matrix";
    case Builtin::Mode: return "mode";
    case Builtin::Length: return "length";
  }
  return "?";
}

void check_invariants(const RValue& v) {
  auto homogeneous = [](Mode m, const std::vector<Scalar>& xs) {
    if (m == Mode::Function) throw std::logic_error("atomic container with function mode");
    for (const auto& x : xs) {
      if (!scalar_fits(x, m)) throw std::logic_error("element does not match container mode");
    }
  };
  if (const auto* vec = std::get_if<Vector>(&v)) {
    homogeneous(vec->mode, vec->elems);
  } else if (const auto* arr = std::get_if<Array>(&v)) {
    homogeneous(arr->mode, arr->elems);
    if (arr->dims.empty()) throw std::logic_error("array without dims");
    std::size_t product = std::accumulate(arr->dims.begin(), arr->dims.end(), std::size_t{1},
                                          std::multiplies<>());
    if (product != arr->elems.size()) throw std::logic_error("array dims do not match element count");
  }
}

RValue make_vector(Mode mode, std::vector<Scalar> elems) {
  RValue v = Vector{mode, std::move(elems)};
#ifndef NDEBUG
  check_invariants(v);
#endif
  return v;
}

RValue make_array(Mode mode, std::vector<std::size_t> dims, std::vector<Scalar> elems) {
  RValue v = Array{mode, std::move(dims), std::move(elems)};
#ifndef NDEBUG
  check_invariants(v);
#endif
  return v;
}

RValue num_vector(std::initializer_list<double> xs) {
  std::vector<Scalar> elems(xs.begin(), xs.end());
  return Vector{Mode::Numeric, std::move(elems)};
}

RValue lgl_vector(std::initializer_list<bool> xs) {
  std::vector<Scalar> elems(xs.begin(), xs.end());
  return Vector{Mode::Logical, std::move(elems)};
}

RValue chr_vector(std::initializer_list<const char*> xs) {
  std::vector<Scalar> elems;
  for (const char* x : xs) elems.emplace_back(std::string(x));
  return Vector{Mode::Character, std::move(elems)};
}

std::string mode_of(const RValue& v) {
  if (std::holds_alternative<Null>(v)) return "NULL";
  if (std::holds_alternative<Closure>(v)) return "function";
  return std::string(mode_name(*atomic_mode(v)));
}

std::size_t length_of(const RValue& v) {
  if (std::holds_alternative<Null>(v)) return 0;
  if (std::holds_alternative<Closure>(v)) return 1;
  return elements(v).size();
}

std::optional<Mode> atomic_mode(const RValue& v) {
  if (const auto* vec = std::get_if<Vector>(&v)) return vec->mode;
  if (const auto* arr = std::get_if<Array>(&v)) return arr->mode;
  return std::nullopt;
}

const std::vector<Scalar>& elements(const RValue& v) {
  if (const auto* vec = std::get_if<Vector>(&v)) return vec->elems;
  if (const auto* arr = std::get_if<Array>(&v)) return arr->elems;
  return kNoElements;
}

bool is_closure(const RValue& v) { return std::holds_alternative<Closure>(v); }
bool is_null(const RValue& v) { return std::holds_alternative<Null>(v); }

namespace {

RValue coerce_container(const RValue& v, Mode target, Scalar (*convert)(const Scalar&)) {
  auto convert_all = [&](const std::vector<Scalar>& xs) {
    std::vector<Scalar> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(convert(x));
    return out;
  };
  if (const auto* vec = std::get_if<Vector>(&v)) {
    return Vector{target, convert_all(vec->elems)};
  }
  if (const auto* arr = std::get_if<Array>(&v)) {
    return Array{target, arr->dims, convert_all(arr->elems)};
  }
  throw std::logic_error("coercion applies to vectors and arrays only");
}

}  // namespace

RValue coerce_to_numeric(const RValue& v) {
  if (atomic_mode(v) == Mode::Character) throw RError(make_condition(Code::E_NONNUMERIC));
  return coerce_container(v, Mode::Numeric, &scalar_to_numeric);
}

RValue coerce_to_logical(const RValue& v) {
  if (atomic_mode(v) == Mode::Character) throw RError(make_condition(Code::E_NONLOGICAL));
  return coerce_container(v, Mode::Logical, &scalar_to_logical);
}

bool values_identical(const RValue& a, const RValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* va = std::get_if<Vector>(&a)) {
    const auto& vb = std::get<Vector>(b);
    return va->mode == vb.mode && va->elems == vb.elems;
  }
  if (const auto* aa = std::get_if<Array>(&a)) {
    const auto& ab = std::get<Array>(b);
    return aa->mode == ab.mode && aa->dims == ab.dims && aa->elems == ab.elems;
  }
  if (const auto* ca = std::get_if<Closure>(&a)) {
    const auto& cb = std::get<Closure>(b);
    return ca->builtin == cb.builtin && ca->params == cb.params && ca->source == cb.source &&
           ca->env == cb.env;
  }
  return true;
}

LookupStatus Env::lookup(std::string_view name, const RValue** out) const {
  for (const Env* env = this; env != nullptr; env = env->parent_.get()) {
    if (env->missing_.contains(name)) return LookupStatus::Missing;
    auto it = env->bindings_.find(name);
    if (it != env->bindings_.end()) {
      if (out != nullptr) *out = &it->second;
      return LookupStatus::Found;
    }
  }
  return LookupStatus::Unbound;
}

bool Env::is_bound(std::string_view name) const { return lookup(name, nullptr) != LookupStatus::Unbound; }

void Env::assign(const std::string& name, RValue value) {
  if (auto it = missing_.find(name); it != missing_.end()) missing_.erase(it);
  bindings_.insert_or_assign(name, std::move(value));
}

void Env::bind_missing(const std::string& name) {
  bindings_.erase(name);
  missing_.insert(name);
}

void Env::clear() {
  bindings_.clear();
  missing_.clear();
}

}  // namespace rvec
