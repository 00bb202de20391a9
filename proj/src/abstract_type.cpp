#include "rvec/abstract_type.hpp"

#include <cmath>

namespace rvec {

AbsType AbsType::bottom() {
  AbsType t;
  t.kind = AbsKind::Bottom;
  return t;
}

AbsType AbsType::null() {
  AbsType t;
  t.kind = AbsKind::Null;
  t.size = AbsSize::known(0);
  t.contents = std::vector<Scalar>{};
  return t;
}

AbsType AbsType::function(std::shared_ptr<const AbsClosure> c) {
  AbsType t;
  t.kind = AbsKind::Closure;
  t.mode = Mode::Function;
  t.size = AbsSize::known(1);
  t.closure = std::move(c);
  return t;
}

AbsType AbsType::vector(std::optional<Mode> mode, AbsSize size) {
  AbsType t;
  t.kind = AbsKind::Vector;
  t.mode = mode;
  t.size = size;
  return t;
}

AbsType AbsType::array(std::optional<Mode> mode, std::optional<std::vector<AbsSize>> dims) {
  AbsType t;
  t.kind = AbsKind::Array;
  t.mode = mode;
  t.size = AbsSize::unknown();
  if (dims) {
    std::size_t product = 1;
    bool all_known = true;
    for (const auto& d : *dims) {
      if (!d.is_known()) {
        all_known = false;
        break;
      }
      product *= d.value();
    }
    if (all_known) t.size = AbsSize::known(product);
  }
  t.dims = std::move(dims);
  return t;
}

bool AbsType::is_exact() const {
  if (kind == AbsKind::Null) return true;
  if (kind != AbsKind::Vector && kind != AbsKind::Array) return false;
  if (!mode || !contents) return false;
  if (kind == AbsKind::Array) {
    if (!dims) return false;
    for (const auto& d : *dims) {
      if (!d.is_known()) return false;
    }
  }
  return true;
}

SignInfo sign_of(const std::vector<Scalar>& elems) {
  bool pos = false;
  bool neg = false;
  for (const auto& e : elems) {
    double x = 0;
    if (const auto* d = std::get_if<double>(&e)) {
      if (std::isnan(*d)) continue;
      x = std::trunc(*d);
    } else if (const auto* b = std::get_if<bool>(&e)) {
      x = *b ? 1 : 0;
    } else {
      continue;
    }
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos && neg) return SignInfo::Mixed;
  if (neg) return SignInfo::AllNonPos;
  // All zero (or empty) is both; AllNonNeg is the tag the subscript rules
  // treat as "select by position".
  return SignInfo::AllNonNeg;
}

SignInfo sign_join(SignInfo a, SignInfo b) {
  if (a == b) return a;
  return SignInfo::Unknown;
}

namespace {

AbsType from_elements(AbsKind kind, Mode mode, const std::vector<Scalar>& elems) {
  AbsType t;
  t.kind = kind;
  t.mode = mode;
  t.size = AbsSize::known(elems.size());
  if (elems.size() <= kMaxTrackedElements) {
    t.contents = elems;
    if (mode == Mode::Numeric) t.sign = sign_of(elems);
  }
  return t;
}

}  // namespace

AbsType abstract_value(const RValue& v) {
  if (std::holds_alternative<Null>(v)) return AbsType::null();
  if (const auto* vec = std::get_if<Vector>(&v)) return from_elements(AbsKind::Vector, vec->mode, vec->elems);
  if (const auto* arr = std::get_if<Array>(&v)) {
    AbsType t = from_elements(AbsKind::Array, arr->mode, arr->elems);
    std::vector<AbsSize> dims;
    for (auto d : arr->dims) dims.push_back(AbsSize::known(d));
    t.dims = std::move(dims);
    return t;
  }
  return AbsType::top();
}

std::optional<RValue> concrete_value(const AbsType& t) {
  if (!t.is_exact()) return std::nullopt;
  if (t.kind == AbsKind::Null) return RValue{Null{}};
  if (t.kind == AbsKind::Vector) return RValue{Vector{*t.mode, *t.contents}};
  std::vector<std::size_t> dims;
  for (const auto& d : *t.dims) dims.push_back(d.value());
  return RValue{Array{*t.mode, std::move(dims), *t.contents}};
}

AbsType without_contents(AbsType t) {
  if (t.kind == AbsKind::Null) return t;
  t.contents.reset();
  t.sign = SignInfo::Unknown;
  return t;
}

AbsType abs_join(const AbsType& a, const AbsType& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  if (a.kind != b.kind || a.is_top()) return AbsType::top();
  if (a.kind == AbsKind::Closure) return a.closure == b.closure ? a : AbsType::top();

  AbsType out;
  out.kind = a.kind;
  out.mode = a.mode == b.mode ? a.mode : std::nullopt;
  out.size = a.size == b.size ? a.size : AbsSize::unknown();
  out.sign = sign_join(a.sign, b.sign);
  if (a.contents && b.contents && out.mode && *a.contents == *b.contents) out.contents = a.contents;
  if (a.dims && b.dims && a.dims->size() == b.dims->size()) {
    std::vector<AbsSize> dims;
    for (std::size_t i = 0; i < a.dims->size(); ++i) {
      dims.push_back((*a.dims)[i] == (*b.dims)[i] ? (*a.dims)[i] : AbsSize::unknown());
    }
    out.dims = std::move(dims);
  }
  return out;
}

std::string to_string(const AbsType& t) {
  auto size_text = [](const AbsSize& s) { return s.is_known() ? std::to_string(s.value()) : std::string("?"); };
  std::string mode = t.mode ? std::string(mode_name(*t.mode)) : "?";
  switch (t.kind) {
    case AbsKind::Bottom: return "error";
    case AbsKind::Top: return "top";
    case AbsKind::Null: return "NULL";
    case AbsKind::Closure: {
      if (t.closure && t.closure->builtin) return "builtin " + std::string(builtin_name(*t.closure->builtin));
      std::string out = "function(";
      if (t.closure) {
        for (std::size_t i = 0; i < t.closure->params.size(); ++i) {
          if (i > 0) out += ", ";
          out += t.closure->params[i];
        }
      }
      return out + ")";
    }
    case AbsKind::Vector: return "vector<" + mode + ">[" + size_text(t.size) + "]";
    case AbsKind::Array: {
      std::string out = "array<" + mode + ">[";
      if (!t.dims) return out + "?]";
      for (std::size_t i = 0; i < t.dims->size(); ++i) {
        if (i > 0) out += "x";
        out += size_text((*t.dims)[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

AbsLookup AbsEnv::lookup(const std::string& name, AbsType* out) const {
  for (const AbsEnv* env = this; env != nullptr; env = env->parent_.get()) {
    if (env->missing_.contains(name)) return AbsLookup::Missing;
    auto it = env->bindings_.find(name);
    if (it != env->bindings_.end()) {
      if (out != nullptr) *out = it->second;
      return AbsLookup::Found;
    }
  }
  return AbsLookup::Unbound;
}

bool AbsEnv::is_bound(const std::string& name) const { return lookup(name, nullptr) != AbsLookup::Unbound; }

void AbsEnv::assign(const std::string& name, AbsType type) {
  missing_.erase(name);
  bindings_.insert_or_assign(name, std::move(type));
}

void AbsEnv::bind_missing(const std::string& name) {
  bindings_.erase(name);
  missing_.insert(name);
}

void AbsEnv::clear() {
  bindings_.clear();
  missing_.clear();
}

}  // namespace rvec
