#pragma once

// The checker's abstract domain: container kind x mode x size x sign x
// contents. Contents are tracked exactly for small literal-built values
// (constant propagation), which is what lets masks and exclusion sets be
// counted statically.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rvec/values.hpp"

namespace rvec {

// Larger values keep their size but lose their contents.
inline constexpr std::size_t kMaxTrackedElements = 4096;

class AbsSize {
 public:
  static AbsSize known(std::size_t n) { return AbsSize(n); }
  static AbsSize unknown() { return AbsSize(); }

  bool is_known() const { return n_.has_value(); }
  std::size_t value() const { return *n_; }
  const std::optional<std::size_t>& get() const { return n_; }

  bool operator==(const AbsSize&) const = default;

 private:
  AbsSize() = default;
  explicit AbsSize(std::size_t n) : n_(n) {}
  std::optional<std::size_t> n_;
};

enum class SignInfo { AllNonNeg, AllNonPos, Mixed, Unknown };

// Bottom marks an expression whose evaluation certainly fails; nothing is
// reported downstream of it.
enum class AbsKind { Bottom, Null, Vector, Array, Closure, Top };

class AbsEnv;

struct AbsClosure {
  std::vector<std::string> params;
  std::vector<ExprPtr> body;
  std::shared_ptr<AbsEnv> env;  // live defining frame
  std::optional<Builtin> builtin;
};

struct AbsType {
  AbsKind kind = AbsKind::Top;
  std::optional<Mode> mode;                     // nullopt: unknown (or NULL)
  AbsSize size = AbsSize::unknown();
  SignInfo sign = SignInfo::Unknown;            // numeric contents only
  std::optional<std::vector<Scalar>> contents;  // exact elements when known
  std::optional<std::vector<AbsSize>> dims;     // Array only; nullopt: unknown rank
  std::shared_ptr<const AbsClosure> closure;    // Closure only

  static AbsType top() { return AbsType{}; }
  static AbsType bottom();
  static AbsType null();
  static AbsType function(std::shared_ptr<const AbsClosure> c);
  // Vector of known or unknown size with no content knowledge.
  static AbsType vector(std::optional<Mode> mode, AbsSize size);
  static AbsType array(std::optional<Mode> mode, std::optional<std::vector<AbsSize>> dims);

  bool is_top() const { return kind == AbsKind::Top; }
  bool is_bottom() const { return kind == AbsKind::Bottom; }
  bool is_closure() const { return kind == AbsKind::Closure; }
  bool is_null() const { return kind == AbsKind::Null; }
  bool is_container() const { return kind == AbsKind::Vector || kind == AbsKind::Array || kind == AbsKind::Null; }
  bool has_contents() const { return contents.has_value(); }
  // Kind, dims and contents all known: the value is determined exactly.
  bool is_exact() const;
};

// Abstraction of a concrete value. Closures become Top (the checker builds its
// own closure abstractions).
AbsType abstract_value(const RValue& v);
// The concrete value of an exact type.
std::optional<RValue> concrete_value(const AbsType& t);

// Sign of known numeric contents after truncation toward zero; NA elements do
// not count as witnesses.
SignInfo sign_of(const std::vector<Scalar>& elems);
SignInfo sign_join(SignInfo a, SignInfo b);

AbsType abs_join(const AbsType& a, const AbsType& b);

// Forgets contents (and the sign derived from them).
AbsType without_contents(AbsType t);

// Compact rendering for `check --types`, e.g. "vector<numeric>[3]",
// "array<numeric>[2x2]", "NULL", "function(a, b)", "top".
std::string to_string(const AbsType& t);

enum class AbsLookup { Found, Missing, Unbound };

// Flow-sensitive name -> AbsType frames, shaped like the runtime Env.
class AbsEnv {
 public:
  explicit AbsEnv(std::shared_ptr<AbsEnv> parent = nullptr) : parent_(std::move(parent)) {}

  AbsLookup lookup(const std::string& name, AbsType* out) const;
  bool is_bound(const std::string& name) const;
  void assign(const std::string& name, AbsType type);
  void bind_missing(const std::string& name);
  void clear();

 private:
  std::shared_ptr<AbsEnv> parent_;
  std::map<std::string, AbsType, std::less<>> bindings_;
  std::set<std::string, std::less<>> missing_;
};

}  // namespace rvec
