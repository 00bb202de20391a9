#pragma once

// Runtime value model: mode-tagged vectors and arrays whose elements may be
// NA, closures, and NULL.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rvec/diagnostics.hpp"
#include "rvec/syntax.hpp"

namespace rvec {

enum class Mode { Numeric, Logical, Character, Function };

std::string_view mode_name(Mode m);

// Least upper bound in logical < numeric < character. Function has no
// ordering with the atomic modes; callers reject it first.
Mode mode_lub(Mode a, Mode b);

// NA is its own tag and never a NaN payload.
struct NaTag {
  bool operator==(const NaTag&) const = default;
};

using Scalar = std::variant<NaTag, double, bool, std::string>;

inline bool is_na(const Scalar& s) { return std::holds_alternative<NaTag>(s); }
inline Scalar na() { return NaTag{}; }

// Whether `s` is NA or belongs to mode `m`.
bool scalar_fits(const Scalar& s, Mode m);

// Thrown by value-level operations; the interpreter attaches a source span.
class RError : public std::runtime_error {
 public:
  explicit RError(Condition cond) : std::runtime_error(cond.message), cond_(std::move(cond)) {}
  const Condition& condition() const { return cond_; }

 private:
  Condition cond_;
};

// Element conversions. to_numeric/to_logical throw RError for character input
// (E_NONNUMERIC / E_NONLOGICAL).
Scalar scalar_to_numeric(const Scalar& s);
Scalar scalar_to_logical(const Scalar& s);
Scalar scalar_to_character(const Scalar& s);
Scalar scalar_to_mode(const Scalar& s, Mode target);

struct Null {
  bool operator==(const Null&) const = default;
};

struct Vector {
  Mode mode = Mode::Logical;
  std::vector<Scalar> elems;
};

// Elements are stored column-major; product(dims) == elems.size().
struct Array {
  Mode mode = Mode::Numeric;
  std::vector<std::size_t> dims;
  std::vector<Scalar> elems;

  bool is_matrix() const { return dims.size() == 2; }
};

enum class Builtin { Combine, Array, Matrix, Mode, Length };

std::optional<Builtin> builtin_from_name(std::string_view name);
std::string_view builtin_name(Builtin b);

class Env;

struct Closure {
  std::vector<std::string> params;
  std::vector<ExprPtr> body;
  std::shared_ptr<Env> env;
  std::string source;  // text of the defining `function` expression
  std::optional<Builtin> builtin;
};

using RValue = std::variant<Null, Vector, Array, Closure>;

// Constructors that check mode homogeneity and the array product invariant.
RValue make_vector(Mode mode, std::vector<Scalar> elems);
RValue make_array(Mode mode, std::vector<std::size_t> dims, std::vector<Scalar> elems);
RValue num_vector(std::initializer_list<double> xs);
RValue lgl_vector(std::initializer_list<bool> xs);
RValue chr_vector(std::initializer_list<const char*> xs);

// Throws std::logic_error when an invariant is broken.
void check_invariants(const RValue& v);

// "numeric" | "logical" | "character" | "function" | "NULL"
std::string mode_of(const RValue& v);
std::size_t length_of(const RValue& v);

// Atomic mode of a vector/array, nullopt for NULL and closures.
std::optional<Mode> atomic_mode(const RValue& v);
// Flat element view; empty for NULL and closures.
const std::vector<Scalar>& elements(const RValue& v);
bool is_closure(const RValue& v);
bool is_null(const RValue& v);

// Container kind and dims preserved. Throw RError on character input.
RValue coerce_to_numeric(const RValue& v);
RValue coerce_to_logical(const RValue& v);

bool values_identical(const RValue& a, const RValue& b);

enum class LookupStatus { Found, Missing, Unbound };

// Lexically chained frames. Lookup searches innermost-out; assignment writes
// the innermost frame. Bindings hold values, so assignment copies.
class Env {
 public:
  explicit Env(std::shared_ptr<Env> parent = nullptr) : parent_(std::move(parent)) {}

  LookupStatus lookup(std::string_view name, const RValue** out) const;
  // Searches this frame and its ancestors.
  bool is_bound(std::string_view name) const;

  void assign(const std::string& name, RValue value);
  // Parameter with no supplied argument; referencing it is an error.
  void bind_missing(const std::string& name);

  const std::shared_ptr<Env>& parent() const { return parent_; }
  // Drops all bindings; used to break closure/frame reference cycles.
  void clear();

 private:
  std::shared_ptr<Env> parent_;
  std::map<std::string, RValue, std::less<>> bindings_;
  std::set<std::string, std::less<>> missing_;
};

}  // namespace rvec
