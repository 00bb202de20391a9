#pragma once

// Value-level semantics of the built-in vector operations. Errors are thrown
// as RError; warnings are appended to a sink in the order R would raise them.

#include <span>
#include <vector>

#include "rvec/values.hpp"

namespace rvec {

using Warnings = std::vector<Condition>;

struct RecycleResult {
  std::vector<Scalar> elems;
  bool was_nonmultiple = false;
};

// Cyclic extension of `elems` to `target` elements. Throws std::logic_error
// when elems is empty and target > 0.
RecycleResult recycle(std::span<const Scalar> elems, std::size_t target);

// c(...): concatenation with mode widening; an empty result is NULL.
RValue combine(std::span<const RValue> args);

// + - * / with NA propagation and recycling.
RValue elementwise_arith(BinaryOp op, const RValue& lhs, const RValue& rhs, Warnings& warnings);
// & | (Kleene logic) and the comparisons.
RValue elementwise_logical(BinaryOp op, const RValue& lhs, const RValue& rhs, Warnings& warnings);
RValue apply_binary(BinaryOp op, const RValue& lhs, const RValue& rhs, Warnings& warnings);

// Dims from a shape argument: a non-empty, NA-free container of numbers that
// are non-negative after truncation. Throws RError(E_BADDIMS).
std::vector<std::size_t> validate_dims(const RValue& shape);

RValue construct_array(const RValue& shape, const RValue& elems);
RValue construct_matrix(const RValue& shape, const RValue& elems, Warnings& warnings);

// One-dimensional subscripting over the flattened contents.
RValue index_get(const RValue& base, const RValue& sub);

struct AssignPolicy {
  // Grow the target with NA gaps on out-of-bounds positions instead of
  // raising E_OOB_ASSIGN.
  bool allow_growth = false;
};

// Returns the updated target value (`base[sub] <- repl`).
RValue index_assign(const RValue& base, const RValue& sub, const RValue& repl, AssignPolicy policy,
                    Warnings& warnings);

}  // namespace rvec
