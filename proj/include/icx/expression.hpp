#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace icx {

/// Tree of ones, sums and products witnessing an upper bound on f(n).
/// Value-semantic handle over an immutable shared node, so subtrees can be
/// reused freely.  value() and ones() are cached at construction.
class Expression {
 public:
  enum class Kind { One, Sum, Product };

  static Expression one();
  static Expression sum(Expression left, Expression right);
  static Expression product(Expression left, Expression right);

  Kind kind() const { return node_->kind; }
  const mpz_class& value() const { return node_->value; }
  std::uint64_t ones() const { return node_->ones; }
  Expression left() const;
  Expression right() const;

  /// Fully parenthesised form, e.g. "(1+1)*(1+1+1)".  Sums of ones are
  /// flattened for readability.
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    mpz_class value;
    std::uint64_t ones;
    std::shared_ptr<const Node> left, right;
  };

  explicit Expression(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

class ComplexityTable;

/// Reconstructs an optimal representation of n from an exact table:
/// n = 1, then f(n) = f(n-1)+1, then a divisor split, then a summand split
/// up to kmax(n).  Throws std::logic_error if nothing matches (corrupt
/// table).  The result satisfies value == n and ones == f(n).
Expression witness(std::uint64_t n, const ComplexityTable& table);

}  // namespace icx
