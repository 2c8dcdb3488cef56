#pragma once

// Algebraic numbers in towers of univariate quotient extensions.
//
// A tower node of height h is Q[t1..th]/(m1, ..., mh) where every mk is monic,
// of degree >= 2 and separable over the node below it. The quotient need not
// be a field: when an inversion meets a zero divisor the computation throws
// ZeroDivisorSplit, which carries the factorization of the offending level,
// and the caller re-runs on each branch (dynamic evaluation).
//
// An element stores its coordinates in the monomial basis t1^i1 ... th^ih,
// flattened so that the block for th^k is contiguous and has the size of the
// parent node. Promotion to a descendant node is therefore zero padding.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "asymvar/poly.hpp"
#include "asymvar/rational.hpp"

namespace asymvar {

class TowerNode;
using TowerPtr = std::shared_ptr<const TowerNode>;

class TowerElement {
 public:
  TowerElement() : c_(1) {}
  TowerElement(int v) : c_(1, Rational(v)) {}
  TowerElement(long v) : c_(1, Rational(v)) {}
  TowerElement(const Rational& q) : c_(1, q) {}
  /// `coeffs` must have exactly node->dim() entries.
  TowerElement(TowerPtr node, std::vector<Rational> coeffs);

  static TowerElement generator(const TowerPtr& node);

  const TowerPtr& node() const { return node_; }
  int height() const;
  std::span<const Rational> coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q, whatever node it is stored at.
  bool is_rational() const;
  /// Requires is_rational().
  Rational to_rational() const;

  /// Same value expressed at `to`, which must be a descendant of node().
  TowerElement promoted(const TowerPtr& to) const;
  /// Same value stored at the lowest node that can represent it.
  TowerElement simplified() const;

  /// Multiplicative inverse; throws ZeroDivisorSplit on a zero divisor and
  /// std::domain_error on zero.
  TowerElement inverse() const;
  TowerElement pow(unsigned e) const;

  TowerElement operator-() const;
  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator/(const TowerElement& a, const TowerElement& b) { return a * b.inverse(); }
  friend bool operator==(const TowerElement& a, const TowerElement& b);

  /// Polynomial in the generator names, e.g. "1 - t1" or "3/2".
  std::string to_string() const;
  /// True when to_string() has more than one term and needs parentheses
  /// inside a product.
  bool is_compound() const;

 private:
  TowerPtr node_;
  std::vector<Rational> c_;
};

inline bool is_zero(const TowerElement& x) { return x.is_zero(); }
inline TowerElement inverse(const TowerElement& x) { return x.inverse(); }
inline TowerElement exact_div(const TowerElement& a, const TowerElement& b) { return a * b.inverse(); }

/// Zero test that refuses to guess on zero divisors: returns true for exact
/// zero, false for a unit, and throws ZeroDivisorSplit otherwise.
bool certified_is_zero(const TowerElement& x);

using UniPoly = Poly<TowerElement>;

class TowerNode {
 public:
  /// `defining` must be monic of degree >= 2 with coefficients at `parent`
  /// (or below) and separable over it.
  static TowerPtr make(TowerPtr parent, UniPoly defining);

  const TowerPtr& parent() const { return parent_; }
  int height() const { return height_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  const UniPoly& defining() const { return defining_; }
  std::uint64_t serial() const { return serial_; }
  std::string generator_name() const { return "t" + std::to_string(height_); }

  /// Ancestors from height 1 up to this node.
  std::vector<const TowerNode*> chain() const;

  /// Raw coefficients of the defining polynomial, each of parent dimension.
  const std::vector<std::vector<Rational>>& defining_raw() const { return defining_raw_; }

  TowerNode(TowerPtr parent, UniPoly defining, std::uint64_t serial);

 private:
  TowerPtr parent_;
  UniPoly defining_;
  std::vector<std::vector<Rational>> defining_raw_;
  int height_;
  int degree_;
  std::size_t dim_;
  std::uint64_t serial_;
};

inline std::size_t node_dim(const TowerNode* n) { return n ? n->dim() : 1; }
inline int node_height(const TowerNode* n) { return n ? n->height() : 0; }

/// True when `a` is `b` or one of its ancestors; null is everyone's ancestor.
bool is_ancestor(const TowerNode* a, const TowerNode* b);
/// Deeper of the two nodes; throws std::logic_error if they lie on
/// different branches.
TowerPtr common_node(const TowerPtr& a, const TowerPtr& b);
/// Like common_node but reports incompatibility instead of throwing.
bool compatible(const TowerPtr& a, const TowerPtr& b);
/// The ancestor of `n` (inclusive) with the given height; null for 0.
TowerPtr ancestor_at(const TowerPtr& n, int height);

/// Extends `base` by a root of `defining`, which must be monic, separable and
/// of degree >= 2. Throws TowerDepthExceeded when the new height would exceed
/// `height_limit`.
TowerPtr adjoin(const TowerPtr& base, const UniPoly& defining, int height_limit);

/// Lines "t1: t1^2 - t1 + 1 = 0" for every level of the node's chain.
std::vector<std::string> describe_tower(const TowerPtr& node);

/// Ring homomorphism from a source tower onto one branch of a split.
/// Elements below the split height are left unchanged.
class TowerMap {
 public:
  TowerMap(TowerPtr source, TowerPtr target, int split_height,
           std::vector<TowerElement> images);

  const TowerPtr& source() const { return source_; }
  const TowerPtr& target() const { return target_; }

  TowerElement operator()(const TowerElement& x) const;
  UniPoly operator()(const UniPoly& p) const;

 private:
  TowerElement map_raw(int height, std::span<const Rational> c) const;

  TowerPtr source_;
  TowerPtr target_;
  int split_height_;
  // images_[h - split_height_] is the image of the generator at height h.
  std::vector<TowerElement> images_;
  std::vector<TowerPtr> source_chain_;  // indexed by height, 0 unused
};

/// Thrown when an inversion hits a zero divisor. The level at node() has
/// defining polynomial first * second with coprime monic factors.
class ZeroDivisorSplit : public std::exception {
 public:
  ZeroDivisorSplit(TowerPtr node, UniPoly first, UniPoly second);

  const TowerPtr& node() const { return node_; }
  const UniPoly& first() const { return first_; }
  const UniPoly& second() const { return second_; }

  /// One map per factor, from `target` (node() or a descendant of it) to the
  /// corresponding branch tower.
  std::vector<TowerMap> branches(const TowerPtr& target) const;

  const char* what() const noexcept override { return message_.c_str(); }

 private:
  TowerPtr node_;
  UniPoly first_;
  UniPoly second_;
  std::string message_;
};

/// String form of a univariate polynomial over a tower in variable `var`.
std::string to_string(const UniPoly& p, const std::string& var);

}  // namespace asymvar
