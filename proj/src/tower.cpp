#include "asymvar/tower.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace asymvar {

namespace {

using Vec = std::vector<Rational>;

std::atomic<std::uint64_t> next_serial{1};

bool all_zero(const Rational* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(p[i]) != 0) return false;
  return true;
}

Vec mul_raw(const TowerNode* node, const Rational* a, const Rational* b) {
  if (!node) return Vec{Rational(a[0] * b[0])};
  const TowerNode* parent = node->parent().get();
  const std::size_t pd = node_dim(parent);
  const int d = node->degree();
  std::vector<Vec> prod(static_cast<std::size_t>(2 * d - 1), Vec(pd));
  std::vector<bool> az(static_cast<std::size_t>(d)), bz(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    az[i] = all_zero(a + i * pd, pd);
    bz[i] = all_zero(b + i * pd, pd);
  }
  for (int i = 0; i < d; ++i) {
    if (az[i]) continue;
    for (int j = 0; j < d; ++j) {
      if (bz[j]) continue;
      Vec p = mul_raw(parent, a + i * pd, b + j * pd);
      Vec& dst = prod[static_cast<std::size_t>(i + j)];
      for (std::size_t k = 0; k < pd; ++k) dst[k] += p[k];
    }
  }
  const auto& m = node->defining_raw();
  for (int k = 2 * d - 2; k >= d; --k) {
    const Vec& c = prod[static_cast<std::size_t>(k)];
    if (all_zero(c.data(), pd)) continue;
    for (int i = 0; i < d; ++i) {
      if (all_zero(m[static_cast<std::size_t>(i)].data(), pd)) continue;
      Vec p = mul_raw(parent, c.data(), m[static_cast<std::size_t>(i)].data());
      Vec& dst = prod[static_cast<std::size_t>(k - d + i)];
      for (std::size_t q = 0; q < pd; ++q) dst[q] -= p[q];
    }
  }
  Vec out;
  out.reserve(pd * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    out.insert(out.end(), prod[static_cast<std::size_t>(i)].begin(), prod[static_cast<std::size_t>(i)].end());
  return out;
}

// Splits an element at `node` into its t_h-coefficients at the parent.
UniPoly to_blocks(const TowerPtr& node, std::span<const Rational> c) {
  const TowerPtr& parent = node->parent();
  const std::size_t pd = node_dim(parent.get());
  std::vector<TowerElement> blocks;
  for (int k = 0; k < node->degree(); ++k) {
    Vec b(c.begin() + static_cast<std::ptrdiff_t>(k * pd), c.begin() + static_cast<std::ptrdiff_t>((k + 1) * pd));
    blocks.emplace_back(parent, std::move(b));
  }
  return UniPoly(std::move(blocks));
}

Vec from_blocks(const TowerPtr& node, const UniPoly& p) {
  const TowerPtr& parent = node->parent();
  const std::size_t pd = node_dim(parent.get());
  Vec out(node->dim());
  for (int k = 0; k <= p.degree(); ++k) {
    TowerElement b = p.coeffs()[static_cast<std::size_t>(k)].promoted(parent);
    auto bc = b.coeffs();
    std::copy(bc.begin(), bc.end(), out.begin() + static_cast<std::ptrdiff_t>(k * pd));
  }
  return out;
}

std::string monomial_name(const TowerNode* node, std::size_t index) {
  if (!node) return {};
  std::vector<const TowerNode*> chain = node->chain();
  std::string out;
  for (const TowerNode* level : chain) {
    const auto d = static_cast<std::size_t>(level->degree());
    std::size_t e = index % d;
    index /= d;
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += level->generator_name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// TowerNode

TowerNode::TowerNode(TowerPtr parent, UniPoly defining, std::uint64_t serial)
    : parent_(std::move(parent)), defining_(std::move(defining)), serial_(serial) {
  height_ = node_height(parent_.get()) + 1;
  degree_ = defining_.degree();
  dim_ = node_dim(parent_.get()) * static_cast<std::size_t>(degree_);
  for (const auto& c : defining_.coeffs()) {
    TowerElement e = c.promoted(parent_);
    defining_raw_.emplace_back(e.coeffs().begin(), e.coeffs().end());
  }
}

TowerPtr TowerNode::make(TowerPtr parent, UniPoly defining) {
  if (defining.degree() < 2) throw std::invalid_argument("tower level needs degree >= 2");
  if (!defining.lc().is_one()) throw std::invalid_argument("tower level must be monic");
  for (const auto& c : defining.coeffs())
    if (!is_ancestor(c.node().get(), parent.get()))
      throw std::logic_error("defining polynomial does not live over the parent node");
  return std::make_shared<const TowerNode>(std::move(parent), std::move(defining), next_serial++);
}

std::vector<const TowerNode*> TowerNode::chain() const {
  std::vector<const TowerNode*> out(static_cast<std::size_t>(height_));
  const TowerNode* n = this;
  for (int h = height_; h >= 1; --h, n = n->parent_.get()) out[static_cast<std::size_t>(h - 1)] = n;
  return out;
}

bool is_ancestor(const TowerNode* a, const TowerNode* b) {
  if (!a) return true;
  while (b && b->height() > a->height()) b = b->parent().get();
  return a == b;
}

TowerPtr common_node(const TowerPtr& a, const TowerPtr& b) {
  if (is_ancestor(a.get(), b.get())) return b;
  if (is_ancestor(b.get(), a.get())) return a;
  throw std::logic_error("elements from incompatible towers");
}

bool compatible(const TowerPtr& a, const TowerPtr& b) {
  return is_ancestor(a.get(), b.get()) || is_ancestor(b.get(), a.get());
}

TowerPtr ancestor_at(const TowerPtr& n, int height) {
  if (height > node_height(n.get())) throw std::logic_error("ancestor_at above node");
  TowerPtr cur = n;
  while (node_height(cur.get()) > height) cur = cur->parent();
  return cur;
}

TowerPtr adjoin(const TowerPtr& base, const UniPoly& defining, int height_limit) {
  if (node_height(base.get()) + 1 > height_limit)
    throw TowerDepthExceeded("adjoining a root of degree " + std::to_string(defining.degree()) +
                             " would exceed the tower height limit " + std::to_string(height_limit));
  return TowerNode::make(base, defining);
}

std::vector<std::string> describe_tower(const TowerPtr& node) {
  std::vector<std::string> out;
  if (!node) return out;
  for (const TowerNode* level : node->chain())
    out.push_back(level->generator_name() + ": " + to_string(level->defining(), level->generator_name()) + " = 0");
  return out;
}

// ---------------------------------------------------------------------------
// TowerElement

TowerElement::TowerElement(TowerPtr node, std::vector<Rational> coeffs)
    : node_(std::move(node)), c_(std::move(coeffs)) {
  if (c_.size() != node_dim(node_.get())) throw std::invalid_argument("coefficient count does not match tower");
}

TowerElement TowerElement::generator(const TowerPtr& node) {
  Vec c(node->dim());
  c[node_dim(node->parent().get())] = 1;
  return TowerElement(node, std::move(c));
}

int TowerElement::height() const { return node_height(node_.get()); }

bool TowerElement::is_zero() const { return all_zero(c_.data(), c_.size()); }

bool TowerElement::is_one() const { return c_[0] == 1 && all_zero(c_.data() + 1, c_.size() - 1); }

bool TowerElement::is_rational() const { return all_zero(c_.data() + 1, c_.size() - 1); }

Rational TowerElement::to_rational() const {
  if (!is_rational()) throw std::logic_error("tower element is not rational");
  return c_[0];
}

TowerElement TowerElement::promoted(const TowerPtr& to) const {
  if (to == node_) return *this;
  if (!is_ancestor(node_.get(), to.get())) throw std::logic_error("promotion to a non-descendant node");
  TowerElement r;
  r.node_ = to;
  r.c_ = c_;
  r.c_.resize(node_dim(to.get()));
  return r;
}

TowerElement TowerElement::simplified() const {
  std::size_t used = c_.size();
  while (used > 1 && sgn(c_[used - 1]) == 0) --used;
  TowerPtr n = node_;
  while (n && node_dim(n->parent().get()) >= used) n = n->parent();
  if (n == node_) return *this;
  TowerElement r;
  r.node_ = n;
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(node_dim(n.get())));
  return r;
}

TowerElement TowerElement::operator-() const {
  TowerElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  if (node_ != o.node_) {
    TowerPtr n = common_node(node_, o.node_);
    if (n != node_) *this = promoted(n);
    if (n != o.node_) return *this += o.promoted(n);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  if (node_ != o.node_) {
    TowerPtr n = common_node(node_, o.node_);
    if (n != node_) *this = promoted(n);
    if (n != o.node_) return *this -= o.promoted(n);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  if (!a.node_ || a.is_rational()) {
    TowerElement r = b;
    if (!is_ancestor(a.node_.get(), b.node_.get()) && compatible(a.node_, b.node_)) r = r.promoted(a.node_);
    const Rational s = a.c_[0];
    for (auto& c : r.c_) c *= s;
    return r;
  }
  if (!b.node_ || b.is_rational()) return b * a;
  TowerPtr n = common_node(a.node_, b.node_);
  const TowerElement& x = a.node_ == n ? a : a.promoted(n);
  const TowerElement& y = b.node_ == n ? b : b.promoted(n);
  return TowerElement(n, mul_raw(n.get(), x.c_.data(), y.c_.data()));
}

TowerElement& TowerElement::operator*=(const TowerElement& o) { return *this = *this * o; }

bool operator==(const TowerElement& a, const TowerElement& b) {
  if (a.node_ == b.node_) return a.c_ == b.c_;
  if (compatible(a.node_, b.node_)) {
    TowerPtr n = common_node(a.node_, b.node_);
    return a.promoted(n).c_ == b.promoted(n).c_;
  }
  TowerElement x = a.simplified(), y = b.simplified();
  if (!compatible(x.node_, y.node_)) throw std::logic_error("comparing elements of incompatible towers");
  TowerPtr n = common_node(x.node_, y.node_);
  return x.promoted(n).c_ == y.promoted(n).c_;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!node_) return TowerElement(Rational(1) / c_[0]);
  TowerElement s = simplified();
  if (s.node_ != node_) return s.inverse();
  UniPoly a = to_blocks(node_, c_);
  auto [g, cof] = half_ext_gcd(a, node_->defining());
  if (g.degree() == 0) return TowerElement(node_, from_blocks(node_, cof));
  UniPoly other = divrem(node_->defining(), g).first;
  throw ZeroDivisorSplit(node_, g, other);
}

TowerElement TowerElement::pow(unsigned e) const {
  TowerElement result(1);
  TowerElement b = *this;
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return result;
}

bool TowerElement::is_compound() const {
  int nz = 0;
  for (const auto& c : c_)
    if (sgn(c) != 0) ++nz;
  return nz > 1;
}

std::string TowerElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    std::string mono = monomial_name(node_.get(), i);
    Rational mag = abs(c);
    std::string term;
    if (mono.empty()) term = mag.get_str();
    else if (mag == 1) term = mono;
    else term = mag.get_str() + "*" + mono;
    if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + term;
    else out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

bool certified_is_zero(const TowerElement& x) {
  if (x.is_zero()) return true;
  (void)x.inverse();
  return false;
}

// ---------------------------------------------------------------------------
// Splits

ZeroDivisorSplit::ZeroDivisorSplit(TowerPtr node, UniPoly first, UniPoly second)
    : node_(std::move(node)), first_(std::move(first)), second_(std::move(second)) {
  const std::string var = node_->generator_name();
  message_ = "zero divisor at " + var + ": (" + asymvar::to_string(first_, var) + ")*(" +
             asymvar::to_string(second_, var) + ")";
}

std::vector<TowerMap> ZeroDivisorSplit::branches(const TowerPtr& target) const {
  if (!is_ancestor(node_.get(), target.get())) throw std::logic_error("split target is not above the split node");
  const int h = node_->height();
  std::vector<TowerMap> out;
  for (const UniPoly* f : {&first_, &second_}) {
    TowerPtr cur;
    std::vector<TowerElement> images;
    if (f->degree() == 1) {
      cur = node_->parent();
      images.push_back(-f->coeff(0));
    } else {
      cur = TowerNode::make(node_->parent(), *f);
      images.push_back(TowerElement::generator(cur));
    }
    for (int k = h + 1; k <= target->height(); ++k) {
      TowerPtr src = ancestor_at(target, k);
      TowerMap partial(src->parent(), cur, h, images);
      cur = TowerNode::make(cur, partial(src->defining()));
      images.push_back(TowerElement::generator(cur));
    }
    out.emplace_back(target, cur, h, std::move(images));
  }
  return out;
}

TowerMap::TowerMap(TowerPtr source, TowerPtr target, int split_height, std::vector<TowerElement> images)
    : source_(std::move(source)), target_(std::move(target)), split_height_(split_height), images_(std::move(images)) {
  const int hs = node_height(source_.get());
  source_chain_.resize(static_cast<std::size_t>(hs) + 1);
  TowerPtr cur = source_;
  for (int h = hs; h >= 1; --h, cur = cur->parent()) source_chain_[static_cast<std::size_t>(h)] = cur;
}

TowerElement TowerMap::map_raw(int height, std::span<const Rational> c) const {
  if (height < split_height_) return TowerElement(source_chain_[static_cast<std::size_t>(height)], Vec(c.begin(), c.end()));
  const TowerPtr& node = source_chain_[static_cast<std::size_t>(height)];
  const std::size_t pd = node_dim(node->parent().get());
  const TowerElement& img = images_[static_cast<std::size_t>(height - split_height_)];
  TowerElement acc;
  for (int k = node->degree() - 1; k >= 0; --k)
    acc = acc * img + map_raw(height - 1, c.subspan(static_cast<std::size_t>(k) * pd, pd));
  return acc;
}

TowerElement TowerMap::operator()(const TowerElement& x) const {
  const int hx = x.height();
  if (hx < split_height_) {
    if (!is_ancestor(x.node().get(), source_.get())) throw std::logic_error("mapping an element outside the source tower");
    return x;
  }
  if (hx > node_height(source_.get()) || source_chain_[static_cast<std::size_t>(hx)] != x.node())
    throw std::logic_error("mapping an element outside the source tower");
  return map_raw(hx, x.coeffs());
}

UniPoly TowerMap::operator()(const UniPoly& p) const {
  std::vector<TowerElement> c;
  c.reserve(p.coeffs().size());
  for (const auto& e : p.coeffs()) c.push_back((*this)(e));
  return UniPoly(std::move(c));
}

// ---------------------------------------------------------------------------

}  // namespace asymvar
