#pragma once

#include <concepts>
#include <optional>
#include <utility>

namespace gyro {

/// Minimal capability set of a gyrogroup carrier: identity, addition,
/// negation and equality on one element type. Finite tables compare elements
/// exactly; continuous models compare within their configured tolerance.
template <typename C>
concept GyroCarrier =
    requires(const C& g, const typename C::element_type& a,
             const typename C::element_type& b) {
      { g.identity() } -> std::convertible_to<typename C::element_type>;
      { g.add(a, b) } -> std::convertible_to<typename C::element_type>;
      { g.neg(a) } -> std::convertible_to<typename C::element_type>;
      { g.eq(a, b) } -> std::convertible_to<bool>;
    };

template <GyroCarrier C>
using element_t = typename C::element_type;

/// gyr[a,b]c = neg(a + b) + (a + (b + c)).
///
/// Every gyration in this library is evaluated through this one expression;
/// closed forms (disk rotation, permutation tables) are cross-checks in the
/// test suites, never a second code path.
template <GyroCarrier C>
element_t<C> gyr(const C& g, const element_t<C>& a, const element_t<C>& b,
                 const element_t<C>& c) {
  return g.add(g.neg(g.add(a, b)), g.add(a, g.add(b, c)));
}

/// Coaddition: a [+] b = a + gyr[a, -b]b.
template <GyroCarrier C>
element_t<C> coadd(const C& g, const element_t<C>& a, const element_t<C>& b) {
  return g.add(a, gyr(g, a, g.neg(b), b));
}

/// The unique x with a + x = b, namely -a + b.
template <GyroCarrier C>
element_t<C> solve_left(const C& g, const element_t<C>& a,
                        const element_t<C>& b) {
  return g.add(g.neg(a), b);
}

/// The unique x with x + a = b, namely b [+] (-a).
template <GyroCarrier C>
element_t<C> solve_right(const C& g, const element_t<C>& a,
                         const element_t<C>& b) {
  return coadd(g, b, g.neg(a));
}

/// x -> a + x as a callable.
template <GyroCarrier C>
auto left_translation(const C& g, element_t<C> a) {
  return [&g, a = std::move(a)](const element_t<C>& x) { return g.add(a, x); };
}

/// x -> x + a as a callable.
template <GyroCarrier C>
auto right_translation(const C& g, element_t<C> a) {
  return [&g, a = std::move(a)](const element_t<C>& x) { return g.add(x, a); };
}

/// Carrier on X induced by a bijection phi : X -> carrier of `base`.
/// Operations are conjugated through phi, so X inherits every law of the
/// base carrier.
template <GyroCarrier C, typename X, typename Phi, typename PhiInv>
class TransportedCarrier {
 public:
  using element_type = X;

  TransportedCarrier(const C& base, Phi phi, PhiInv phi_inv)
      : base_(&base), phi_(std::move(phi)), phi_inv_(std::move(phi_inv)) {}

  X identity() const { return phi_inv_(base_->identity()); }
  X add(const X& a, const X& b) const {
    return phi_inv_(base_->add(phi_(a), phi_(b)));
  }
  X neg(const X& a) const { return phi_inv_(base_->neg(phi_(a))); }
  bool eq(const X& a, const X& b) const { return base_->eq(phi_(a), phi_(b)); }

 private:
  const C* base_;
  Phi phi_;
  PhiInv phi_inv_;
};

template <typename X, GyroCarrier C, typename Phi, typename PhiInv>
auto transported(const C& base, Phi phi, PhiInv phi_inv) {
  return TransportedCarrier<C, X, Phi, PhiInv>(base, std::move(phi),
                                               std::move(phi_inv));
}

/// First pair among `elements` violating a + b = gyr[a,b](b + a), if any.
template <GyroCarrier C, typename Range>
std::optional<std::pair<element_t<C>, element_t<C>>> gyrocommutativity_witness(
    const C& g, const Range& elements) {
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!g.eq(g.add(a, b), gyr(g, a, b, g.add(b, a))))
        return std::make_pair(a, b);
  return std::nullopt;
}

template <GyroCarrier C, typename Range>
bool is_gyrocommutative(const C& g, const Range& elements) {
  return !gyrocommutativity_witness(g, elements).has_value();
}

}  // namespace gyro
