#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumfree/bitset.hpp"

namespace sumfree {

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

// A cyclic factor C_{p^k} of the primary decomposition.
struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t value = 0;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// An element is identified by its mixed-radix index, first modulus least
// significant. Coordinates are recovered through the owning GroupSpec.
struct Element {
  std::uint64_t index = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Finite abelian group Z_{m1} x Z_{m2} x ... given by its ordered moduli.
class GroupSpec {
 public:
  GroupSpec() = default;  // trivial group

  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  std::uint64_t order() const noexcept { return order_; }
  // Sorted multiset of prime-power cyclic factors; a complete isomorphism
  // invariant.
  const std::vector<PrimePower>& decomposition() const noexcept { return decomposition_; }

  bool contains(Element e) const noexcept { return e.index < order_; }
  std::vector<std::uint64_t> coords(Element e) const;
  Element element(std::span<const std::uint64_t> coords) const;
  Element element(std::uint64_t index) const;

  bool isomorphic_to(const GroupSpec& other) const {
    return decomposition_ == other.decomposition_;
  }
  // "C4xC2"; the trivial group is "C1".
  std::string label() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  friend GroupSpec make_group(std::vector<std::uint64_t>, std::uint64_t);

  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
  std::vector<PrimePower> decomposition_;
};

// Throws kInvalidModulus for a modulus <= 1 and kCapacity when the order
// overflows 64 bits or exceeds order_cap.
GroupSpec make_group(std::vector<std::uint64_t> moduli,
                     std::uint64_t order_cap = kDefaultOrderCap);

Element identity(const GroupSpec& g);
Element add(const GroupSpec& g, Element a, Element b);
Element neg(const GroupSpec& g, Element a);
Element sub(const GroupSpec& g, Element a, Element b);
Element multiply(const GroupSpec& g, std::uint64_t k, Element a);

std::uint64_t element_order(const GroupSpec& g, Element a);
// lcm of the moduli.
std::uint64_t exponent(const GroupSpec& g);
// V(G): number of 2-power factors in the primary decomposition.
unsigned even_component_count(const GroupSpec& g);

// Members are a bit array over all canonical indices, identity included.
class Subgroup {
 public:
  const GroupSpec& parent() const noexcept { return parent_; }
  const Bitset& members() const noexcept { return members_; }
  bool contains(Element e) const { return e.index < members_.size() && members_.test(e.index); }
  std::size_t size() const noexcept { return members_.count(); }
  std::vector<Element> elements() const;

 private:
  friend Subgroup make_subgroup(const GroupSpec&, Bitset);

  GroupSpec parent_;
  Bitset members_;
};

// Validates identity, closure under addition and negation, and Lagrange;
// throws kPrecondition otherwise.
Subgroup make_subgroup(const GroupSpec& g, Bitset members);

Subgroup generated_subgroup(const GroupSpec& g, std::span<const Element> gens);

// The 2^V(G) - 1 kernels of the nonzero homomorphisms G -> Z_2.
std::vector<Subgroup> index2_subgroups(const GroupSpec& g);

// One representative per isomorphism class, moduli listed as prime powers
// (primes ascending, exponents descending within a prime).
std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n);

// Small number theory shared across modules.
bool is_prime(std::uint64_t n);
// Prime factorisation as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace sumfree
