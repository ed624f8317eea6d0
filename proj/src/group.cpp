#include "sumfree/group.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "sumfree/error.hpp"

namespace sumfree {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidModulus: return "invalid-modulus";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kInvalidElement: return "invalid-element";
    case ErrorCode::kMismatch: return "mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kNotApplicable: return "not-applicable";
    case ErrorCode::kInvalidShard: return "invalid-shard";
    case ErrorCode::kInvalidPrime: return "invalid-prime";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

GroupSpec make_group(std::vector<std::uint64_t> moduli, std::uint64_t order_cap) {
  GroupSpec g;
  std::uint64_t order = 1;
  for (auto m : moduli) {
    if (m <= 1)
      throw Error(ErrorCode::kInvalidModulus,
                  "modulus must be at least 2, got " + std::to_string(m));
    if (order > std::numeric_limits<std::uint64_t>::max() / m)
      throw Error(ErrorCode::kCapacity, "group order overflows 64 bits");
    order *= m;
  }
  if (order > order_cap)
    throw Error(ErrorCode::kCapacity, "group order " + std::to_string(order) +
                                          " exceeds cap " + std::to_string(order_cap));
  for (auto m : moduli) {
    for (auto [p, e] : factorize(m)) {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < e; ++i) v *= p;
      g.decomposition_.push_back({p, e, v});
    }
  }
  std::sort(g.decomposition_.begin(), g.decomposition_.end());
  g.moduli_ = std::move(moduli);
  g.order_ = order;
  return g;
}

std::vector<std::uint64_t> GroupSpec::coords(Element e) const {
  if (!contains(e))
    throw Error(ErrorCode::kInvalidElement, "element index " + std::to_string(e.index) +
                                                " out of range for " + label());
  std::vector<std::uint64_t> c(moduli_.size());
  auto idx = e.index;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    c[i] = idx % moduli_[i];
    idx /= moduli_[i];
  }
  return c;
}

Element GroupSpec::element(std::span<const std::uint64_t> coords) const {
  if (coords.size() != moduli_.size())
    throw Error(ErrorCode::kInvalidElement, "coordinate count does not match " + label());
  std::uint64_t idx = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    if (coords[i] >= moduli_[i])
      throw Error(ErrorCode::kInvalidElement,
                  "coordinate " + std::to_string(coords[i]) + " out of range for modulus " +
                      std::to_string(moduli_[i]));
    idx = idx * moduli_[i] + coords[i];
  }
  return {idx};
}

Element GroupSpec::element(std::uint64_t index) const {
  Element e{index};
  if (!contains(e))
    throw Error(ErrorCode::kInvalidElement,
                "element index " + std::to_string(index) + " out of range for " + label());
  return e;
}

std::string GroupSpec::label() const {
  if (moduli_.empty()) return "C1";
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += 'x';
    s += 'C' + std::to_string(moduli_[i]);
  }
  return s;
}

Element identity(const GroupSpec&) { return {0}; }

namespace {

template <typename Op>
Element componentwise(const GroupSpec& g, Element a, Element b, Op op) {
  auto ca = g.coords(a);
  auto cb = g.coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = op(ca[i], cb[i], g.moduli()[i]);
  return g.element(ca);
}

}  // namespace

Element add(const GroupSpec& g, Element a, Element b) {
  return componentwise(g, a, b, [](auto x, auto y, auto m) { return (x + y) % m; });
}

Element sub(const GroupSpec& g, Element a, Element b) {
  return componentwise(g, a, b, [](auto x, auto y, auto m) { return (x + m - y) % m; });
}

Element neg(const GroupSpec& g, Element a) { return sub(g, identity(g), a); }

Element multiply(const GroupSpec& g, std::uint64_t k, Element a) {
  auto c = g.coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto m = g.moduli()[i];
    c[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(k % m) * c[i]) % m);
  }
  return g.element(c);
}

std::uint64_t element_order(const GroupSpec& g, Element a) {
  auto c = g.coords(a);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto m = g.moduli()[i];
    ord = std::lcm(ord, m / std::gcd(m, c[i]));
  }
  return ord;
}

std::uint64_t exponent(const GroupSpec& g) {
  std::uint64_t e = 1;
  for (auto m : g.moduli()) e = std::lcm(e, m);
  return e;
}

unsigned even_component_count(const GroupSpec& g) {
  return static_cast<unsigned>(std::count_if(g.decomposition().begin(), g.decomposition().end(),
                                             [](const PrimePower& f) { return f.prime == 2; }));
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  for (auto i : members_.indices()) out.push_back({i});
  return out;
}

Subgroup make_subgroup(const GroupSpec& g, Bitset members) {
  if (members.size() != g.order())
    throw Error(ErrorCode::kMismatch, "subgroup bit array does not match group order");
  if (!members.test(0)) throw Error(ErrorCode::kPrecondition, "subgroup lacks the identity");
  auto elems = members.indices();
  for (auto a : elems) {
    if (!members.test(neg(g, {a}).index))
      throw Error(ErrorCode::kPrecondition, "subgroup not closed under negation");
    for (auto b : elems)
      if (!members.test(add(g, {a}, {b}).index))
        throw Error(ErrorCode::kPrecondition, "subgroup not closed under addition");
  }
  if (g.order() % elems.size() != 0)
    throw Error(ErrorCode::kPrecondition, "subgroup order does not divide group order");
  Subgroup h;
  h.parent_ = g;
  h.members_ = std::move(members);
  return h;
}

Subgroup generated_subgroup(const GroupSpec& g, std::span<const Element> gens) {
  for (auto x : gens)
    if (!g.contains(x))
      throw Error(ErrorCode::kInvalidElement, "generator out of range for " + g.label());
  Bitset members(g.order());
  std::vector<std::uint64_t> frontier{0};
  members.set(0);
  // Finite group: closure under adding generators already gives negation.
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (auto s : gens) {
      auto y = add(g, {x}, s).index;
      if (!members.test(y)) {
        members.set(y);
        frontier.push_back(y);
      }
    }
  }
  return make_subgroup(g, std::move(members));
}

std::vector<Subgroup> index2_subgroups(const GroupSpec& g) {
  std::vector<std::size_t> even_axes;
  for (std::size_t i = 0; i < g.moduli().size(); ++i)
    if (g.moduli()[i] % 2 == 0) even_axes.push_back(i);

  std::vector<Subgroup> out;
  if (even_axes.empty()) return out;
  const std::uint64_t characters = std::uint64_t{1} << even_axes.size();
  for (std::uint64_t chi = 1; chi < characters; ++chi) {
    Bitset kernel(g.order());
    for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
      auto c = g.coords({idx});
      unsigned parity = 0;
      for (std::size_t k = 0; k < even_axes.size(); ++k)
        if ((chi >> k) & 1u) parity ^= static_cast<unsigned>(c[even_axes[k]] & 1u);
      if (parity == 0) kernel.set(idx);
    }
    out.push_back(make_subgroup(g, std::move(kernel)));
  }
  return out;
}

namespace {

// Partitions of n into parts, each list descending, in reverse
// lexicographic order: [n], [n-1,1], ...
void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "group order must be positive");
  std::vector<std::vector<std::uint64_t>> choices{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& prefix : choices) {
      for (const auto& part : parts) {
        auto moduli = prefix;
        for (auto k : part) {
          std::uint64_t v = 1;
          for (unsigned i = 0; i < k; ++i) v *= p;
          moduli.push_back(v);
        }
        next.push_back(std::move(moduli));
      }
    }
    choices = std::move(next);
  }
  std::vector<GroupSpec> out;
  out.reserve(choices.size());
  for (auto& m : choices) out.push_back(make_group(std::move(m), std::numeric_limits<std::uint64_t>::max()));
  return out;
}

}  // namespace sumfree
