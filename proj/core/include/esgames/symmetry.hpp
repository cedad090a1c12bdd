#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esgames/event_map.hpp"

namespace esgames {

/// Index of a group element in its group's tables.
using Elem = std::uint32_t;

/// A finite group materialised as full tables: mul(a, b) = a·b.
class FiniteGroup {
 public:
  FiniteGroup();
  /// Tables are taken as given; use validate_group to check the axioms.
  FiniteGroup(std::vector<std::string> names, std::vector<Elem> mul, Elem unit, std::vector<Elem> inv);
  /// Derives unit and inverses from a multiplication table. Throws InputError
  /// when the table is malformed or has no two-sided unit or inverses.
  static FiniteGroup from_table(std::vector<std::string> names, std::vector<Elem> mul);
  static FiniteGroup trivial();

  std::size_t order() const { return names_.size(); }
  Elem unit() const { return unit_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::vector<Elem>& inv_table() const { return inv_; }
  std::optional<Elem> find(std::string_view name) const;
  bool is_trivial() const { return order() == 1; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Elem> mul_;
  Elem unit_ = 0;
  std::vector<Elem> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Associativity, two-sided unit, two-sided inverses, closure of the tables.
Report validate_group(const FiniteGroup& g);

/// G × H with (g,h) at index g·|H| + h and name "(g,h)".
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
inline Elem product_index(const FiniteGroup& h, Elem a, Elem b) {
  return static_cast<Elem>(a * h.order() + b);
}
inline std::pair<Elem, Elem> product_components(const FiniteGroup& h, Elem ab) {
  return {static_cast<Elem>(ab / h.order()), static_cast<Elem>(ab % h.order())};
}

/// Whether table is a homomorphism from `from` to `to`.
bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Elem>& table);

/// A left action of a group on an event structure by automorphisms.
struct GroupAction {
  GroupPtr group;
  EventStructurePtr target;
  std::vector<EventMap> act;

  const EventMap& operator()(Elem g) const { return act[g]; }
  friend bool operator==(const GroupAction& a, const GroupAction& b) {
    return *a.group == *b.group && *a.target == *b.target && a.act == b.act;
  }
};

GroupAction trivial_action(const EventStructurePtr& es);
/// act(unit) = id, act(gh) = act(g) ∘ act(h), every act(g) an automorphism.
Report validate_action(const GroupAction& a);
/// Distinct elements induce distinct automorphisms.
bool is_faithful(const GroupAction& a);

struct GeneratedGroup {
  GroupPtr group;
  GroupAction action;
};

/// Closes a set of automorphisms under composition. Elements are named by
/// the shortlex-least word in the generators ("e" for the unit, "s.t" for
/// act(s) ∘ act(t)). The action is faithful by construction. Throws
/// InputError when a generator is not an automorphism and BoundExceeded
/// when the group grows past limits.max_group_order.
GeneratedGroup group_from_generators(const EventStructurePtr& es, const std::vector<EventMap>& generators,
                                     const std::vector<std::string>& generator_names = {},
                                     const Limits& limits = Limits::defaults());

struct AutomorphismClass {
  bool negative = false;
  bool positive = false;
};

/// θ is negative iff whenever it fixes x pointwise and x ⊆+ y, it fixes y
/// pointwise; positive dually with ⊆-. All configurations are considered,
/// including ∅. Throws InputError when θ is not an automorphism.
AutomorphismClass classify_automorphism(const EventStructure& es, const EventMap& theta);

/// Every element of the action must be a negative (resp. positive)
/// automorphism; violations name the offending element.
Report validate_action_polarity(const GroupAction& a, Polarity required);

/// A distributive law λ : N × P → P × N, presented by its table.
struct DistributiveLaw {
  GroupPtr n_group;
  GroupPtr p_group;
  /// entry α·|P| + β holds λ(α, β) = (β', α').
  std::vector<std::pair<Elem, Elem>> table;

  std::pair<Elem, Elem> operator()(Elem alpha, Elem beta) const {
    return table[alpha * p_group->order() + beta];
  }
  friend bool operator==(const DistributiveLaw& a, const DistributiveLaw& b) {
    return *a.n_group == *b.n_group && *a.p_group == *b.p_group && a.table == b.table;
  }
};

/// λ(α, β) = (β, α): the law of two commuting actions.
DistributiveLaw commuting_law(const GroupPtr& n_group, const GroupPtr& p_group);

/// Two unit laws and the two multiplication laws, by full table scan.
Report validate_distributive_law(const DistributiveLaw& law);

/// For faithful actions on the same structure with permuting images, the
/// unique λ with act(α) ∘ act(β) = act(β') ∘ act(α'). Throws
/// FactorizationError("not permuting subgroups") when some αβ has no
/// factorization and FactorizationError("non-trivial intersection") when a
/// factorization is not unique.
DistributiveLaw derive_law_from_factorization(const GroupAction& n_action, const GroupAction& p_action);

/// Invert-and-swap G × H → H × G, (g, h) ↦ (inv h, inv g).
std::pair<Elem, Elem> invert_and_swap(const FiniteGroup& first, const FiniteGroup& second, Elem g, Elem h);

/// isw for a law's groups, P × N → N × P, as a table indexed β·|N| + α.
std::vector<std::pair<Elem, Elem>> isw(const DistributiveLaw& law);

}  // namespace esgames
