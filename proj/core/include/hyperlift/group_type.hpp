#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlift/groups.hpp"
#include "hyperlift/presentation.hpp"

namespace hyperlift {

/// Catalog of named groups. Dihedral(n) has order 2n.
struct GroupType {
  enum class Kind { Cyclic, Dihedral, A4, S4, A5, DirectZ2, SL2_3, GL2_3, SL2_5, Vn, Hn, Un, Gn, W2, W3, Unknown };

  Kind kind = Kind::Unknown;
  int n = 0;
  std::shared_ptr<const GroupType> inner;
  /// Unknown only.
  int unknown_order = 0;
  std::string unknown_fingerprint;

  static GroupType cyclic(int n);
  static GroupType dihedral(int n);
  static GroupType simple(Kind k);
  static GroupType with_n(Kind k, int n);
  /// Z/2 x inner, canonicalized: Z2 x Z(odd n) is Z(2n), Z2 x D(odd n) is D(2n).
  static GroupType direct_z2(const GroupType& inner);
  static GroupType unknown(const FiniteGroup& g);

  /// Group order; presentation types use the coset-enumerated order.
  int order() const;
  bool constructible() const;
  bool is_presentation_type() const;
  std::string to_string() const;

  friend bool operator==(const GroupType& a, const GroupType& b);
};

/// Parses "Z(10)", "D(14)", "A4", "S4", "A5", "SL2(3)", "GL2(3)", "SL2(5)",
/// "Z2xA5", "V(6)", "H(n)", "U(n)", "G(n)", "W2", "W3".
GroupType parse_group_type(std::string_view text);

/// Concrete table for a constructible type. Throws InvalidInput for
/// Vn/Hn/Un/Gn/W2/W3 and Unknown.
const FiniteGroup& reference_group(const GroupType& t);

/// Relators of a presentation type.
std::vector<Word> presentation_relators(const GroupType& t);

struct PresentationInfo {
  GroupType type;
  std::string relators;
  /// The order assumed by the catalog (4n, 48, 96).
  int catalog_order = 0;
  /// Order found by coset enumeration.
  int enumerated_order = 0;
  bool verified() const { return catalog_order == enumerated_order; }
};

/// Catalog order against the enumerated order for one presentation type.
PresentationInfo presentation_info(const GroupType& t);

/// Catalog type of g, or Unknown(fingerprint). Presentation types are
/// matched only when their catalog order is confirmed by enumeration.
GroupType identify(const FiniteGroup& g);

/// Parses a product of catalog names such as "Z(3)xZ(3)" or "Q8" into a
/// table; "Z2" and "Q8" are accepted as extra atoms.
FiniteGroup parse_group_expression(std::string_view text);

}  // namespace hyperlift
