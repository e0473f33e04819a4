#pragma once

// Isomorphism of families under product-form maps of [n]x[k] (the wreath
// product S_k wr S_n), canonical forms, and classification against the
// H1 / H2 / star constructions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "signedfam/core.hpp"
#include "signedfam/covers.hpp"
#include "signedfam/wreath.hpp"

namespace signedfam {

struct CanonicalLimits {
  int max_n = 8;
  int max_k = 4;
  std::size_t max_members = 10'000;
};

/// {σ(F) : F ∈ fam}. ParameterError when the map's shape differs from (n,k).
Family apply_map(const WreathMap& map, const Family& fam);

struct CanonicalForm {
  /// Canonical JSON of the least image of fam under the group.
  std::string bytes;
  /// Lowercase SHA-256 hex of bytes.
  std::string digest;
  /// Sends fam onto the canonical image.
  WreathMap map;
};

/// Exact minimization over the group: columns are placed one at a time and
/// partial labelings reaching the same intermediate family are merged.
/// CapacityError beyond the limits.
CanonicalForm canonical_form(const Family& fam, const CanonicalLimits& limits = {});

struct IsomorphismResult {
  bool isomorphic = false;
  /// Sends a onto b when isomorphic.
  std::optional<WreathMap> witness;
};

/// ParameterError when the families live over different parameters.
IsomorphismResult are_isomorphic(const Family& a, const Family& b, const CanonicalLimits& limits = {});

enum class Kind { h1, h2, star, other };

struct ClassificationResult {
  Kind kind = Kind::other;
  /// ell for H1, c for H2, 0 otherwise.
  int parameter = 0;
  /// Sends the family onto the named construction (for a star: onto the star on M_t).
  std::optional<WreathMap> witness;
  CoverProfile diagnostics;

  std::string label() const;
};

/// Classifies maximal families of one parameter set, caching the canonical
/// forms of the candidate constructions.
class Classifier {
public:
  explicit Classifier(Params params, CanonicalLimits limits = {});

  /// ContractError unless fam is maximal t-intersecting over the classifier's params.
  ClassificationResult classify(const Family& fam);

  /// Same, for families already known to be maximal and t-intersecting.
  ClassificationResult classify_trusted(const Family& fam);

private:
  struct Candidate {
    Kind kind;
    int parameter;
    std::size_t size;
    std::optional<CanonicalForm> form; // computed on first use
    Family family;
  };

  Params params_;
  CanonicalLimits limits_;
  std::vector<Candidate> candidates_;
};

ClassificationResult classify(const Family& fam, const CanonicalLimits& limits = {});

} // namespace signedfam
