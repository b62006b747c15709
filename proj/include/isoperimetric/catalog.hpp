#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "isoperimetric/detail/masks.hpp"
#include "isoperimetric/error.hpp"
#include "isoperimetric/group.hpp"

namespace isoperimetric {

// Groups swept by the checkers. The abelian groups of order at most 16 are
// all present; the non-abelian list is a selection.
inline const std::vector<std::string>& default_manifest() {
  static const std::vector<std::string> specs = {
      "cyclic:1",
      "cyclic:2",
      "cyclic:3",
      "cyclic:4",
      "product:cyclic:2,cyclic:2",
      "cyclic:5",
      "cyclic:6",
      "symmetric:3",
      "cyclic:7",
      "cyclic:8",
      "product:cyclic:4,cyclic:2",
      "elementary:2^3",
      "dihedral:4",
      "quaternion:8",
      "cyclic:9",
      "elementary:3^2",
      "cyclic:10",
      "dihedral:5",
      "cyclic:11",
      "cyclic:12",
      "product:cyclic:6,cyclic:2",
      "dihedral:6",
      "alternating:4",
      "semidirect:3,4,2",
      "cyclic:13",
      "cyclic:14",
      "dihedral:7",
      "cyclic:15",
      "cyclic:16",
      "product:cyclic:8,cyclic:2",
      "product:cyclic:4,cyclic:4",
      "product:cyclic:4,elementary:2^2",
      "elementary:2^4",
      "dihedral:8",
      "product:dihedral:4,cyclic:2",
      "product:quaternion:8,cyclic:2",
      "semidirect:8,2,5",
      "semidirect:8,2,3",
      "semidirect:4,4,3",
      "dicyclic:4",
  };
  return specs;
}

struct CatalogEntry {
  std::string spec;
  FiniteGroup group;
};

// Manifest file: a JSON array of group specs, or {"groups": [...]}.
inline std::vector<std::string> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("manifest: cannot open '" + path + "'");
  try {
    nlohmann::json j;
    in >> j;
    const nlohmann::json& list = j.is_object() ? j.at("groups") : j;
    return list.get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError("manifest: malformed JSON in '" + path + "': " + e.what());
  }
}

// Catalog groups of order at most max_order, in manifest order.
inline std::vector<CatalogEntry> build_catalog(int max_order,
                                               const std::vector<std::string>& specs = default_manifest()) {
  std::vector<CatalogEntry> out;
  for (const auto& spec : specs) {
    FiniteGroup g = make_group(spec);
    if (g.order() <= max_order) out.push_back({spec, std::move(g)});
  }
  return out;
}

// Every S with 1 in S and <S> = G, as masks in increasing order.
inline std::vector<detail::Mask> generating_sets(const FiniteGroup& g) {
  const detail::MaskGroup mg(g);
  const int n = g.order();
  std::vector<detail::Mask> out;
  if (n > 30) throw PreconditionError("generating_sets: limited to groups of order 30");
  const detail::Mask rest = detail::full_mask(n) & ~detail::Mask{1};
  // Enumerate the subsets of the non-identity elements.
  for (detail::Mask sub = 0;; sub = (sub - rest) & rest) {
    const detail::Mask s = sub | 1;
    if (mg.generated(s) == mg.full) out.push_back(s);
    if (sub == rest) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isoperimetric
