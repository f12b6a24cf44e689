#pragma once

#include <filesystem>

#include "json.hpp"

#include "catlim/diagnostics.hpp"
#include "catlim/interchange.hpp"
#include "catlim/padic.hpp"

namespace catlim {

using Json = nlohmann::ordered_json;

// Category files: {"objects":[names], "morphisms":[{"name","dom","cod"}],
// "identities":{obj:mor}, "composition":[[g,f,gf],...]}. The identities map
// may be omitted entirely; identity morphisms are then synthesized and
// auto-named, and composition entries forced by the identity laws may be
// left out.
Json category_to_json(const FinCat& c);
FinCat category_from_json(const Json& j,
                          const SizeCap& cap = global_size_cap());

// Functors and natural transformations as explicit index mappings.
Json functor_to_json(const Functor& f);
Json nat_trans_to_json(const NatTrans& t);

// Diagram files: {"index": cat-or-path, "fibers": [cat-or-path,...],
// "transports": [{"morphism": name-or-index, "obj_map": [...],
// "mor_map": [...]},...]}. Identity transports may be omitted; transports of
// composites are filled in from the given generators before validation.
Json diagram_to_json(const CatDiagram& d);
CatDiagram diagram_from_json(const Json& j,
                             const std::filesystem::path& base_dir,
                             const SizeCap& cap = global_size_cap());

// Bidiagram files carry the factors alongside the underlying diagram data:
// {"I": cat, "J": cat, "index": product cat (optional), "fibers": [...],
// "transports": [...]}; the underlying keys follow the diagram format, so
// any tool that reads diagrams can consume the file unchanged.
Json bidiagram_to_json(const BiDiagram& b);
BiDiagram bidiagram_from_json(const Json& j,
                              const std::filesystem::path& base_dir,
                              const SizeCap& cap = global_size_cap());

Json retract_report_to_json(const RetractReport& r);
Json homset_report_to_json(const HomsetReport& r);
Json diagnostics_to_json(const FinCat& c, std::size_t nerve_k);

FinCat read_category_file(const std::filesystem::path& path,
                          const SizeCap& cap = global_size_cap());
CatDiagram read_diagram_file(const std::filesystem::path& path,
                             const SizeCap& cap = global_size_cap());
BiDiagram read_bidiagram_file(const std::filesystem::path& path,
                              const SizeCap& cap = global_size_cap());

}  // namespace catlim
