#pragma once

#include "dcat/nerve.hpp"
#include "dcat/operad.hpp"
#include "dcat/sset.hpp"

namespace dcat {

/// SSX: finite simplicial sets as JSON. Top-level object with "dims"
/// (dimension -> array of ids), "faces" (id -> array of {"degens","base"}),
/// and optional "labels". Serialization is byte-deterministic under the
/// canonical ordering.
std::string write_ssx(const SSet& s);
SSetPtr read_ssx(const std::string& text);

/// CAT: finite category presentations ({"objects", "morphisms", "compose",
/// "identities"}).
std::string write_cat(const Category& c);
Category read_cat(const std::string& text);

/// OPD: colored operad presentations ({"colors", "operations",
/// "composition", "symmetry"}).
std::string write_opd(const ColoredOperad& p);
ColoredOperad read_opd(const std::string& text);

/// SMAP: simplicial map assignments ({"assign": id -> {"degens","base"}}),
/// resolved against explicitly supplied source and target complexes.
std::string write_smap(const SMap& m);
SMap read_smap(const std::string& text, const SSetPtr& src, const SSetPtr& dst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace dcat
