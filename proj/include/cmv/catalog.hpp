#pragma once

#include <vector>

#include "cmv/axiom.hpp"
#include "cmv/taxonomy.hpp"

namespace cmv {

// Every axiom of the metamodel, in group order. Per-arity families
// (COMPAT-REL, UNIQ-SPAN, UNIQ-EXTMATCH) are instantiated for n up to
// max_arity. The taxonomy axioms are generated from cat.
std::vector<Axiom> axiom_catalog(const TaxonomyCatalog& cat, size_t max_arity = 10);

// All group names, in catalog order.
std::vector<std::string> catalog_groups();

// Syntactic audit for membership in the two-variable counting fragment.
// Passes when the formula uses at most two variable names and no atom wider
// than binary, or when it matches one of two reifiable shapes over a single
// ternary atom: a universally quantified ternary typing axiom whose
// consequent combines unary atoms, or a counting axiom over the tuple of a
// ternary atom's remaining positions guarded by unary atoms.
bool audit_c2(const Formula& fm);

// One row per axiom: id, tier, bullet slug, note.
std::string manifest_tsv(const std::vector<Axiom>& axioms);

// The canonical bullet slug list (contents of docs/constraint-bullets.txt).
std::vector<std::string> bullet_slugs();

}  // namespace cmv
