#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regenum/powersum_poly.hpp"

namespace regenum {

// Atoms of the species mini-language. SET_K under the asymmetry index gives
// e_k; under the cycle index, h_k. MULTISET_K is the h_k atom regardless of
// mode, CYCLE_K the k-cycle index, LIST_K and SINGLETON plain p_1^k.
enum class AtomKind { SetK, MultisetK, CycleK, ListK, Singleton };

enum class IndexMode { CycleIndex, Asymmetry };  // Z vs Gamma

// Sign pattern of the outer layer: E[..] alternates (asymmetry series of
// sets), H[..] does not.
enum class OuterKind { SetOuter, MultisetOuter };

struct SpeciesAtom {
    AtomKind kind;
    int k;
    bool operator==(const SpeciesAtom&) const = default;
};

struct SpeciesExpr {
    std::vector<std::pair<SpeciesAtom, int>> inner;  // atom with multiplicity >= 1
    OuterKind outer = OuterKind::SetOuter;
    IndexMode mode = IndexMode::Asymmetry;

    // Canonical text of the expression, e.g. "E[e2]" or "H[e1+e2]".
    std::string canonical() const;
};

struct ClassPreset {
    std::string name;
    SpeciesExpr expr;
    std::string description;
};

// Index-series polynomial of one atom. Throws for unsupported pairs
// (asymmetry index of a cycle).
PowerSumPoly atom_index_poly(const SpeciesAtom& atom, IndexMode mode);

// Exponent polynomial g with exp(g) = (truncation of) the Z or Gamma series
// of the expression: g = sum_k sigma_k P(p_k, p_{2k}, ...)/k restricted to
// p_1..p_m and weighted degree <= W, where sigma_k is +1 for the H outer and
// (-1)^{k-1} for the E outer.
PowerSumPoly compile_exponent(const SpeciesExpr& expr, int m, long W);

// Grammar: outer E[...] or H[...] with '+'-separated atoms e<k>, h<k>, c<k>,
// l<k>, x (optionally with an integer multiplier like "2*e2"), or the
// composition forms Z(E o <atoms>) and G(E o <atoms>). Preset names are
// accepted too. Throws std::invalid_argument with a message on bad input.
SpeciesExpr parse_species(const std::string& text);

const std::vector<ClassPreset>& presets();
std::optional<SpeciesExpr> lookup_preset(const std::string& name);

// FNV-1a hash of the canonical preset catalog, hex-encoded; part of the
// version metadata reported by the CLI.
std::string preset_catalog_hash();

}  // namespace regenum
