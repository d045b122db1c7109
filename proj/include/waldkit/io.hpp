#pragma once

#include <string>

#include "waldkit/fincat.hpp"
#include "waldkit/ordstar.hpp"

namespace waldkit {

// Category files: objects, morphisms {id, src, dst}, compose {g, f, gf},
// identities {object: morphism}, zero, cofibrations, pushouts
// {cof, along, obj, inc_cof, inc_other}.  Every reference is by name.
// Malformed input raises StructuralError with the origin and a field path.
FinCofCategory read_category(const std::string& text, const std::string& origin);
std::string write_category(const FinCofCategory& C);
FinCofCategory load_category(const std::string& path);

// Y files: cap, levels, faces and degeneracies as {n, i, images}.
SimplicialOrd read_Y(const std::string& text, const std::string& origin);
std::string write_Y(const SimplicialOrd& Y);
SimplicialOrd load_Y(const std::string& path);

// Homotopy files: source and target Y (file path or builtin name, resolved
// relative to the file), f and g as {n, images}, h as {n, i, images}.
HomotopyInstance read_homotopy(const std::string& text, const std::string& origin, int cap);
std::string write_homotopy(const HomotopyInstance& H, const std::string& source, const std::string& target);

// circle, const0, point_plus, interval_plus; StructuralError otherwise.
SimplicialOrd builtin_Y(const std::string& name, int cap);
bool is_builtin_Y(const std::string& name);
// trivial, chain2, chain3, diamond.
FinCofCategory builtin_category(const std::string& name);
bool is_builtin_category(const std::string& name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace waldkit
