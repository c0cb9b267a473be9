#pragma once

#include <string>

#include "bollobas/covering.hpp"
#include "bollobas/families.hpp"

namespace bollobas {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A family system as stored on disk; the file carries the intended t.
struct FamilyFile {
    FamilySystem sys;
    int t = 2;
};

// Format: {"n":..,"k":..,"m":..,"t":..,"families":[[[e,e,...],...],...]}
// with 0-based, strictly increasing element lists. Parsing is strict: wrong
// types, out-of-range elements and unsorted/duplicate elements are errors
// that name the offending family/column.
FamilyFile parse_family_json(const std::string& text);
std::string emit_family_json(const FamilySystem& sys, int t);

// Format: {"k":..,"t":..,"n":..,"blocks":[{"parts":[[v,...],...]},...]}
PartiteCover parse_cover_json(const std::string& text);
std::string emit_cover_json(const PartiteCover& cover);

FamilyFile load_family_file(const std::string& path);
PartiteCover load_cover_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bollobas
