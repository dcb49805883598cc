#pragma once

#include <string>
#include <string_view>

namespace nafaba {

inline constexpr std::string_view kNafPrefix = "not ";

/// `[a-z][A-Za-z0-9_]*`, excluding the reserved word `not`.
inline bool is_atom_name(std::string_view s) {
  if (s.empty() || s.front() < 'a' || s.front() > 'z' || s == "not")
    return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok)
      return false;
  }
  return true;
}

/// `not <atom>` with exactly one space.
inline bool is_naf_name(std::string_view s) {
  return s.substr(0, kNafPrefix.size()) == kNafPrefix && is_atom_name(s.substr(kNafPrefix.size()));
}

inline std::string naf_name(std::string_view atom) { return std::string(kNafPrefix) + std::string(atom); }

/// Atom underneath a naf-shaped name.
inline std::string_view naf_atom(std::string_view s) { return s.substr(kNafPrefix.size()); }

/// Atom-shaped spelling of an atom or naf-atom name (`not p` becomes `not_p`).
inline std::string atomize(std::string_view s) {
  if (is_naf_name(s))
    return "not_" + std::string(naf_atom(s));
  return std::string(s);
}

} // namespace nafaba
