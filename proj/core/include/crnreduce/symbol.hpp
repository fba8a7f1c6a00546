#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace crnreduce {

enum class SymbolKind : std::uint8_t { concentration, rate_constant, total_amount };

/// Total order on names that compares embedded digit runs numerically, so
/// k2 sorts before k10. Ties in numeric value fall back to plain comparison.
std::strong_ordering compare_names(const std::string& a, const std::string& b) noexcept;

/// Interned named variable. Copies are pointer-sized; equality is identity of
/// (kind, name). Ordering is by kind, then by name.
class Symbol {
 public:
  Symbol();
  Symbol(SymbolKind kind, const std::string& name);

  static Symbol concentration(const std::string& name) {
    return Symbol(SymbolKind::concentration, name);
  }
  static Symbol rate_constant(const std::string& name) {
    return Symbol(SymbolKind::rate_constant, name);
  }
  static Symbol total(const std::string& name) { return Symbol(SymbolKind::total_amount, name); }

  SymbolKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return *name_; }

  /// Concentrations render as `[Name]`, everything else as the bare name.
  std::string to_string() const;

  /// Consistent with ==; not with the ordering.
  std::size_t hash() const noexcept {
    return reinterpret_cast<std::uintptr_t>(name_) * 4 + static_cast<std::size_t>(kind_);
  }

  friend bool operator==(const Symbol& a, const Symbol& b) noexcept {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return compare_names(*a.name_, *b.name_);
  }

 private:
  SymbolKind kind_;
  const std::string* name_;
};

}  // namespace crnreduce
