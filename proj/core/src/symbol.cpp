#include "crnreduce/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace crnreduce {

namespace {

const std::string* intern(const std::string& name) {
  // Node-based set: element addresses are stable for the process lifetime.
  static std::unordered_set<std::string> pool;
  static std::mutex guard;
  std::lock_guard lock(guard);
  return &*pool.insert(name).first;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::strong_ordering compare_names(const std::string& a, const std::string& b) noexcept {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      std::size_t si = i;
      std::size_t sj = j;
      while (si + 1 < ei && a[si] == '0') ++si;
      while (sj + 1 < ej && b[sj] == '0') ++sj;
      if (ei - si != ej - sj) return (ei - si) <=> (ej - sj);
      for (; si < ei; ++si, ++sj) {
        if (a[si] != b[sj]) return a[si] <=> b[sj];
      }
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) return a[i] <=> b[j];
    ++i;
    ++j;
  }
  if (i < a.size() || j < b.size()) return (a.size() - i) <=> (b.size() - j);
  int c = a.compare(b);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Symbol::Symbol() : kind_(SymbolKind::rate_constant), name_(intern("")) {}

Symbol::Symbol(SymbolKind kind, const std::string& name) : kind_(kind), name_(intern(name)) {}

std::string Symbol::to_string() const {
  if (kind_ == SymbolKind::concentration) return "[" + *name_ + "]";
  return *name_;
}

}  // namespace crnreduce
