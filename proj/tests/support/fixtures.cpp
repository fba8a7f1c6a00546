#include "fixtures.hpp"

#include <fstream>
#include <sstream>

#include "crnreduce/error.hpp"

namespace crnreduce::testing {

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(CRNREDUCE_FIXTURE_DIR) + "/" + name);
  if (!in) throw Error(ErrorCode::io_error, "missing fixture " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ReactionNetwork load_fixture(const std::string& name) { return parse_network(fixture_text(name)); }

RationalFunction rf(const std::string& expression, const std::set<std::string>& totals) {
  return parse_expression(expression, totals).expand();
}

}  // namespace crnreduce::testing
