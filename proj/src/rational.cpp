#include "admperm/rational.hpp"

#include <cstdlib>

namespace admperm {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  std::size_t slash = s.find('/');
  auto to_ll = [](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("Rat::parse: empty component");
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("Rat::parse: not a number: " + part);
    }
    if (pos != part.size())
      throw std::invalid_argument("Rat::parse: trailing characters: " + part);
    return v;
  };
  if (slash == std::string::npos) return Rat(to_ll(s));
  return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

}  // namespace admperm
