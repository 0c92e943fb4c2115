#include "dz/passport.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dz {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int v : parts)
    if (v <= 0) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}

Partition Partition::from_profile(const std::map<int, int>& profile) {
  std::vector<int> parts;
  for (const auto& [mult, count] : profile)
    for (int i = 0; i < count; ++i) parts.push_back(mult);
  return Partition(std::move(parts));
}

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
    }
    while (pos < tok.size() && isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size())
      throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("Partition::parse: empty partition");
  return Partition(std::move(parts));
}

Passport::Passport(Partition b, Partition w) : black(std::move(b)), white(std::move(w)) {
  if (black.weight() != white.weight())
    throw std::invalid_argument("Passport: partitions must share their weight");
}

Passport Passport::parse(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("Passport::parse: expected 'black|white'");
  return Passport(Partition::parse(s.substr(0, bar)),
                  Partition::parse(s.substr(bar + 1)));
}

}  // namespace dz
