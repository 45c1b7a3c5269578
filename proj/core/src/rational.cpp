#include "morse/rational.hpp"

namespace morse {

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace morse
