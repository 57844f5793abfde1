#pragma once

#include <string>
#include <vector>

namespace twocs {

// Outcome of one exhaustive or numeric check.
struct CheckReport {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  long long checked = 0;
  std::vector<std::string> witnesses;

  void fail(std::string witness, std::size_t keep = 8) {
    pass = false;
    if (witnesses.size() < keep) witnesses.push_back(std::move(witness));
  }
  void absorb(const CheckReport& other) {
    pass = pass && other.pass;
    if (other.residual > residual) residual = other.residual;
    checked += other.checked;
    for (const auto& w : other.witnesses)
      if (witnesses.size() < 8) witnesses.push_back(other.name + ": " + w);
  }
};

inline CheckReport make_report(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  return r;
}

}  // namespace twocs
