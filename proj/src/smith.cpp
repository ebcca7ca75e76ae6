#include "bnsr/smith.hpp"

namespace bnsr {

AbelianInvariants cokernel(const IntMatrix& M) {
  auto snf = smith_normal_form(M);
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.rank = static_cast<std::size_t>(M.rows()) - nonzero;
  return out;
}

std::size_t smith_rank(const IntMatrix& M) {
  std::size_t r = 0;
  for (const auto& d : smith_normal_form(M).diagonal())
    if (d != 0) ++r;
  return r;
}

}  // namespace bnsr
