#include "skewdyck/kernel.hpp"

namespace skewdyck {

std::string_view mode_name(KernelMode m) {
  return m == KernelMode::Univariate ? "univariate" : "bivariate";
}

}  // namespace skewdyck
