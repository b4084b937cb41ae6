#include "cubica/workbench.hpp"

namespace cubica {

Workbench::Workbench(int q, int max_q, kernels::Exec exec)
    : exec_(exec),
      field_(gf::Field::make(q, max_q)),
      space_(field_),
      cubic_(space_),
      group_(space_),
      pencils_(kernels::line_pencils(space_, exec)),
      taxonomy_(cubic_, group_, pencils_, exec) {}

}  // namespace cubica
