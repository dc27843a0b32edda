#include "toralg/config.hpp"

namespace toralg {

std::size_t Config::max_rank = 8;
std::size_t Config::oracle_degree_bound = 12;
std::size_t Config::root_box_factor = 10;

}  // namespace toralg
