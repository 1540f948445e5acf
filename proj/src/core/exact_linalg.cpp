#include "exact_linalg.hpp"

namespace quivext {

template class Mat<Rationals>;
template class Mat<PrimeField>;
template class Echelon<Rationals>;
template class Echelon<PrimeField>;

}  // namespace quivext
