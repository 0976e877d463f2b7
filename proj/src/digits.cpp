#include "junctionlab/digits.hpp"

namespace junctionlab {

template std::vector<std::uint32_t> digits_of<Nat>(Nat, Base);
template Nat digit_sum<Nat>(Nat, Base);
template Nat step<Nat>(const Nat&, Base);
template std::pair<Nat, Nat> generator_window<Nat>(const Nat&, Base);
template Nat complement<Nat>(std::uint32_t, std::uint64_t, const Nat&, Base);

}  // namespace junctionlab
