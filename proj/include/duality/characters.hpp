#pragma once

#include "duality/partition.hpp"

namespace duality {

/// Irreducible character chi^lambda of S_d evaluated at the conjugacy class
/// of cycle type rho (Murnaghan-Nakayama).  |lambda| must equal |rho|.
Int sym_character(const Partition& lambda, const CycleType& rho);

/// Size of the conjugacy class of cycle type rho in S_d, d = |rho|.
Int conjugacy_class_size(const CycleType& rho);

/// Order of the centralizer of an element of cycle type rho:
/// prod_k k^{m_k} m_k!.
Int centralizer_order(const CycleType& rho);

}  // namespace duality
