#pragma once

#include <string>
#include <vector>

#include "sqk/chain.hpp"

namespace sqk {

/// A symmetric quandle with optional display names for its elements.
struct LabeledQuandle {
  SymmetricQuandle quandle;
  std::vector<std::string> labels;  // empty or one per element
};

namespace fixtures {

LabeledQuandle r3_identity();
/// R_4 with the antipodal map; e1=0, e2=1, e1'=2, e2'=3.
LabeledQuandle r4_antipodal();
/// T_2 with rho = id; e1=0, e2=1.
LabeledQuandle t2_identity();
/// T_2 with the swap.
LabeledQuandle t2_swap();
LabeledQuandle t1();
/// T_{2k} with rho pairing (0 1)(2 3)...; e1, e1', e2, e2', ...
LabeledQuandle trivial_paired(int k);
LabeledQuandle conj_s3();

/// (y, x1, x2) ↦ (y - x1)(x1 - x2)^2 x2 over Z/3 on (R_3, id) with Y = X.
Cocycle mochizuki();
/// Four-term 2-cocycle on (T_4, pairing), Y singleton, over Z.
Cocycle torus_link_cocycle();
/// Eight-term 3-cocycle on (T_6, pairing), Y singleton, over Z.
Cocycle t6_cocycle();
/// chi(e, e1, e2, e1) on (T_2, id), Y singleton, over Z/2.
Cocycle t2_cocycle();
/// Sixteen-term 3-cocycle on (R_4, antipodal), Y singleton, over Z:
/// ±chi(e, A, B, A) for (A, B) = (e1, e2) (+) and (e2, e1) (-), with the
/// sign alternating under priming the first or the last entry.
Cocycle r4_cocycle();
/// The same terms with the sign also alternating under priming the middle
/// entry. Not a cocycle: fails the rho condition.
Cocycle r4_cocycle_as_printed();

}  // namespace fixtures
}  // namespace sqk
