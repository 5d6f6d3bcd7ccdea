#pragma once

#include <string>
#include <vector>

#include "syzstab/gallery.hpp"
#include "syzstab/koszul.hpp"

namespace syzstab {

/// The full regression list. Each result names its source.
std::vector<CheckResult> verify_anchors(Exec exec = Exec::parallel);

/// "p,q:dim" for every nonzero cell, space separated.
std::string nonzero_cells(const BettiTable& t);

}  // namespace syzstab
